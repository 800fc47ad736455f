#include "dense_graph.hpp"

#include <algorithm>
#include <deque>

namespace bricklab::detail {

DenseGraph::DenseGraph(const MultiGraph& g) : index_of(g.vertex_id_bound(), -1) {
  for (VertexId v : g.vertices()) {
    index_of[v.value] = static_cast<int>(vertex_of.size());
    vertex_of.push_back(v);
  }
  incident.resize(vertex_of.size());
  neighbours.resize(vertex_of.size());
  for (const Edge& e : g.edges()) {
    const int a = index_of[e.a.value];
    const int b = index_of[e.b.value];
    incident[a].push_back(static_cast<int>(edges.size()));
    incident[b].push_back(static_cast<int>(edges.size()));
    edges.push_back({a, b, e.id});
    neighbours[a].push_back(b);
    neighbours[b].push_back(a);
  }
  for (auto& list : neighbours) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
}

namespace {

// Edmonds' blossom algorithm, O(V^3): BFS for augmenting paths from each
// free vertex, shrinking odd cycles by tracking blossom bases.
class Blossom {
 public:
  Blossom(const DenseGraph& g, const std::vector<char>& alive)
      : g_(g), alive_(alive), n_(g.size()), match_(n_, -1), parent_(n_), base_(n_),
        in_queue_(n_), in_blossom_(n_) {}

  int run() {
    int size = 0;
    // Greedy start.
    for (int v = 0; v < n_; ++v) {
      if (!alive_[v] || match_[v] != -1) continue;
      for (int w : g_.neighbours[v]) {
        if (alive_[w] && match_[w] == -1) {
          match_[v] = w;
          match_[w] = v;
          ++size;
          break;
        }
      }
    }
    for (int v = 0; v < n_; ++v) {
      if (!alive_[v] || match_[v] != -1) continue;
      int end = find_augmenting_path(v);
      if (end == -1) continue;
      ++size;
      while (end != -1) {
        const int p = parent_[end];
        const int next = match_[p];
        match_[end] = p;
        match_[p] = end;
        end = next;
      }
    }
    return size;
  }

 private:
  int lowest_common_ancestor(int a, int b) {
    std::vector<char> seen(n_, 0);
    while (true) {
      a = base_[a];
      seen[a] = 1;
      if (match_[a] == -1) break;
      a = parent_[match_[a]];
    }
    while (true) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = in_blossom_[base_[match_[v]]] = 1;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  int find_augmenting_path(int root) {
    std::fill(parent_.begin(), parent_.end(), -1);
    std::fill(in_queue_.begin(), in_queue_.end(), 0);
    for (int i = 0; i < n_; ++i) base_[i] = i;
    std::deque<int> queue{root};
    in_queue_[root] = 1;
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      for (int to : g_.neighbours[v]) {
        if (!alive_[to]) continue;
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
          const int b = lowest_common_ancestor(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
          mark_path(v, b, to);
          mark_path(to, b, v);
          for (int i = 0; i < n_; ++i) {
            if (alive_[i] && in_blossom_[base_[i]]) {
              base_[i] = b;
              if (!in_queue_[i]) {
                in_queue_[i] = 1;
                queue.push_back(i);
              }
            }
          }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (match_[to] == -1) return to;
          in_queue_[match_[to]] = 1;
          queue.push_back(match_[to]);
        }
      }
    }
    return -1;
  }

  const DenseGraph& g_;
  const std::vector<char>& alive_;
  int n_;
  std::vector<int> match_;
  std::vector<int> parent_;
  std::vector<int> base_;
  std::vector<char> in_queue_;
  std::vector<char> in_blossom_;
};

}  // namespace

int maximum_matching_size(const DenseGraph& g, const std::vector<char>& alive) {
  return Blossom(g, alive).run();
}

bool has_perfect_matching(const DenseGraph& g, const std::vector<char>& alive) {
  int count = 0;
  for (int v = 0; v < g.size(); ++v) {
    if (!alive[v]) continue;
    ++count;
    const bool isolated = std::none_of(g.neighbours[v].begin(), g.neighbours[v].end(),
                                       [&](int w) { return alive[w] != 0; });
    if (isolated) return false;
  }
  if (count % 2 != 0) return false;
  if (count == 0) return true;
  return 2 * maximum_matching_size(g, alive) == count;
}

}  // namespace bricklab::detail
