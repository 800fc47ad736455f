#include "bricklab/graph.hpp"

#include <algorithm>
#include <deque>

#include "bricklab/errors.hpp"
#include "dense_graph.hpp"

namespace bricklab {

VertexSet normalized(VertexSet set) {
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  return set;
}

EdgeSet normalized(EdgeSet set) {
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  return set;
}

MultiGraph::VertexSlot& MultiGraph::slot(VertexId v) {
  if (!has_vertex(v)) throw GraphError("unknown vertex " + std::to_string(v.value));
  return vertex_slots_[v.value];
}

const MultiGraph::VertexSlot& MultiGraph::slot(VertexId v) const {
  if (!has_vertex(v)) throw GraphError("unknown vertex " + std::to_string(v.value));
  return vertex_slots_[v.value];
}

void MultiGraph::check_label(const std::string& label) const {
  if (label.empty()) throw GraphError("empty vertex label");
  if (std::any_of(label.begin(), label.end(),
                  [](unsigned char c) { return c <= ' '; })) {
    throw GraphError("vertex label '" + label + "' contains whitespace");
  }
  if (by_label_.contains(label)) throw GraphError("duplicate vertex label '" + label + "'");
}

void MultiGraph::insert_sorted(std::vector<EdgeId>& list, EdgeId e) {
  list.insert(std::upper_bound(list.begin(), list.end(), e), e);
}

VertexId MultiGraph::add_vertex(std::optional<std::string> label) {
  VertexId id{vertex_id_bound()};
  add_vertex_with_id(id, std::move(label));
  return id;
}

void MultiGraph::add_vertex_with_id(VertexId id, std::optional<std::string> label) {
  if (has_vertex(id)) throw GraphError("vertex id " + std::to_string(id.value) + " already in use");
  if (label) check_label(*label);
  if (id.value >= vertex_slots_.size()) vertex_slots_.resize(id.value + 1);
  auto& s = vertex_slots_[id.value];
  s.alive = true;
  s.incident.clear();
  if (label) by_label_.emplace(*label, id);
  s.label = std::move(label);
  ++vertex_count_;
}

EdgeId MultiGraph::add_edge(VertexId a, VertexId b) {
  EdgeId id{edge_id_bound()};
  add_edge_with_id(id, a, b);
  return id;
}

void MultiGraph::add_edge_with_id(EdgeId id, VertexId a, VertexId b) {
  if (a == b) throw GraphError("loop at vertex " + std::to_string(a.value) + " rejected");
  if (!has_vertex(a) || !has_vertex(b)) {
    throw GraphError("edge endpoint " + std::to_string((has_vertex(a) ? b : a).value) +
                     " is not a vertex");
  }
  if (has_edge(id)) throw GraphError("edge id " + std::to_string(id.value) + " already in use");
  if (id.value >= edge_slots_.size()) edge_slots_.resize(id.value + 1);
  edge_slots_[id.value] = Edge{id, a, b};
  insert_sorted(vertex_slots_[a.value].incident, id);
  insert_sorted(vertex_slots_[b.value].incident, id);
  ++edge_count_;
}

void MultiGraph::remove_edge(EdgeId e) {
  const Edge ed = edge(e);
  for (VertexId v : {ed.a, ed.b}) {
    auto& inc = vertex_slots_[v.value].incident;
    inc.erase(std::lower_bound(inc.begin(), inc.end(), e));
  }
  edge_slots_[e.value].reset();
  --edge_count_;
}

void MultiGraph::remove_vertex(VertexId v) {
  auto& s = slot(v);
  const std::vector<EdgeId> inc = s.incident;
  for (EdgeId e : inc) remove_edge(e);
  if (s.label) by_label_.erase(*s.label);
  s.label.reset();
  s.alive = false;
  --vertex_count_;
}

void MultiGraph::set_label(VertexId v, std::string label) {
  auto& s = slot(v);
  if (s.label == label) return;
  check_label(label);
  if (s.label) by_label_.erase(*s.label);
  by_label_.emplace(label, v);
  s.label = std::move(label);
}

bool MultiGraph::has_vertex(VertexId v) const noexcept {
  return v.value < vertex_slots_.size() && vertex_slots_[v.value].alive;
}

bool MultiGraph::has_edge(EdgeId e) const noexcept {
  return e.value < edge_slots_.size() && edge_slots_[e.value].has_value();
}

VertexSet MultiGraph::vertices() const {
  VertexSet out;
  out.reserve(vertex_count_);
  for (std::uint32_t i = 0; i < vertex_slots_.size(); ++i) {
    if (vertex_slots_[i].alive) out.push_back(VertexId{i});
  }
  return out;
}

std::vector<Edge> MultiGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (const auto& e : edge_slots_) {
    if (e) out.push_back(*e);
  }
  return out;
}

EdgeSet MultiGraph::edge_ids() const {
  EdgeSet out;
  out.reserve(edge_count_);
  for (const auto& e : edge_slots_) {
    if (e) out.push_back(e->id);
  }
  return out;
}

const Edge& MultiGraph::edge(EdgeId e) const {
  if (!has_edge(e)) throw GraphError("unknown edge " + std::to_string(e.value));
  return *edge_slots_[e.value];
}

std::span<const EdgeId> MultiGraph::incident_edges(VertexId v) const {
  return slot(v).incident;
}

VertexSet MultiGraph::neighbors(VertexId v) const {
  VertexSet out;
  for (EdgeId e : slot(v).incident) out.push_back(edge(e).other(v));
  return normalized(std::move(out));
}

std::size_t MultiGraph::multiplicity(VertexId a, VertexId b) const {
  return edges_between(a, b).size();
}

EdgeSet MultiGraph::edges_between(VertexId a, VertexId b) const {
  EdgeSet out;
  for (EdgeId e : slot(a).incident) {
    if (edge(e).other(a) == b) out.push_back(e);
  }
  return out;
}

const std::optional<std::string>& MultiGraph::label(VertexId v) const { return slot(v).label; }

std::string MultiGraph::display_name(VertexId v) const {
  const auto& l = label(v);
  return l ? *l : std::to_string(v.value);
}

std::optional<VertexId> MultiGraph::find_vertex(std::string_view label) const {
  auto it = by_label_.find(std::string(label));
  if (it == by_label_.end()) return std::nullopt;
  return it->second;
}

VertexId MultiGraph::vertex(std::string_view label) const {
  if (auto v = find_vertex(label)) return *v;
  throw GraphError("no vertex labelled '" + std::string(label) + "'");
}

namespace {

std::vector<char> membership(const MultiGraph& g, const VertexSet& x) {
  std::vector<char> in(g.vertex_id_bound(), 0);
  for (VertexId v : x) {
    if (!g.has_vertex(v)) throw GraphError("unknown vertex " + std::to_string(v.value));
    in[v.value] = 1;
  }
  return in;
}

void require_proper_side(const MultiGraph& g, const VertexSet& x) {
  if (x.empty()) throw GraphError("cut side is empty");
  if (normalized(x).size() >= g.vertex_count()) throw GraphError("cut side is the whole vertex set");
}

}  // namespace

VertexSet complement(const MultiGraph& g, const VertexSet& x) {
  const auto in = membership(g, x);
  VertexSet out;
  for (VertexId v : g.vertices()) {
    if (!in[v.value]) out.push_back(v);
  }
  return out;
}

EdgeCut edge_cut(const MultiGraph& g, const VertexSet& x) {
  const auto in = membership(g, x);
  require_proper_side(g, x);
  EdgeCut cut{normalized(x), {}};
  for (const Edge& e : g.edges()) {
    if (in[e.a.value] != in[e.b.value]) cut.edges.push_back(e.id);
  }
  return cut;
}

MultiGraph contract(const MultiGraph& g, const VertexSet& x, std::optional<std::string> new_label) {
  const auto in = membership(g, x);
  require_proper_side(g, x);
  MultiGraph out;
  for (VertexId v : g.vertices()) {
    if (!in[v.value]) out.add_vertex_with_id(v, g.label(v));
  }
  const VertexId hub{g.vertex_id_bound()};
  out.add_vertex_with_id(hub, std::move(new_label));
  for (const Edge& e : g.edges()) {
    const bool ia = in[e.a.value], ib = in[e.b.value];
    if (ia && ib) continue;
    out.add_edge_with_id(e.id, ia ? hub : e.a, ib ? hub : e.b);
  }
  return out;
}

MultiGraph delete_vertices(const MultiGraph& g, const VertexSet& s) {
  const auto in = membership(g, s);
  MultiGraph out;
  for (VertexId v : g.vertices()) {
    if (!in[v.value]) out.add_vertex_with_id(v, g.label(v));
  }
  for (const Edge& e : g.edges()) {
    if (!in[e.a.value] && !in[e.b.value]) out.add_edge_with_id(e.id, e.a, e.b);
  }
  return out;
}

MultiGraph simplify(const MultiGraph& g) {
  MultiGraph out;
  for (VertexId v : g.vertices()) out.add_vertex_with_id(v, g.label(v));
  for (const Edge& e : g.edges()) {
    if (out.multiplicity(e.a, e.b) == 0) out.add_edge_with_id(e.id, e.a, e.b);
  }
  return out;
}

bool is_connected(const MultiGraph& g) {
  const detail::DenseGraph d(g);
  if (d.size() == 0) return true;
  std::vector<char> seen(d.size(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : d.neighbours[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == d.size();
}

bool is_bipartite(const MultiGraph& g) {
  const detail::DenseGraph d(g);
  std::vector<int> colour(d.size(), -1);
  for (int s = 0; s < d.size(); ++s) {
    if (colour[s] != -1) continue;
    colour[s] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      for (int w : d.neighbours[v]) {
        if (colour[w] == -1) {
          colour[w] = 1 - colour[v];
          queue.push_back(w);
        } else if (colour[w] == colour[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

namespace {

// Number of internally vertex-disjoint s-t paths, stopping once `limit` is
// reached. Vertex splitting: node 2v is v_in, 2v+1 is v_out.
int local_connectivity(const detail::DenseGraph& d, int s, int t, int limit) {
  const int n = d.size();
  struct Arc {
    int to;
    int cap;
  };
  std::vector<Arc> arcs;
  std::vector<std::vector<int>> out(2 * n);
  auto add_arc = [&](int from, int to, int cap) {
    out[from].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({to, cap});
    out[to].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({from, 0});
  };
  for (int v = 0; v < n; ++v) add_arc(2 * v, 2 * v + 1, (v == s || v == t) ? limit : 1);
  for (int v = 0; v < n; ++v) {
    for (int w : d.neighbours[v]) add_arc(2 * v + 1, 2 * w, 1);
  }

  const int source = 2 * s + 1;
  const int sink = 2 * t;
  int flow = 0;
  std::vector<int> via(2 * n);
  while (flow < limit) {
    std::fill(via.begin(), via.end(), -1);
    std::deque<int> queue{source};
    via[source] = -2;
    while (!queue.empty() && via[sink] == -1) {
      const int v = queue.front();
      queue.pop_front();
      for (int a : out[v]) {
        if (arcs[a].cap > 0 && via[arcs[a].to] == -1) {
          via[arcs[a].to] = a;
          queue.push_back(arcs[a].to);
        }
      }
    }
    if (via[sink] == -1) break;
    for (int v = sink; v != source;) {
      const int a = via[v];
      arcs[a].cap -= 1;
      arcs[a ^ 1].cap += 1;
      v = arcs[a ^ 1].to;
    }
    ++flow;
  }
  return flow;
}

}  // namespace

bool vertex_connectivity_at_least(const MultiGraph& g, unsigned k) {
  if (k == 0) throw GraphError("connectivity threshold must be positive");
  if (g.vertex_count() <= k) {
    throw GraphError("vertex connectivity test needs more than " + std::to_string(k) +
                     " vertices, graph has " + std::to_string(g.vertex_count()));
  }
  const detail::DenseGraph d(g);
  const int n = d.size();
  std::vector<char> adjacent(static_cast<std::size_t>(n) * n, 0);
  for (int v = 0; v < n; ++v) {
    for (int w : d.neighbours[v]) adjacent[static_cast<std::size_t>(v) * n + w] = 1;
  }
  // Menger: k-connected iff every nonadjacent pair is joined by k disjoint paths.
  for (int s = 0; s < n; ++s) {
    for (int t = s + 1; t < n; ++t) {
      if (adjacent[static_cast<std::size_t>(s) * n + t]) continue;
      if (local_connectivity(d, s, t, static_cast<int>(k)) < static_cast<int>(k)) return false;
    }
  }
  return true;
}

}  // namespace bricklab
