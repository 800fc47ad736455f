#include "bricklab/matching.hpp"

#include <algorithm>
#include <ostream>
#include <string>

#include "bricklab/errors.hpp"
#include "dense_graph.hpp"

namespace bricklab {
namespace {

void check_scale(const MultiGraph& g, const MatchingOptions& options) {
  if (g.vertex_count() > options.max_vertices) {
    throw ScaleError("perfect matching enumeration limited to " + std::to_string(options.max_vertices) +
                     " vertices, got " + std::to_string(g.vertex_count()));
  }
}

class Enumerator {
 public:
  Enumerator(const MultiGraph& g, bool materialise, std::uint64_t limit)
      : dense_(g), alive_(dense_.size(), 1), materialise_(materialise), limit_(limit),
        per_edge_(dense_.edges.size(), 0) {}

  MatchingCensus run() {
    if (detail::has_perfect_matching(dense_, alive_)) descend();
    MatchingCensus census;
    census.count = count_;
    for (std::size_t i = 0; i < dense_.edges.size(); ++i) {
      census.per_edge_counts.emplace(dense_.edges[i].id, per_edge_[i]);
    }
    if (materialise_) {
      std::sort(found_.begin(), found_.end());
      census.matchings = std::move(found_);
    }
    return census;
  }

 private:
  bool done() const { return count_ >= limit_; }

  void descend() {
    int v = 0;
    while (v < dense_.size() && !alive_[v]) ++v;
    if (v == dense_.size()) {
      record();
      return;
    }
    alive_[v] = 0;
    for (int ei : dense_.incident[v]) {
      if (done()) break;
      const auto& e = dense_.edges[ei];
      const int w = e.a == v ? e.b : e.a;
      if (!alive_[w]) continue;
      alive_[w] = 0;
      if (detail::has_perfect_matching(dense_, alive_)) {
        chosen_.push_back(ei);
        descend();
        chosen_.pop_back();
      }
      alive_[w] = 1;
    }
    alive_[v] = 1;
  }

  void record() {
    ++count_;
    for (int ei : chosen_) ++per_edge_[ei];
    if (!materialise_) return;
    PerfectMatching m;
    m.reserve(chosen_.size());
    for (int ei : chosen_) m.push_back(dense_.edges[ei].id);
    std::sort(m.begin(), m.end());
    found_.push_back(std::move(m));
  }

  detail::DenseGraph dense_;
  std::vector<char> alive_;
  bool materialise_;
  std::uint64_t limit_;
  std::uint64_t count_ = 0;
  std::vector<std::uint64_t> per_edge_;
  std::vector<int> chosen_;
  std::vector<PerfectMatching> found_;
};

constexpr std::uint64_t kUnlimited = ~std::uint64_t{0};

}  // namespace

bool has_perfect_matching(const MultiGraph& g) {
  const detail::DenseGraph d(g);
  return detail::has_perfect_matching(d, std::vector<char>(d.size(), 1));
}

std::size_t maximum_matching_size(const MultiGraph& g) {
  const detail::DenseGraph d(g);
  return static_cast<std::size_t>(detail::maximum_matching_size(d, std::vector<char>(d.size(), 1)));
}

MatchingCensus enumerate_perfect_matchings(const MultiGraph& g, const MatchingOptions& options) {
  check_scale(g, options);
  return Enumerator(g, true, kUnlimited).run();
}

std::uint64_t count_perfect_matchings(const MultiGraph& g, const MatchingOptions& options) {
  check_scale(g, options);
  return Enumerator(g, false, kUnlimited).run().count;
}

std::uint64_t count_perfect_matchings_up_to(const MultiGraph& g, std::uint64_t limit,
                                            const MatchingOptions& options) {
  check_scale(g, options);
  if (limit == 0) return 0;
  return Enumerator(g, false, limit).run().count;
}

bool is_matching_covered(const MultiGraph& g) {
  if (g.edge_count() == 0 || !is_connected(g)) return false;
  const detail::DenseGraph d(g);
  std::vector<char> alive(d.size(), 1);
  std::vector<char> checked(static_cast<std::size_t>(d.size()) * d.size(), 0);
  for (const auto& e : d.edges) {
    // Parallel edges share the verdict.
    auto& seen = checked[static_cast<std::size_t>(std::min(e.a, e.b)) * d.size() + std::max(e.a, e.b)];
    if (seen) continue;
    seen = 1;
    alive[e.a] = alive[e.b] = 0;
    const bool ok = detail::has_perfect_matching(d, alive);
    alive[e.a] = alive[e.b] = 1;
    if (!ok) return false;
  }
  return true;
}

EdgeSet solitary_edges(const MultiGraph& g, const MatchingOptions& options) {
  check_scale(g, options);
  const MatchingCensus census = Enumerator(g, false, kUnlimited).run();
  EdgeSet out;
  for (const auto& [id, count] : census.per_edge_counts) {
    if (count == 1) out.push_back(id);
  }
  return out;
}

MatchingCensus matchings_through(const MultiGraph& g, EdgeId e, const MatchingOptions& options) {
  const Edge& edge = g.edge(e);
  check_scale(g, options);
  const MultiGraph rest = delete_vertices(g, normalized({edge.a, edge.b}));
  MatchingCensus inner = enumerate_perfect_matchings(rest, options);

  MatchingCensus census;
  census.count = inner.count;
  for (EdgeId id : g.edge_ids()) census.per_edge_counts.emplace(id, 0);
  census.per_edge_counts[e] = inner.count;
  for (const auto& [id, count] : inner.per_edge_counts) census.per_edge_counts[id] = count;
  std::vector<PerfectMatching> extended;
  for (auto m : *inner.matchings) {
    m.insert(std::upper_bound(m.begin(), m.end(), e), e);
    extended.push_back(std::move(m));
  }
  std::sort(extended.begin(), extended.end());
  census.matchings = std::move(extended);
  return census;
}

bool is_perfect_matching(const MultiGraph& g, const EdgeSet& m) {
  std::vector<int> covered(g.vertex_id_bound(), 0);
  if (normalized(m).size() != m.size()) return false;
  for (EdgeId id : m) {
    if (!g.has_edge(id)) return false;
    const Edge& e = g.edge(id);
    ++covered[e.a.value];
    ++covered[e.b.value];
  }
  for (VertexId v : g.vertices()) {
    if (covered[v.value] != 1) return false;
  }
  return true;
}

void write_matchings(std::ostream& out, const std::vector<PerfectMatching>& matchings) {
  for (const auto& m : matchings) {
    for (std::size_t i = 0; i < m.size(); ++i) out << (i ? " " : "") << m[i].value;
    out << '\n';
  }
}

}  // namespace bricklab
