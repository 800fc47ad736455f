#include "bricklab/brick_analysis.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "bricklab/errors.hpp"
#include "dense_graph.hpp"

namespace bricklab {
namespace {

void require_matching_covered(const MultiGraph& g, const char* what) {
  if (!is_matching_covered(g)) {
    throw PreconditionError(std::string(what) + ": graph is not matching covered");
  }
}

void check_cut(const MultiGraph& g, const EdgeCut& cut) {
  if (edge_cut(g, cut.side).edges != normalized(cut.edges)) {
    throw GraphError("cut edge set does not match its side");
  }
}

bool contains(const VertexSet& set, VertexId v) { return std::binary_search(set.begin(), set.end(), v); }

// Dense vertex masks for exhaustive scans over sides containing vertex 0.
std::uint64_t bit(int i) { return std::uint64_t{1} << i; }

VertexSet side_of_mask(const detail::DenseGraph& d, std::uint64_t mask) {
  VertexSet side;
  for (int i = 0; i < d.size(); ++i) {
    if (mask & bit(i)) side.push_back(d.vertex_of[i]);
  }
  return side;
}

template <typename Visit>
std::optional<VertexSet> scan_nontrivial_sides(const detail::DenseGraph& d, Visit&& accept) {
  const int n = d.size();
  if (n < 4) return std::nullopt;
  // X always contains dense vertex 0; X and its complement give the same cut.
  const std::uint64_t others = std::uint64_t{1} << (n - 1);
  for (std::uint64_t rest = 1; rest < others; ++rest) {
    const std::uint64_t mask = (rest << 1) | 1;
    const int size = std::popcount(mask);
    if (size < 2 || n - size < 2) continue;
    if (accept(mask, size)) return side_of_mask(d, mask);
  }
  return std::nullopt;
}

void check_scan_limit(const MultiGraph& g, std::size_t limit, const char* what) {
  if (g.vertex_count() > limit) {
    throw ScaleError(std::string(what) + " limited to " + std::to_string(limit) + " vertices, got " +
                     std::to_string(g.vertex_count()));
  }
}

std::string format_set(const MultiGraph& g, const VertexSet& set) {
  std::string out;
  for (VertexId v : set) out += (out.empty() ? "" : " ") + g.display_name(v);
  return out;
}

}  // namespace

std::int64_t matching_lattice_dimension(const MultiGraph& g) {
  return static_cast<std::int64_t>(g.edge_count()) - static_cast<std::int64_t>(g.vertex_count()) + 1;
}

bool is_tight_cut(const MultiGraph& g, const EdgeCut& cut, const MatchingOptions& options) {
  check_cut(g, cut);
  require_matching_covered(g, "tight cut test");
  const auto census = enumerate_perfect_matchings(g, options);
  const EdgeSet cut_edges = normalized(cut.edges);
  for (const auto& m : *census.matchings) {
    std::size_t hits = 0;
    for (EdgeId e : m) hits += std::binary_search(cut_edges.begin(), cut_edges.end(), e);
    if (hits != 1) return false;
  }
  return true;
}

bool is_separating_cut(const MultiGraph& g, const EdgeCut& cut) {
  check_cut(g, cut);
  return is_matching_covered(contract(g, cut.side)) && is_matching_covered(contract(g, complement(g, cut.side)));
}

bool is_brick_elp(const MultiGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n < 4 || n % 2 != 0) return false;
  if (!vertex_connectivity_at_least(g, 3)) return false;
  const detail::DenseGraph d(g);
  std::vector<char> alive(d.size(), 1);
  for (int x = 0; x < d.size(); ++x) {
    alive[x] = 0;
    for (int y = x + 1; y < d.size(); ++y) {
      alive[y] = 0;
      const bool ok = detail::has_perfect_matching(d, alive);
      alive[y] = 1;
      if (!ok) return false;
    }
    alive[x] = 1;
  }
  return true;
}

std::optional<VertexSet> find_nontrivial_tight_cut(const MultiGraph& g, const ScanLimits& limits) {
  check_scan_limit(g, limits.tight_cut_max_vertices, "tight cut scan");
  require_matching_covered(g, "tight cut scan");
  const detail::DenseGraph d(g);
  const auto census = enumerate_perfect_matchings(g, MatchingOptions{limits.tight_cut_max_vertices});
  std::vector<std::vector<std::pair<int, int>>> matchings;
  for (const auto& m : *census.matchings) {
    auto& pairs = matchings.emplace_back();
    for (EdgeId id : m) {
      const Edge& e = g.edge(id);
      pairs.emplace_back(d.index(e.a), d.index(e.b));
    }
  }
  return scan_nontrivial_sides(d, [&](std::uint64_t mask, int size) {
    if (size % 2 == 0) return false;  // parity forces an even intersection
    for (const auto& m : matchings) {
      int hits = 0;
      for (auto [a, b] : m) hits += ((mask >> a) ^ (mask >> b)) & 1;
      if (hits != 1) return false;
    }
    return true;
  });
}

bool is_brick_by_definition(const MultiGraph& g, const ScanLimits& limits) {
  check_scan_limit(g, limits.tight_cut_max_vertices, "brick definition test");
  if (!is_matching_covered(g) || is_bipartite(g)) return false;
  return !find_nontrivial_tight_cut(g, limits).has_value();
}

bool is_brace(const MultiGraph& g, const ScanLimits& limits) {
  check_scan_limit(g, limits.tight_cut_max_vertices, "brace test");
  if (!is_matching_covered(g) || !is_bipartite(g)) return false;
  return !find_nontrivial_tight_cut(g, limits).has_value();
}

bool is_extremal(const MultiGraph& g, const MatchingOptions& options) {
  const std::int64_t dim = matching_lattice_dimension(g);
  if (dim < 1) return false;
  // Any count above the dimension already decides the answer.
  const auto count = count_perfect_matchings_up_to(g, static_cast<std::uint64_t>(dim) + 1, options);
  return count == static_cast<std::uint64_t>(dim);
}

bool covers_cut(const MultiGraph& g, const EdgeCut& cut, VertexId x, VertexId y) {
  if (!contains(cut.side, x)) throw PreconditionError("covers_cut: x must lie in the cut side");
  if (!g.has_vertex(y) || contains(cut.side, y)) {
    throw PreconditionError("covers_cut: y must lie outside the cut side");
  }
  return std::all_of(cut.edges.begin(), cut.edges.end(),
                     [&](EdgeId e) { return g.edge(e).is_incident(x) || g.edge(e).is_incident(y); });
}

bool lemma1_brick_test(const MultiGraph& g, const EdgeCut& cut) {
  check_cut(g, cut);
  if (cut.trivial(g)) throw PreconditionError("cover-pair test: cut is trivial");
  if (!is_matching_covered(g)) throw PreconditionError("cover-pair test: G is not matching covered");
  const VertexSet outside = complement(g, cut.side);
  const MultiGraph shrink_side = contract(g, cut.side);
  const MultiGraph shrink_outside = contract(g, outside);
  if (!is_matching_covered(shrink_side) || !is_matching_covered(shrink_outside)) {
    throw PreconditionError("cover-pair test: cut is not separating");
  }
  if (!is_brick_elp(shrink_side)) throw PreconditionError("cover-pair test: G/X is not a brick");
  if (!is_brick_elp(shrink_outside)) throw PreconditionError("cover-pair test: G/complement(X) is not a brick");

  for (VertexId x : cut.side) {
    for (VertexId y : outside) {
      if (covers_cut(g, cut, x, y)) return false;
    }
  }
  return true;
}

bool extremal_insertion_check(const MultiGraph& g, VertexId u, const MatchingOptions& options) {
  if (g.degree(u) != 3) {
    throw PreconditionError("triangle insertion check needs a degree-3 vertex, " + g.display_name(u) +
                            " has degree " + std::to_string(g.degree(u)));
  }
  VertexSet removed = g.neighbors(u);
  removed.push_back(u);
  return count_perfect_matchings_up_to(delete_vertices(g, normalized(removed)), 2, options) == 1;
}

std::string to_string(SolidStatus::Kind kind) {
  switch (kind) {
    case SolidStatus::Kind::solid: return "solid";
    case SolidStatus::Kind::nonsolid: return "nonsolid";
    case SolidStatus::Kind::unknown: return "unknown-beyond-scale";
    case SolidStatus::Kind::unchecked: return "unchecked";
  }
  return "unchecked";
}

SolidStatus solid_status(const MultiGraph& g, const std::optional<VertexSet>& witness, const ScanLimits& limits) {
  if (witness) {
    const VertexSet side = normalized(*witness);
    const VertexSet outside = complement(g, side);
    if (side.size() < 2 || outside.size() < 2) {
      throw PreconditionError("solid witness defines a trivial cut");
    }
    if (!is_matching_covered(contract(g, side))) {
      throw PreconditionError("solid witness rejected: G/X is not matching covered");
    }
    if (!is_matching_covered(contract(g, outside))) {
      throw PreconditionError("solid witness rejected: G/complement(X) is not matching covered");
    }
    return {SolidStatus::Kind::nonsolid, side};
  }
  if (g.vertex_count() > limits.solid_max_vertices) return {SolidStatus::Kind::unknown, std::nullopt};

  const detail::DenseGraph d(g);
  auto found = scan_nontrivial_sides(d, [&](std::uint64_t mask, int) {
    const VertexSet side = side_of_mask(d, mask);
    return is_matching_covered(contract(g, side)) && is_matching_covered(contract(g, complement(g, side)));
  });
  if (found) return {SolidStatus::Kind::nonsolid, std::move(found)};
  return {SolidStatus::Kind::solid, std::nullopt};
}

AnalysisReport analyze_graph(const MultiGraph& g, const AnalysisRequest& request) {
  AnalysisReport r;
  r.vertices = g.vertex_count();
  r.edges = g.edge_count();
  r.is_connected = is_connected(g);
  r.is_bipartite = is_bipartite(g);
  r.is_matching_covered = is_matching_covered(g);
  r.is_three_connected = g.vertex_count() > 3 && vertex_connectivity_at_least(g, 3);
  r.is_brick = !r.is_bipartite && is_brick_elp(g);
  r.is_brace = r.is_bipartite && r.is_matching_covered && is_brace(g, request.limits);
  r.pm_count = count_perfect_matchings(g, request.matching);
  r.dimension = matching_lattice_dimension(g);
  r.is_extremal = r.is_brick && r.dimension >= 1 && r.pm_count == static_cast<std::uint64_t>(r.dimension);

  if (request.scan_tight_cuts) {
    if (r.is_matching_covered) {
      r.tight_cut = find_nontrivial_tight_cut(g, request.limits);
      r.tight_cut_scan = r.tight_cut ? AnalysisReport::TightCutScan::found : AnalysisReport::TightCutScan::none;
    }
  }
  if (request.solid_witness) {
    r.solid = solid_status(g, request.solid_witness, request.limits);
  } else if (request.scan_solid) {
    r.solid = solid_status(g, std::nullopt, request.limits);
  }
  return r;
}

namespace {

const char* yes_no(bool b) { return b ? "true" : "false"; }

std::string tight_scan_name(AnalysisReport::TightCutScan s) {
  switch (s) {
    case AnalysisReport::TightCutScan::not_run: return "not-run";
    case AnalysisReport::TightCutScan::none: return "none";
    case AnalysisReport::TightCutScan::found: return "found";
  }
  return "not-run";
}

}  // namespace

std::string to_key_value(const AnalysisReport& r, const MultiGraph& g) {
  std::ostringstream out;
  out << "vertices: " << r.vertices << '\n'
      << "edges: " << r.edges << '\n'
      << "connected: " << yes_no(r.is_connected) << '\n'
      << "bipartite: " << yes_no(r.is_bipartite) << '\n'
      << "matching_covered: " << yes_no(r.is_matching_covered) << '\n'
      << "three_connected: " << yes_no(r.is_three_connected) << '\n'
      << "brick: " << yes_no(r.is_brick) << '\n'
      << "brace: " << yes_no(r.is_brace) << '\n'
      << "pm_count: " << r.pm_count << '\n'
      << "dimension: " << r.dimension << '\n'
      << "extremal: " << yes_no(r.is_extremal) << '\n'
      << "solid: " << to_string(r.solid.kind) << '\n';
  if (r.solid.witness) out << "solid_witness: " << format_set(g, *r.solid.witness) << '\n';
  out << "tight_cut_scan: " << tight_scan_name(r.tight_cut_scan) << '\n';
  if (r.tight_cut) out << "tight_cut: " << format_set(g, *r.tight_cut) << '\n';
  return out.str();
}

std::string analysis_csv_header() {
  return "vertices,edges,connected,bipartite,matching_covered,three_connected,brick,brace,pm_count,dimension,"
         "extremal,solid,tight_cut_scan";
}

std::string to_csv_row(const AnalysisReport& r) {
  std::ostringstream out;
  out << r.vertices << ',' << r.edges << ',' << yes_no(r.is_connected) << ',' << yes_no(r.is_bipartite) << ','
      << yes_no(r.is_matching_covered) << ',' << yes_no(r.is_three_connected) << ',' << yes_no(r.is_brick) << ','
      << yes_no(r.is_brace) << ',' << r.pm_count << ',' << r.dimension << ',' << yes_no(r.is_extremal) << ','
      << to_string(r.solid.kind) << ',' << tight_scan_name(r.tight_cut_scan);
  return out.str();
}

}  // namespace bricklab
