#pragma once

// Test-only reference implementations. They share nothing with the library's
// algorithms beyond the MultiGraph container.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "bricklab/constructions.hpp"
#include "bricklab/graph.hpp"

namespace bricklab::testing {

/// Every perfect matching found by trying all |V|/2-subsets of edges.
inline std::vector<EdgeSet> naive_perfect_matchings(const MultiGraph& g) {
  std::vector<EdgeSet> out;
  const auto edges = g.edges();
  const std::size_t half = g.vertex_count() / 2;
  if (g.vertex_count() % 2 != 0 || edges.size() < half) return out;
  if (half == 0) return {EdgeSet{}};
  std::vector<char> pick(edges.size(), 0);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(half), 1);
  do {
    std::vector<int> hits(g.vertex_id_bound(), 0);
    EdgeSet m;
    bool ok = true;
    for (std::size_t i = 0; i < edges.size() && ok; ++i) {
      if (!pick[i]) continue;
      ok = ++hits[edges[i].a.value] == 1 && ++hits[edges[i].b.value] == 1;
      m.push_back(edges[i].id);
    }
    if (ok) out.push_back(m);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  std::sort(out.begin(), out.end());
  return out;
}

/// Isomorphism by trying every bijection (|V| <= 9).
inline bool brute_force_isomorphic(const MultiGraph& g, const MultiGraph& h) {
  if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
  const auto vg = g.vertices();
  auto vh = h.vertices();
  do {
    bool ok = true;
    for (std::size_t a = 0; a < vg.size() && ok; ++a) {
      for (std::size_t b = a + 1; b < vg.size() && ok; ++b) {
        ok = g.multiplicity(vg[a], vg[b]) == h.multiplicity(vh[a], vh[b]);
      }
    }
    if (ok) return true;
  } while (std::next_permutation(vh.begin(), vh.end()));
  return false;
}

/// Connected simple cubic graph on n vertices from the pairing model.
inline MultiGraph random_cubic(unsigned n, std::mt19937& rng) {
  while (true) {
    std::vector<std::uint32_t> points;
    for (std::uint32_t v = 0; v < n; ++v) points.insert(points.end(), {v, v, v});
    std::shuffle(points.begin(), points.end(), rng);
    MultiGraph g;
    for (unsigned v = 0; v < n; ++v) g.add_vertex();
    bool simple = true;
    for (std::size_t i = 0; i < points.size() && simple; i += 2) {
      const VertexId a{points[i]}, b{points[i + 1]};
      if (a == b || g.multiplicity(a, b) > 0) {
        simple = false;
      } else {
        g.add_edge(a, b);
      }
    }
    if (simple && is_connected(g)) return g;
  }
}

struct NamedGraph {
  std::string name;
  MultiGraph graph;
};

/// Small graphs (<= 12 vertices) for oracle comparisons.
inline std::vector<NamedGraph> small_corpus() {
  std::vector<NamedGraph> c;
  for (unsigned k = 3; k <= 11; ++k) c.push_back({"W" + std::to_string(k), wheel(k)});
  c.push_back({"K4", complete_graph(4)});
  c.push_back({"K6", complete_graph(6)});
  c.push_back({"prism", triangular_prism()});
  c.push_back({"C6", cycle_graph(6)});
  c.push_back({"C8", cycle_graph(8)});
  c.push_back({"K33", complete_bipartite_graph(3, 3)});
  c.push_back({"K24", complete_bipartite_graph(2, 4)});
  c.push_back({"petersen", petersen_graph()});
  c.push_back({"P4", path_graph(4)});
  c.push_back({"P6", path_graph(6)});
  c.push_back({"G'_1", apex_ladder(1)});
  {
    MultiGraph k4_doubled = complete_graph(4);
    k4_doubled.add_edge(VertexId{0}, VertexId{1});
    c.push_back({"K4+parallel", std::move(k4_doubled)});
  }
  std::mt19937 rng(20241019);
  for (unsigned n : {8u, 8u, 10u, 10u, 12u, 12u}) {
    c.push_back({"cubic" + std::to_string(n) + "-" + std::to_string(c.size()), random_cubic(n, rng)});
  }
  return c;
}

}  // namespace bricklab::testing
