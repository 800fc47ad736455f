// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
// Every comparison is exact integer or set equality (tolerance 0).

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <exception>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "bricklab/brick_analysis.hpp"
#include "bricklab/constructions.hpp"
#include "bricklab/isomorphism.hpp"
#include "bricklab/matching.hpp"
#include "bricklab/verifier.hpp"
#include "support/oracles.hpp"

using namespace bricklab;

namespace {

constexpr std::int64_t kTolerance = 0;
constexpr unsigned kSpliceTrials = 10;
constexpr std::uint32_t kSpliceSeed = 7321;
const IsomorphismOptions kIso{48};

bool exact(std::int64_t got, std::int64_t want) { return (got > want ? got - want : want - got) <= kTolerance; }

struct Outcome {
  bool ok = true;
  std::ostringstream detail;
  void expect(bool cond, const std::string& what) {
    if (!cond && ok) detail << what;
    ok = ok && cond;
  }
};

int failures = 0;

void criterion(int id, const std::string& title, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.ok = false;
    out.detail << "exception: " << e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << (out.ok ? "PASS" : "FAIL") << " criterion " << id << ": " << title;
  if (!out.ok) std::cout << " -- " << out.detail.str();
  std::cout << " (" << secs << " s)" << std::endl;
  if (!out.ok) ++failures;
}

std::vector<TheoremRow> theorem_rows;

}  // namespace

int main() {
  criterion(1, "family n=18..40: order, size, brick, matching count, extremal", [](Outcome& o) {
    theorem_rows = verify_theorem(18, 40);
    o.expect(theorem_rows.size() == 12, "expected 12 rows");
    for (const TheoremRow& r : theorem_rows) {
      const std::string at = "n=" + std::to_string(r.n) + ": ";
      const FamilyParams p = family_params(r.n);
      // Independent recomputation from the constructed graph.
      const MultiGraph g = family_member(r.n).graph;
      const auto count = static_cast<std::int64_t>(count_perfect_matchings(g));
      o.expect(exact(static_cast<std::int64_t>(g.vertex_count()), r.n), at + "vertex count");
      o.expect(exact(static_cast<std::int64_t>(g.edge_count()), p.t + 1 + 3 * r.n / 2), at + "edge count");
      o.expect(exact(count, (5 * r.n + 8 - p.i) / 8), at + "count vs (5n+8-i)/8");
      o.expect(exact(count, (5 * r.n + 7) / 8), at + "count vs ceil(5n/8)");
      o.expect(exact(count, static_cast<std::int64_t>(r.pm_count)), at + "row count");
      o.expect(is_brick_elp(g) && r.is_brick, at + "brick");
      o.expect(is_extremal(g) && r.is_extremal, at + "extremal");
    }
  });

  criterion(2, "family n=18..40: matching count below n-1", [](Outcome& o) {
    o.expect(!theorem_rows.empty(), "no rows from criterion 1");
    for (const TheoremRow& r : theorem_rows) {
      o.expect(r.pm_count < r.n - 1 && r.refutes, "n=" + std::to_string(r.n));
    }
  });

  criterion(3, "four-triangle wheel: 14 vertices, 22 edges, 9 matchings, extremal brick", [](Outcome& o) {
    const MultiGraph g0 = four_triangle_wheel();
    o.expect(exact(static_cast<std::int64_t>(g0.vertex_count()), 14), "vertices");
    o.expect(exact(static_cast<std::int64_t>(g0.edge_count()), 22), "edges");
    o.expect(exact(static_cast<std::int64_t>(count_perfect_matchings(g0)), 9), "matchings");
    o.expect(is_brick_elp(g0), "brick");
    o.expect(is_extremal(g0), "extremal");
  });

  criterion(4, "odd wheels k=3..15: k matchings, solitary spokes, extremal bricks, solid up to 13", [](Outcome& o) {
    for (unsigned k = 3; k <= 15; k += 2) {
      const std::string at = "k=" + std::to_string(k) + ": ";
      const MultiGraph w = wheel(k);
      o.expect(exact(static_cast<std::int64_t>(count_perfect_matchings(w)), k), at + "matchings");
      const EdgeSet solitary = solitary_edges(w);
      for (EdgeId spoke : w.incident_edges(w.vertex("h"))) {
        o.expect(std::binary_search(solitary.begin(), solitary.end(), spoke), at + "spoke not solitary");
      }
      o.expect(is_brick_elp(w), at + "brick");
      o.expect(is_extremal(w), at + "extremal");
      if (k <= 13) o.expect(solid_status(w).kind == SolidStatus::Kind::solid, at + "solid");
    }
  });

  criterion(5, "n=22,30,38: uu' solitary, unique matching of G-u-u' is the canonical one", [](Outcome& o) {
    for (unsigned n : {22u, 30u, 38u}) {
      const std::string at = "n=" + std::to_string(n) + ": ";
      const FamilyMember m = family_member(n);
      const EdgeId uu = labelled_edges(m.graph, {{"u", "u'"}}).front();
      o.expect(matchings_through(m.graph, uu).count == 1, at + "uu' not solitary");
      const MultiGraph rest = delete_vertices(m.graph, normalized({m.graph.vertex("u"), m.graph.vertex("u'")}));
      const auto census = enumerate_perfect_matchings(rest);
      o.expect(census.count == 1, at + "matching not unique");
      o.expect(census.count == 1 && census.matchings->front() == canonical_matching(m), at + "set differs");
    }
  });

  criterion(6, "chain: G''_n isomorphic to a triangle insertion into G''_{n-2}", [](Outcome& o) {
    for (unsigned n = 20; n <= 40; n += 2) {
      if (n % 8 == 2) continue;
      const FamilyMember prev = family_member(n - 2);
      const unsigned t = prev.params.t;
      const std::string host = n % 8 == 4 ? ladder_label(t, 2) : n % 8 == 6 ? ladder_label(t, 4) : "u";
      const MultiGraph grown = triangle_insert(prev.graph, prev.graph.vertex(host)).graph;
      const MultiGraph target = family_member(n).graph;
      const auto map = find_isomorphism(target, grown, kIso);
      o.expect(map && is_isomorphism(target, grown, *map), "n=" + std::to_string(n));
    }
  });

  criterion(7, "corpus: pruned enumerator equals subset oracle, both brick tests agree", [](Outcome& o) {
    const auto corpus = testing::small_corpus();
    o.expect(corpus.size() >= 20, "corpus too small");
    for (const auto& [name, g] : corpus) {
      const auto census = enumerate_perfect_matchings(g);
      o.expect(*census.matchings == testing::naive_perfect_matchings(g), name + ": enumeration");
      if (g.vertex_count() % 2 == 0) o.expect(is_brick_elp(g) == is_brick_by_definition(g), name + ": brick tests");
    }
  });

  criterion(8, "10 random splices: both contraction identities", [](Outcome& o) {
    const auto corpus = testing::small_corpus();
    std::mt19937 rng(kSpliceSeed);
    auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
    unsigned done = 0;
    while (done < kSpliceTrials) {
      const MultiGraph& g = corpus[pick(corpus.size())].graph;
      const MultiGraph& h = corpus[pick(corpus.size())].graph;
      const auto gv = g.vertices(), hv = h.vertices();
      const VertexId u = gv[pick(gv.size())], v = hv[pick(hv.size())];
      if (g.degree(u) != h.degree(v) || g.degree(u) == 0) continue;
      std::vector<EdgeId> target(h.incident_edges(v).begin(), h.incident_edges(v).end());
      std::shuffle(target.begin(), target.end(), rng);
      EdgeBijection theta;
      const auto star = g.incident_edges(u);
      for (std::size_t k = 0; k < star.size(); ++k) theta.emplace_back(star[k], target[k]);
      const MultiGraph s = splice(g, u, h, v, theta).graph;
      VertexSet g_side;
      for (VertexId x : gv) {
        if (x != u) g_side.push_back(x);
      }
      const std::string at = "trial " + std::to_string(done) + ": ";
      o.expect(find_isomorphism(contract(s, g_side), h, kIso).has_value(), at + "contracting the g side");
      o.expect(find_isomorphism(contract(s, complement(s, g_side)), g, kIso).has_value(), at + "contracting the h side");
      ++done;
    }
  });

  criterion(9, "cover-pair test on G'_t, t=1..3, agrees with pair-deletion test", [](Outcome& o) {
    for (unsigned t = 1; t <= 3; ++t) {
      const MultiGraph g = apex_ladder(t);
      const bool lemma = lemma1_brick_test(g, edge_cut(g, last_rung_side(t)));
      o.expect(lemma, "t=" + std::to_string(t) + ": false");
      o.expect(lemma == is_brick_elp(g), "t=" + std::to_string(t) + ": disagrees");
    }
  });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
