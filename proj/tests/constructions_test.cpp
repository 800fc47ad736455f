#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "bricklab/brick_analysis.hpp"
#include "bricklab/constructions.hpp"
#include "bricklab/errors.hpp"
#include "bricklab/isomorphism.hpp"
#include "support/oracles.hpp"

using namespace bricklab;

namespace {

using LabelPair = std::pair<std::string, std::string>;

// Edge multiset by endpoint labels, independent of ids.
std::multiset<LabelPair> label_edges(const MultiGraph& g) {
  std::multiset<LabelPair> out;
  for (const Edge& e : g.edges()) {
    auto a = g.display_name(e.a), b = g.display_name(e.b);
    if (b < a) std::swap(a, b);
    out.insert({a, b});
  }
  return out;
}

// The ladder written out edge by edge from its definition.
std::multiset<LabelPair> reference_ladder_edges(unsigned t, bool with_apex) {
  std::multiset<LabelPair> out;
  auto add = [&](std::string a, std::string b) {
    if (b < a) std::swap(a, b);
    out.insert({a, b});
  };
  for (unsigned s = 0; s <= t; ++s) {
    for (unsigned j = 1; j < 4; ++j) add(ladder_label(s, j), ladder_label(s, j + 1));
  }
  for (unsigned s = 0; s < t; ++s) {
    add(ladder_label(s, 1), ladder_label(s + 1, 1));
    add(ladder_label(s, 4), ladder_label(s + 1, 3));
  }
  add("u", ladder_label(t, 1));
  add("u", ladder_label(t, 4));
  if (with_apex) {
    std::vector<std::string> s_set{ladder_label(0, 1), ladder_label(0, 3), "u"};
    for (unsigned s = 0; s <= t; ++s) {
      s_set.push_back(ladder_label(s, 2));
      s_set.push_back(ladder_label(s, 4));
    }
    for (const auto& v : s_set) add("u'", v);
  }
  return out;
}

std::vector<std::size_t> degree_sequence(const MultiGraph& g) {
  std::vector<std::size_t> out;
  for (VertexId v : g.vertices()) out.push_back(g.degree(v));
  std::sort(out.begin(), out.end());
  return out;
}

bool isomorphic(const MultiGraph& a, const MultiGraph& b) {
  return find_isomorphism(a, b, IsomorphismOptions{48}).has_value();
}

}  // namespace

TEST_CASE("wheel") {
  const MultiGraph w5 = wheel(5);
  CHECK(w5.vertex_count() == 6);
  CHECK(w5.edge_count() == 10);
  CHECK(w5.degree(w5.vertex("h")) == 5);
  CHECK(count_perfect_matchings(w5) == 5);
  CHECK(isomorphic(wheel(3), complete_graph(4)));
  CHECK_FALSE(has_perfect_matching(wheel(4)));
  CHECK_THROWS_AS(wheel(2), PreconditionError);
}

TEST_CASE("splice sizes and errors") {
  const MultiGraph g = wheel(5), h = wheel(5);
  const VertexId u = g.vertex("h"), v = h.vertex("h");
  EdgeBijection theta;
  const auto gu = g.incident_edges(u), hv = h.incident_edges(v);
  for (std::size_t k = 0; k < gu.size(); ++k) theta.emplace_back(gu[k], hv[k]);
  const SpliceResult r = splice(g, u, h, v, theta);
  CHECK(r.graph.vertex_count() == g.vertex_count() + h.vertex_count() - 2);
  CHECK(r.graph.edge_count() == g.edge_count() + h.edge_count() - 5);
  for (VertexId x : g.vertices()) {
    if (x != u) CHECK(r.graph.has_vertex(x));
  }
  CHECK(r.from_h.size() == h.vertex_count() - 1);

  CHECK_THROWS_AS(splice(g, u, complete_graph(4), VertexId{0}, theta), PreconditionError);
  EdgeBijection repeated = theta;
  repeated[1].second = repeated[0].second;
  CHECK_THROWS_AS(splice(g, u, h, v, repeated), PreconditionError);
  EdgeBijection foreign = theta;
  foreign[0].first = g.incident_edges(g.vertex("r1")).back();
  if (!std::binary_search(gu.begin(), gu.end(), foreign[0].first)) {
    CHECK_THROWS_AS(splice(g, u, h, v, foreign), PreconditionError);
  }
  CHECK_THROWS_AS(splice(g, u, h, v, EdgeBijection(theta.begin(), theta.end() - 1)), PreconditionError);
}

TEST_CASE("splicing two K_4 gives the prism for every bijection") {
  const MultiGraph k4 = complete_graph(4);
  const auto ga = k4.incident_edges(VertexId{0});
  std::vector<EdgeId> hb(k4.incident_edges(VertexId{1}).begin(), k4.incident_edges(VertexId{1}).end());
  std::sort(hb.begin(), hb.end());
  int bijections = 0;
  do {
    EdgeBijection theta;
    for (std::size_t k = 0; k < 3; ++k) theta.emplace_back(ga[k], hb[k]);
    const MultiGraph spliced = splice(k4, VertexId{0}, k4, VertexId{1}, theta).graph;
    CHECK(testing::brute_force_isomorphic(spliced, triangular_prism()));
    ++bijections;
  } while (std::next_permutation(hb.begin(), hb.end()));
  CHECK(bijections == 6);
}

TEST_CASE("splice contraction identities") {
  const MultiGraph g = apex_ladder(1), h = wheel(7);
  const VertexId u = g.vertex("u'"), v = h.vertex("h");
  EdgeBijection theta;
  const auto gu = g.incident_edges(u), hv = h.incident_edges(v);
  for (std::size_t k = 0; k < gu.size(); ++k) theta.emplace_back(gu[k], hv[hv.size() - 1 - k]);
  const SpliceResult r = splice(g, u, h, v, theta);

  VertexSet g_side;
  for (VertexId x : g.vertices()) {
    if (x != u) g_side.push_back(x);
  }
  CHECK(isomorphic(contract(r.graph, g_side), h));
  CHECK(isomorphic(contract(r.graph, complement(r.graph, g_side)), g));
  CHECK(is_brick_elp(r.graph));
}

TEST_CASE("triangle_insert") {
  const MultiGraph k4 = complete_graph(4);
  const TriangleInsertion ins = triangle_insert(k4, VertexId{0});
  CHECK(ins.graph.vertex_count() == 6);
  CHECK(ins.graph.edge_count() == 9);
  CHECK(testing::brute_force_isomorphic(ins.graph, triangular_prism()));
  const auto& l = ins.labels;
  CHECK(ins.graph.multiplicity(l.x, l.y) == 1);
  CHECK(ins.graph.multiplicity(l.y, l.z) == 1);
  CHECK(ins.graph.multiplicity(l.x, l.z) == 1);
  for (VertexId w : {l.x, l.y, l.z}) CHECK(ins.graph.degree(w) == 3);

  // x, y, z take the ordered incident edges of the host in turn.
  const auto star = k4.incident_edges(VertexId{0});
  const std::array<EdgeId, 3> order{star[2], star[0], star[1]};
  const TriangleInsertion ordered = triangle_insert(k4, VertexId{0}, order);
  CHECK(ordered.graph.edge(order[0]).is_incident(ordered.labels.x));
  CHECK(ordered.graph.edge(order[1]).is_incident(ordered.labels.y));
  CHECK(ordered.graph.edge(order[2]).is_incident(ordered.labels.z));

  CHECK_THROWS_AS(triangle_insert(wheel(5), wheel(5).vertex("h")), PreconditionError);

  SUBCASE("same as splicing with K_4") {
    const MultiGraph w5 = wheel(5);
    const VertexId r1 = w5.vertex("r1");
    EdgeBijection theta;
    const auto gu = w5.incident_edges(r1), hv = k4.incident_edges(VertexId{0});
    for (std::size_t k = 0; k < 3; ++k) theta.emplace_back(gu[k], hv[k]);
    CHECK(isomorphic(triangle_insert(w5, r1).graph, splice(w5, r1, k4, VertexId{0}, theta).graph));
  }

  SUBCASE("preserves brickness on corpus bricks") {
    for (const auto& [name, g] : testing::small_corpus()) {
      if (g.vertex_count() > 10 || !is_brick_elp(g)) continue;
      for (VertexId v : g.vertices()) {
        if (g.degree(v) != 3) continue;
        CHECK_MESSAGE(is_brick_elp(triangle_insert(g, v).graph), name);
      }
    }
  }
}

TEST_CASE("ladder core and its degree-two set") {
  for (unsigned t = 1; t <= 4; ++t) {
    CAPTURE(t);
    const MultiGraph core = ladder_core(t);
    CHECK(core.vertex_count() == 4 * (t + 1) + 1);
    CHECK(core.vertex_count() % 2 == 1);
    CHECK(label_edges(core) == reference_ladder_edges(t, false));

    const VertexSet s4 = degree_two_set(t, 4);
    CHECK(s4.size() == 2 * t + 5);
    CHECK(degree_two_set(t, 1).size() == 2 * t + 2);
    for (VertexId v : core.vertices()) {
      const bool in_s = std::binary_search(s4.begin(), s4.end(), v);
      CHECK(core.degree(v) == (in_s ? 2u : 3u));
    }

    const VertexSet s2 = degree_two_set(t, 2), s3 = degree_two_set(t, 3);
    VertexSet diff;
    std::set_difference(s3.begin(), s3.end(), s2.begin(), s2.end(), std::back_inserter(diff));
    CHECK(diff == VertexSet{core.vertex(ladder_label(t, 4))});
    CHECK(std::includes(s4.begin(), s4.end(), s3.begin(), s3.end()));
    const VertexSet s1 = degree_two_set(t, 1);
    CHECK(std::includes(s2.begin(), s2.end(), s1.begin(), s1.end()));
  }
  CHECK_THROWS_AS(ladder_core(0), PreconditionError);
  CHECK_THROWS_AS(degree_two_set(1, 0), PreconditionError);
  CHECK_THROWS_AS(degree_two_set(1, 5), PreconditionError);

  const std::map<std::size_t, std::size_t> histogram = [] {
    std::map<std::size_t, std::size_t> h;
    const MultiGraph core = ladder_core(2);
    for (VertexId v : core.vertices()) ++h[core.degree(v)];
    return h;
  }();
  CHECK(histogram == std::map<std::size_t, std::size_t>{{2, 9}, {3, 4}});
}

TEST_CASE("apex ladder") {
  const MultiGraph g1 = apex_ladder(1);
  CHECK(g1.vertex_count() == 10);
  CHECK(g1.edge_count() == 17);
  for (unsigned t = 1; t <= 3; ++t) {
    const MultiGraph g = apex_ladder(t);
    CHECK(label_edges(g) == reference_ladder_edges(t, true));
    CHECK(g.vertex_count() == 4 * t + 6);
    CHECK(g.degree(g.vertex("u'")) == 2 * t + 5);
  }
  CHECK(g1.multiplicity(g1.vertex("u'"), g1.vertex("u_0^1")) == 1);
  CHECK(g1.multiplicity(g1.vertex("u'"), g1.vertex("u_1^1")) == 0);
  CHECK(g1.multiplicity(g1.vertex("u"), g1.vertex("u_1^4")) == 1);
}

TEST_CASE("family parameters") {
  const FamilyParams p18 = family_params(18);
  CHECK(p18.t == 1);
  CHECK(p18.i == 2);
  const FamilyParams p40 = family_params(40);
  CHECK(p40.t == 3);
  CHECK(p40.i == 8);
  CHECK(family_params(26).t == 2);
  CHECK(family_params(26).i == 2);
  for (unsigned n = 18; n <= 60; n += 2) {
    const FamilyParams p = family_params(n);
    CHECK(p.n == p.i + 8 * (p.t + 1));
    CHECK(p.i > 0);
    CHECK(p.i <= 8);
    CHECK(p.i % 2 == 0);
  }
  CHECK_THROWS_AS(family_params(19), PreconditionError);
  CHECK_THROWS_AS(family_params(16), PreconditionError);
  CHECK_THROWS_AS(family_member(17), PreconditionError);
}

TEST_CASE("family members") {
  for (unsigned n = 18; n <= 40; n += 2) {
    CAPTURE(n);
    const FamilyMember m = family_member(n);
    const unsigned t = m.params.t;
    CHECK(m.graph.vertex_count() == n);
    CHECK(m.graph.edge_count() == t + 1 + 3 * n / 2);
    CHECK(matching_lattice_dimension(m.graph) == static_cast<std::int64_t>((5 * n + 7) / 8));
    CHECK(m.triangles.size() == degree_two_set(t, m.params.i / 2).size());

    std::vector<std::size_t> expected(n - 1, 3);
    expected.push_back(2 * t + 5);
    CHECK(degree_sequence(m.graph) == expected);
    CHECK(m.graph.degree(m.graph.vertex("u'")) == 2 * t + 5);

    const VertexId apex = m.graph.vertex("u'");
    for (const TriangleLabels& tri : m.triangles) {
      CHECK(m.graph.multiplicity(tri.x, tri.y) == 1);
      CHECK(m.graph.multiplicity(tri.y, tri.z) == 1);
      CHECK(m.graph.multiplicity(tri.x, tri.z) == 1);
      // every inserted host is in S, so x always takes the apex edge
      CHECK(m.graph.multiplicity(tri.x, apex) == 1);
    }
  }
  CHECK(family_member(18).triangles.size() == 4);
}

TEST_CASE("labelled edges named in the text exist") {
  const MultiGraph g = family_member(40).graph;
  CHECK(labelled_edges(g, {{"x", "u'"}, {"y", "u_3^1"}}).size() == 2);
  for (unsigned s = 1; s <= 3; ++s) {
    for (unsigned j : {2u, 4u}) {
      const std::string tag = "_" + std::to_string(s) + "^" + std::to_string(j);
      CHECK(labelled_edges(g, {{"x" + tag, "u'"}, {"y" + tag, ladder_label(s, j - 1)}}).size() == 2);
    }
  }
  CHECK_THROWS_AS(labelled_edges(g, {{"x", "y_1^2"}}), GraphError);
}

TEST_CASE("chain property") {
  for (unsigned n = 20; n <= 40; n += 2) {
    if (n % 8 == 2) continue;
    CAPTURE(n);
    const FamilyMember prev = family_member(n - 2);
    const unsigned t = prev.params.t;
    const std::string host = n % 8 == 4 ? ladder_label(t, 2) : n % 8 == 6 ? ladder_label(t, 4) : "u";
    const MultiGraph grown = triangle_insert(prev.graph, prev.graph.vertex(host)).graph;
    const auto map = find_isomorphism(family_member(n).graph, grown, IsomorphismOptions{48});
    REQUIRE(map.has_value());
    CHECK(is_isomorphism(family_member(n).graph, grown, *map));
  }
}

TEST_CASE("four-triangle wheel") {
  const MultiGraph g0 = four_triangle_wheel();
  CHECK(g0.vertex_count() == 14);
  CHECK(g0.edge_count() == 22);
  CHECK(count_perfect_matchings(g0) == 9);
  CHECK(is_brick_elp(g0));
  CHECK(g0.degree(g0.vertex("h")) == 5);

  // The untouched rim vertex r5 sits between the triangles at r4 and r1.
  const VertexId r5 = g0.vertex("r5");
  std::size_t triangle_neighbours = 0;
  for (VertexId w : g0.neighbors(r5)) triangle_neighbours += g0.display_name(w) != "h";
  CHECK(triangle_neighbours == 2);
}

TEST_CASE("canonical matching") {
  const FamilyMember m22 = family_member(22);
  const EdgeSet m1 = canonical_matching(m22);
  CHECK(m1.size() == 10);
  CHECK(canonical_matching(family_member(30)).size() == 14);
  CHECK(canonical_matching_pairs(0).size() == 6);
  CHECK_THROWS_AS(canonical_matching(family_member(20)), PreconditionError);

  const MultiGraph rest =
      delete_vertices(m22.graph, normalized({m22.graph.vertex("u"), m22.graph.vertex("u'")}));
  CHECK(is_perfect_matching(rest, m1));
  const auto census = enumerate_perfect_matchings(rest);
  REQUIRE(census.count == 1);
  CHECK(census.matchings->front() == m1);
}
