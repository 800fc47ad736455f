#include "bricklab/constructions.hpp"

#include <algorithm>

#include "bricklab/errors.hpp"

namespace bricklab {

MultiGraph wheel(unsigned k) {
  if (k < 3) throw PreconditionError("wheel needs at least 3 spokes, got " + std::to_string(k));
  MultiGraph g;
  const VertexId hub = g.add_vertex("h");
  std::vector<VertexId> rim;
  for (unsigned i = 1; i <= k; ++i) rim.push_back(g.add_vertex("r" + std::to_string(i)));
  for (unsigned i = 0; i < k; ++i) g.add_edge(rim[i], rim[(i + 1) % k]);
  for (VertexId r : rim) g.add_edge(hub, r);
  return g;
}

MultiGraph complete_graph(unsigned n) {
  MultiGraph g;
  for (unsigned i = 0; i < n; ++i) g.add_vertex();
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = a + 1; b < n; ++b) g.add_edge(VertexId{a}, VertexId{b});
  }
  return g;
}

MultiGraph cycle_graph(unsigned n) {
  if (n < 3) throw PreconditionError("cycle needs at least 3 vertices");
  MultiGraph g;
  for (unsigned i = 0; i < n; ++i) g.add_vertex();
  for (std::uint32_t i = 0; i < n; ++i) g.add_edge(VertexId{i}, VertexId{(i + 1) % n});
  return g;
}

MultiGraph path_graph(unsigned n) {
  MultiGraph g;
  for (unsigned i = 0; i < n; ++i) g.add_vertex();
  for (std::uint32_t i = 0; i + 1 < n; ++i) g.add_edge(VertexId{i}, VertexId{i + 1});
  return g;
}

MultiGraph complete_bipartite_graph(unsigned a, unsigned b) {
  MultiGraph g;
  for (unsigned i = 0; i < a + b; ++i) g.add_vertex();
  for (std::uint32_t x = 0; x < a; ++x) {
    for (std::uint32_t y = a; y < a + b; ++y) g.add_edge(VertexId{x}, VertexId{y});
  }
  return g;
}

MultiGraph petersen_graph() {
  MultiGraph g;
  for (int i = 0; i < 10; ++i) g.add_vertex();
  for (std::uint32_t i = 0; i < 5; ++i) {
    g.add_edge(VertexId{i}, VertexId{(i + 1) % 5});          // outer cycle
    g.add_edge(VertexId{i}, VertexId{i + 5});                // spokes
    g.add_edge(VertexId{5 + i}, VertexId{5 + (i + 2) % 5});  // inner pentagram
  }
  return g;
}

MultiGraph triangular_prism() {
  MultiGraph g;
  for (int i = 0; i < 6; ++i) g.add_vertex();
  for (std::uint32_t i = 0; i < 3; ++i) {
    g.add_edge(VertexId{i}, VertexId{(i + 1) % 3});
    g.add_edge(VertexId{3 + i}, VertexId{3 + (i + 1) % 3});
    g.add_edge(VertexId{i}, VertexId{3 + i});
  }
  return g;
}

SpliceResult splice(const MultiGraph& g, VertexId u, const MultiGraph& h, VertexId v, const EdgeBijection& theta) {
  const auto g_star = g.incident_edges(u);
  const auto h_star = h.incident_edges(v);
  if (g_star.size() != h_star.size()) {
    throw PreconditionError("splice: degree of " + g.display_name(u) + " is " + std::to_string(g_star.size()) +
                            " but degree of " + h.display_name(v) + " is " + std::to_string(h_star.size()));
  }
  EdgeSet from_g, from_h;
  for (const auto& [eg, eh] : theta) {
    from_g.push_back(eg);
    from_h.push_back(eh);
  }
  if (theta.size() != g_star.size() || normalized(from_g) != EdgeSet(g_star.begin(), g_star.end()) ||
      normalized(from_h) != EdgeSet(h_star.begin(), h_star.end())) {
    throw PreconditionError("splice: theta is not a bijection between the edges at u and the edges at v");
  }

  SpliceResult out{delete_vertices(g, {u}), {}};
  std::uint32_t next_vertex = g.vertex_id_bound();
  for (VertexId w : h.vertices()) {
    if (w == v) continue;
    const VertexId image{next_vertex++};
    out.graph.add_vertex_with_id(image);
    out.from_h.emplace(w, image);
  }
  for (const auto& [eg, eh] : theta) {
    const VertexId g_end = g.edge(eg).other(u);
    const VertexId h_end = out.from_h.at(h.edge(eh).other(v));
    out.graph.add_edge_with_id(eg, g_end, h_end);
  }
  std::uint32_t next_edge = g.edge_id_bound();
  for (const Edge& e : h.edges()) {
    if (e.is_incident(v)) continue;
    out.graph.add_edge_with_id(EdgeId{next_edge++}, out.from_h.at(e.a), out.from_h.at(e.b));
  }
  return out;
}

namespace {

std::string triangle_name(char letter, const std::optional<std::string>& host, VertexId id) {
  const std::string base = host ? *host : std::to_string(id.value);
  if (!base.empty() && base.front() == 'u') return letter + base.substr(1);
  return std::string(1, letter) + "[" + base + "]";
}

}  // namespace

TriangleInsertion triangle_insert(const MultiGraph& g, VertexId u, std::optional<std::array<EdgeId, 3>> order) {
  const auto star = g.incident_edges(u);
  if (star.size() != 3) {
    throw PreconditionError("triangle insertion needs a degree-3 vertex, " + g.display_name(u) + " has degree " +
                            std::to_string(star.size()));
  }
  const std::array<EdgeId, 3> ordered = order ? *order : std::array<EdgeId, 3>{star[0], star[1], star[2]};

  const MultiGraph k4 = complete_graph(4);  // edges at vertex 3 are ids 2, 4, 5 for ends 0, 1, 2
  const VertexId centre{3};
  EdgeBijection theta;
  for (std::uint32_t corner = 0; corner < 3; ++corner) {
    theta.emplace_back(ordered[corner], k4.edges_between(VertexId{corner}, centre).front());
  }
  auto spliced = splice(g, u, k4, centre, theta);

  TriangleInsertion out{std::move(spliced.graph), {g.display_name(u), {}, {}, {}}};
  out.labels.x = spliced.from_h.at(VertexId{0});
  out.labels.y = spliced.from_h.at(VertexId{1});
  out.labels.z = spliced.from_h.at(VertexId{2});
  const auto& host = g.label(u);
  out.graph.set_label(out.labels.x, triangle_name('x', host, u));
  out.graph.set_label(out.labels.y, triangle_name('y', host, u));
  out.graph.set_label(out.labels.z, triangle_name('z', host, u));
  return out;
}

std::string ladder_label(unsigned s, unsigned j) { return "u_" + std::to_string(s) + "^" + std::to_string(j); }

namespace {

VertexId ladder_vertex(unsigned s, unsigned j) { return VertexId{4 * s + j - 1}; }
VertexId closing_vertex(unsigned t) { return VertexId{4 * (t + 1)}; }
VertexId apex_vertex(unsigned t) { return VertexId{4 * (t + 1) + 1}; }

void require_rungs(unsigned t) {
  if (t < 1) throw PreconditionError("ladder needs t >= 1");
}

}  // namespace

MultiGraph ladder_core(unsigned t) {
  require_rungs(t);
  MultiGraph g;
  for (unsigned s = 0; s <= t; ++s) {
    for (unsigned j = 1; j <= 4; ++j) g.add_vertex(ladder_label(s, j));
  }
  g.add_vertex("u");
  for (unsigned s = 0; s <= t; ++s) {
    for (unsigned j = 1; j < 4; ++j) g.add_edge(ladder_vertex(s, j), ladder_vertex(s, j + 1));
  }
  for (unsigned s = 0; s < t; ++s) {
    g.add_edge(ladder_vertex(s, 1), ladder_vertex(s + 1, 1));
    g.add_edge(ladder_vertex(s, 4), ladder_vertex(s + 1, 3));
  }
  g.add_edge(closing_vertex(t), ladder_vertex(t, 1));
  g.add_edge(closing_vertex(t), ladder_vertex(t, 4));
  return g;
}

VertexSet degree_two_set(unsigned t, unsigned level) {
  require_rungs(t);
  if (level < 1 || level > 4) throw PreconditionError("degree-two subset level must be 1..4");
  VertexSet s{ladder_vertex(0, 1), ladder_vertex(0, 3)};
  for (unsigned r = 0; r <= t; ++r) {
    if (r == t && level == 1) continue;
    s.push_back(ladder_vertex(r, 2));
    if (r == t && level == 2) continue;
    s.push_back(ladder_vertex(r, 4));
  }
  if (level == 4) s.push_back(closing_vertex(t));
  return normalized(std::move(s));
}

MultiGraph apex_ladder(unsigned t) {
  MultiGraph g = ladder_core(t);
  const VertexId apex = g.add_vertex("u'");
  for (VertexId v : degree_two_set(t, 4)) g.add_edge(apex, v);
  return g;
}

VertexSet last_rung_side(unsigned t) {
  require_rungs(t);
  return {ladder_vertex(t, 1), ladder_vertex(t, 2), ladder_vertex(t, 3), ladder_vertex(t, 4), closing_vertex(t)};
}

FamilyParams family_params(unsigned n) {
  if (n % 2 != 0 || n < 18) throw PreconditionError("family members exist for even n >= 18, got " + std::to_string(n));
  std::optional<FamilyParams> found;
  for (unsigned t = 1; 8 * (t + 1) < n; ++t) {
    const unsigned i = n - 8 * (t + 1);
    if (i == 0 || i > 8) continue;
    if (found) throw Error("family parameters for n = " + std::to_string(n) + " are not unique");
    found = FamilyParams{n, t, i};
  }
  if (!found) throw Error("no family parameters for n = " + std::to_string(n));
  return *found;
}

namespace {

EdgeId single_edge(const MultiGraph& g, VertexId a, VertexId b) {
  const EdgeSet e = g.edges_between(a, b);
  if (e.size() != 1) {
    throw GraphError("expected exactly one edge between " + g.display_name(a) + " and " + g.display_name(b) +
                     ", found " + std::to_string(e.size()));
  }
  return e.front();
}

}  // namespace

std::array<EdgeId, 3> canonical_insertion_order(const MultiGraph& apex, unsigned t, VertexId host) {
  auto to = [&](VertexId other) { return single_edge(apex, host, other); };
  const EdgeId x_edge = to(apex_vertex(t));
  VertexId y_end, z_end;
  if (host == closing_vertex(t)) {
    y_end = ladder_vertex(t, 1);
    z_end = ladder_vertex(t, 4);
  } else if (host == ladder_vertex(0, 1)) {
    y_end = ladder_vertex(1, 1);
    z_end = ladder_vertex(0, 2);
  } else if (host == ladder_vertex(0, 3)) {
    y_end = ladder_vertex(0, 2);
    z_end = ladder_vertex(0, 4);
  } else {
    const unsigned s = host.value / 4;
    const unsigned j = host.value % 4 + 1;
    if (s > t || (j != 2 && j != 4)) {
      throw PreconditionError(apex.display_name(host) + " is not a triangle host of the ladder");
    }
    y_end = ladder_vertex(s, j - 1);
    // The third edge: the remaining non-apex neighbour.
    for (VertexId w : apex.neighbors(host)) {
      if (w != y_end && w != apex_vertex(t)) z_end = w;
    }
  }
  return {x_edge, to(y_end), to(z_end)};
}

FamilyMember family_member(unsigned n) {
  const FamilyParams params = family_params(n);
  const MultiGraph apex = apex_ladder(params.t);
  FamilyMember member{apex, params, {}};
  for (VertexId host : degree_two_set(params.t, params.i / 2)) {
    auto inserted = triangle_insert(member.graph, host, canonical_insertion_order(apex, params.t, host));
    member.graph = std::move(inserted.graph);
    member.triangles.push_back(std::move(inserted.labels));
  }
  return member;
}

MultiGraph four_triangle_wheel() {
  MultiGraph g = wheel(5);
  for (const char* host : {"r1", "r2", "r3", "r4"}) g = triangle_insert(g, g.vertex(host)).graph;
  return g;
}

EdgeSet labelled_edges(const MultiGraph& g, const std::vector<std::pair<std::string, std::string>>& pairs) {
  EdgeSet out;
  for (const auto& [a, b] : pairs) out.push_back(single_edge(g, g.vertex(a), g.vertex(b)));
  return normalized(std::move(out));
}

std::vector<std::pair<std::string, std::string>> canonical_matching_pairs(unsigned upto) {
  std::vector<std::pair<std::string, std::string>> pairs{
      {"x_0^1", "y_0^1"}, {"x_0^2", "z_0^2"}, {"z_0^1", "y_0^2"},
      {"x_0^3", "y_0^3"}, {"x_0^4", "z_0^4"}, {"z_0^3", "y_0^4"},
  };
  for (unsigned s = 1; s <= upto; ++s) {
    const std::string r = "_" + std::to_string(s) + "^";
    pairs.emplace_back("x" + r + "4", "z" + r + "4");
    pairs.emplace_back("y" + r + "4", "u" + r + "3");
    pairs.emplace_back("x" + r + "2", "z" + r + "2");
    pairs.emplace_back("y" + r + "2", "u" + r + "1");
  }
  return pairs;
}

EdgeSet canonical_matching(const FamilyMember& member) {
  if (member.params.i != 6) {
    throw PreconditionError("canonical matching is defined for members with i = 6, got i = " +
                            std::to_string(member.params.i));
  }
  return labelled_edges(member.graph, canonical_matching_pairs(member.params.t));
}

}  // namespace bricklab
