#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bricklab/graph.hpp"

namespace bricklab {

// ---------------------------------------------------------------------------
// Standard small graphs.

/// W_k: hub "h" (id 0) joined to the rim cycle "r1".."rk" (ids 1..k).
/// Rim edges come first, then the spokes.
MultiGraph wheel(unsigned k);
MultiGraph complete_graph(unsigned n);
MultiGraph cycle_graph(unsigned n);
MultiGraph path_graph(unsigned n);
MultiGraph complete_bipartite_graph(unsigned a, unsigned b);
MultiGraph petersen_graph();
/// Two triangles joined by a perfect matching.
MultiGraph triangular_prism();

// ---------------------------------------------------------------------------
// Splicing and triangle insertion.

/// Pairs (edge of g at u, edge of h at v).
using EdgeBijection = std::vector<std::pair<EdgeId, EdgeId>>;

struct SpliceResult {
  MultiGraph graph;
  /// Image of every vertex of h other than v.
  VertexMap from_h;
};

/// Splices g at u with h at v along theta.
///
/// Vertices of g other than u, their labels, and every edge id of g survive
/// unchanged: the edge of g paired with an edge of h keeps its id and is
/// re-attached to that h-edge's outer end. Vertices of h get fresh ids past
/// g.vertex_id_bound(), internal edges of h fresh ids past g.edge_id_bound().
SpliceResult splice(const MultiGraph& g, VertexId u, const MultiGraph& h, VertexId v, const EdgeBijection& theta);

struct TriangleLabels {
  std::string host;
  VertexId x;
  VertexId y;
  VertexId z;
};

struct TriangleInsertion {
  MultiGraph graph;
  TriangleLabels labels;
};

/// Replaces the degree-3 vertex u by a triangle (splice with K_4). The
/// incident edges of u, in `order` (default ascending id), go to x, y and z.
/// Triangle vertices are named after the host: u -> x/y/z, u_s^j -> x_s^j,
/// any other name L -> x[L].
TriangleInsertion triangle_insert(const MultiGraph& g, VertexId u,
                                  std::optional<std::array<EdgeId, 3>> order = std::nullopt);

// ---------------------------------------------------------------------------
// The ladder family.
//
// Vertex ids in ladder_core(t) and apex_ladder(t): u_s^j is 4s + j - 1,
// u is 4(t+1), and u' (apex ladder only) is 4(t+1) + 1.

std::string ladder_label(unsigned s, unsigned j);

/// Paths u_s^1 u_s^2 u_s^3 u_s^4 (s = 0..t) joined by u_s^1 u_{s+1}^1 and
/// u_s^4 u_{s+1}^3, closed by u adjacent to u_t^1 and u_t^4.
MultiGraph ladder_core(unsigned t);

/// The degree-2 vertices of ladder_core(t) restricted by level:
/// 4 = all, 3 = all but u, 2 = also without u_t^4, 1 = also without u_t^2.
VertexSet degree_two_set(unsigned t, unsigned level);

/// ladder_core(t) plus the apex u' joined to every degree-2 vertex.
MultiGraph apex_ladder(unsigned t);

/// {u_t^1, u_t^2, u_t^3, u_t^4, u}: the last rung together with u.
VertexSet last_rung_side(unsigned t);

struct FamilyParams {
  unsigned n = 0;
  unsigned t = 0;
  unsigned i = 0;
};

/// Unique (t, i) with n = i + 8(t+1), 0 < i <= 8, for even n >= 18.
FamilyParams family_params(unsigned n);

struct FamilyMember {
  MultiGraph graph;
  FamilyParams params;
  /// In insertion order (ascending host id).
  std::vector<TriangleLabels> triangles;
};

/// apex_ladder(t) with triangles inserted at degree_two_set(t, i/2).
///
/// x always takes the edge to u'. For u_s^j (j = 2, 4) y takes the edge to
/// u_s^{j-1}; for u_0^1 y goes to u_1^1 and z to u_0^2; for u_0^3 y goes to
/// u_0^2 and z to u_0^4; for u y goes to u_t^1 and z to u_t^4.
FamilyMember family_member(unsigned n);

/// The order in which family_member feeds the edges of `host` to x, y, z,
/// given as ids of apex_ladder(t) (which the family graphs inherit).
std::array<EdgeId, 3> canonical_insertion_order(const MultiGraph& apex, unsigned t, VertexId host);

/// W_5 with triangles inserted at four rim vertices (r1..r4).
MultiGraph four_triangle_wheel();

/// Edge ids of the named pairs; each pair must be joined by exactly one edge.
EdgeSet labelled_edges(const MultiGraph& g, const std::vector<std::pair<std::string, std::string>>& pairs);

/// Label pairs of M_0 extended by the rung blocks s = 1..upto:
/// {x_s^4 z_s^4, y_s^4 u_s^3, x_s^2 z_s^2, y_s^2 u_s^1}.
std::vector<std::pair<std::string, std::string>> canonical_matching_pairs(unsigned upto);

/// M_t inside a family member with i = 6 (6 + 4t edges); PreconditionError otherwise.
EdgeSet canonical_matching(const FamilyMember& member);

}  // namespace bricklab
