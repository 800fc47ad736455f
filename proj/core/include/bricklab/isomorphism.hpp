#pragma once

#include <cstddef>
#include <optional>

#include "bricklab/graph.hpp"

namespace bricklab {

struct IsomorphismOptions {
  /// Hard cap on |V|; larger inputs raise ScaleError instead of searching.
  std::size_t max_vertices = 24;
};

/// Multiplicity-preserving isomorphism search.
///
/// Colour refinement on (degree, neighbour colour, edge multiplicity) prunes
/// candidates; the search then extends a partial map vertex by vertex,
/// checking edge multiplicities against every vertex already placed. Returns
/// a witness mapping every vertex of g to a vertex of h, or nullopt.
std::optional<VertexMap> find_isomorphism(const MultiGraph& g, const MultiGraph& h,
                                          const IsomorphismOptions& options = {});

/// Checks that `map` is a bijection V(g) -> V(h) preserving edge multiplicities.
bool is_isomorphism(const MultiGraph& g, const MultiGraph& h, const VertexMap& map);

}  // namespace bricklab
