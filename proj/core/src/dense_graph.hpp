#pragma once

// Compact 0..n-1 indexing of a MultiGraph for the inner loops of the
// matching and connectivity routines. Not part of the installed interface.

#include <cstdint>
#include <vector>

#include "bricklab/graph.hpp"

namespace bricklab::detail {

struct DenseEdge {
  int a;
  int b;
  EdgeId id;
};

struct DenseGraph {
  explicit DenseGraph(const MultiGraph& g);

  int size() const noexcept { return static_cast<int>(vertex_of.size()); }
  int index(VertexId v) const { return index_of.at(v.value); }

  std::vector<VertexId> vertex_of;          // dense index -> vertex id
  std::vector<int> index_of;                // vertex id value -> dense index or -1
  std::vector<DenseEdge> edges;             // ascending edge id
  std::vector<std::vector<int>> incident;   // dense edge indices, ascending id
  std::vector<std::vector<int>> neighbours; // distinct, ascending index
};

/// Maximum-cardinality matching size (Edmonds' blossom algorithm) of the
/// subgraph induced by vertices with alive[v] != 0.
int maximum_matching_size(const DenseGraph& g, const std::vector<char>& alive);

/// True iff the induced subgraph on alive vertices has a perfect matching.
bool has_perfect_matching(const DenseGraph& g, const std::vector<char>& alive);

}  // namespace bricklab::detail
