#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <vector>

#include "bricklab/graph.hpp"

namespace bricklab {

/// A perfect matching as its sorted edge ids. Parallel edges give distinct
/// matchings.
using PerfectMatching = EdgeSet;

struct MatchingOptions {
  /// Enumeration refuses graphs with more vertices than this (ScaleError).
  std::size_t max_vertices = 48;
};

struct MatchingCensus {
  std::uint64_t count = 0;
  /// Present in enumeration mode, in lexicographic order of edge-id sequences.
  std::optional<std::vector<PerfectMatching>> matchings;
  /// Number of perfect matchings containing each edge (every edge listed).
  std::map<EdgeId, std::uint64_t> per_edge_counts;
};

/// Blossom-based existence test. The empty graph has the empty matching.
bool has_perfect_matching(const MultiGraph& g);

/// Size of a maximum matching.
std::size_t maximum_matching_size(const MultiGraph& g);

/// Every perfect matching exactly once. Branches on the smallest uncovered
/// vertex, tries its edges in id order and prunes any branch whose residual
/// graph has no perfect matching.
MatchingCensus enumerate_perfect_matchings(const MultiGraph& g, const MatchingOptions& options = {});

/// Same count as enumeration without materialising the list.
std::uint64_t count_perfect_matchings(const MultiGraph& g, const MatchingOptions& options = {});

/// Counts perfect matchings but stops as soon as `limit` is reached.
std::uint64_t count_perfect_matchings_up_to(const MultiGraph& g, std::uint64_t limit,
                                            const MatchingOptions& options = {});

/// Connected, at least one edge, and every edge lies in a perfect matching.
bool is_matching_covered(const MultiGraph& g);

/// Edges lying in exactly one perfect matching.
EdgeSet solitary_edges(const MultiGraph& g, const MatchingOptions& options = {});

/// Perfect matchings containing e: those of g minus e's ends, each extended by e.
MatchingCensus matchings_through(const MultiGraph& g, EdgeId e, const MatchingOptions& options = {});

/// Every vertex of g covered by exactly one edge of m, all ids valid.
bool is_perfect_matching(const MultiGraph& g, const EdgeSet& m);

/// One matching per line as space-separated ascending edge ids.
void write_matchings(std::ostream& out, const std::vector<PerfectMatching>& matchings);

}  // namespace bricklab
