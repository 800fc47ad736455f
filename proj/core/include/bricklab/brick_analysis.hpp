#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "bricklab/graph.hpp"
#include "bricklab/matching.hpp"

namespace bricklab {

/// Size caps of the exhaustive cut scans.
struct ScanLimits {
  std::size_t tight_cut_max_vertices = 16;
  std::size_t solid_max_vertices = 14;
};

/// |E| - |V| + 1.
std::int64_t matching_lattice_dimension(const MultiGraph& g);

/// Every perfect matching meets the cut in exactly one edge. g must be
/// matching covered (PreconditionError otherwise).
bool is_tight_cut(const MultiGraph& g, const EdgeCut& cut, const MatchingOptions& options = {});

/// Both cut contractions are matching covered.
bool is_separating_cut(const MultiGraph& g, const EdgeCut& cut);

/// Brick test via 3-connectivity plus a perfect matching in g - {x, y} for
/// every pair of distinct vertices. Odd order or fewer than 4 vertices gives false.
bool is_brick_elp(const MultiGraph& g);

/// Brick test from the definition: matching covered, nonbipartite and no
/// nontrivial tight cut, by exhaustive scan of cut sides.
bool is_brick_by_definition(const MultiGraph& g, const ScanLimits& limits = {});

/// Matching covered, bipartite and no nontrivial tight cut.
bool is_brace(const MultiGraph& g, const ScanLimits& limits = {});

/// Side of some nontrivial tight cut, or nullopt. g must be matching covered.
std::optional<VertexSet> find_nontrivial_tight_cut(const MultiGraph& g, const ScanLimits& limits = {});

/// Perfect matching count equals |E| - |V| + 1. Brickness is the caller's job.
bool is_extremal(const MultiGraph& g, const MatchingOptions& options = {});

/// Every edge of the cut is incident with x or y. Requires x in the cut side
/// and y outside it.
bool covers_cut(const MultiGraph& g, const EdgeCut& cut, VertexId x, VertexId y);

/// Cover-pair brick criterion for a nontrivial cut whose two contractions
/// are bricks: g is a brick iff no pair (x in X, y outside X) covers the cut.
/// Each hypothesis is checked and a PreconditionError names the one that fails.
bool lemma1_brick_test(const MultiGraph& g, const EdgeCut& cut);

/// For a degree-3 vertex u: g - u - N(u) has exactly one perfect matching,
/// which makes the triangle insertion at u of an extremal brick extremal.
bool extremal_insertion_check(const MultiGraph& g, VertexId u, const MatchingOptions& options = {});

struct SolidStatus {
  enum class Kind { solid, nonsolid, unknown, unchecked };

  Kind kind = Kind::unchecked;
  /// Side of a nontrivial separating cut when kind == nonsolid.
  std::optional<VertexSet> witness;
};

std::string to_string(SolidStatus::Kind kind);

/// With a witness: validates it as a nontrivial separating cut (nonsolid) or
/// throws PreconditionError naming the contraction that is not matching
/// covered. Without one: exhaustive scan up to limits.solid_max_vertices,
/// otherwise unknown.
SolidStatus solid_status(const MultiGraph& g, const std::optional<VertexSet>& witness = std::nullopt,
                         const ScanLimits& limits = {});

struct AnalysisReport {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  bool is_connected = false;
  bool is_bipartite = false;
  bool is_matching_covered = false;
  bool is_three_connected = false;
  bool is_brick = false;
  bool is_brace = false;
  std::uint64_t pm_count = 0;
  std::int64_t dimension = 0;
  bool is_extremal = false;
  SolidStatus solid;

  enum class TightCutScan { not_run, none, found };
  TightCutScan tight_cut_scan = TightCutScan::not_run;
  std::optional<VertexSet> tight_cut;
};

struct AnalysisRequest {
  bool scan_tight_cuts = false;
  bool scan_solid = false;
  std::optional<VertexSet> solid_witness;
  MatchingOptions matching;
  ScanLimits limits;
};

AnalysisReport analyze_graph(const MultiGraph& g, const AnalysisRequest& request = {});

/// `key: value` lines. Vertex sets are written with labels where available.
std::string to_key_value(const AnalysisReport& report, const MultiGraph& g);
std::string analysis_csv_header();
std::string to_csv_row(const AnalysisReport& report);

}  // namespace bricklab
