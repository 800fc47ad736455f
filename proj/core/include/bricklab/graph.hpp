#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace bricklab {

struct VertexId {
  std::uint32_t value = 0;
  auto operator<=>(const VertexId&) const = default;
};

struct EdgeId {
  std::uint32_t value = 0;
  auto operator<=>(const EdgeId&) const = default;
};

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<VertexId>;
/// Sorted, duplicate-free list of edge ids.
using EdgeSet = std::vector<EdgeId>;

/// Sorts and deduplicates in place; returns the argument for chaining.
VertexSet normalized(VertexSet set);
EdgeSet normalized(EdgeSet set);

struct Edge {
  EdgeId id;
  VertexId a;
  VertexId b;

  bool is_incident(VertexId v) const noexcept { return a == v || b == v; }
  VertexId other(VertexId v) const noexcept { return a == v ? b : a; }
};

/// Loopless multigraph with stable, append-only vertex and edge ids.
///
/// Removing a vertex or edge never renumbers the survivors; fresh ids are
/// always taken past the largest id ever used. Every set-valued query is
/// reported in ascending id order. A graph shared between threads must only
/// be accessed through const member functions.
class MultiGraph {
 public:
  MultiGraph() = default;

  VertexId add_vertex(std::optional<std::string> label = std::nullopt);
  /// Inserts a vertex with a caller-chosen id (used by deserialization and
  /// id-preserving rebuilds). Throws if the id is live.
  void add_vertex_with_id(VertexId id, std::optional<std::string> label = std::nullopt);

  /// Adds an edge; parallel edges are allowed, loops are rejected.
  EdgeId add_edge(VertexId a, VertexId b);
  void add_edge_with_id(EdgeId id, VertexId a, VertexId b);

  /// Removes a vertex and all its incident edges.
  void remove_vertex(VertexId v);
  void remove_edge(EdgeId e);

  void set_label(VertexId v, std::string label);

  bool has_vertex(VertexId v) const noexcept;
  bool has_edge(EdgeId e) const noexcept;

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return edge_count_; }

  VertexSet vertices() const;
  std::vector<Edge> edges() const;
  EdgeSet edge_ids() const;

  const Edge& edge(EdgeId e) const;
  /// Incident edge ids in ascending order.
  std::span<const EdgeId> incident_edges(VertexId v) const;
  /// Degree counting parallel edges.
  std::size_t degree(VertexId v) const { return incident_edges(v).size(); }
  /// Distinct neighbours in ascending order.
  VertexSet neighbors(VertexId v) const;
  std::size_t multiplicity(VertexId a, VertexId b) const;
  /// Edge ids joining a and b, ascending.
  EdgeSet edges_between(VertexId a, VertexId b) const;

  const std::optional<std::string>& label(VertexId v) const;
  /// Label if present, otherwise the decimal id.
  std::string display_name(VertexId v) const;
  std::optional<VertexId> find_vertex(std::string_view label) const;
  /// Vertex with the given label; throws GraphError if absent.
  VertexId vertex(std::string_view label) const;

  /// One past the largest vertex / edge id ever allocated.
  std::uint32_t vertex_id_bound() const noexcept {
    return static_cast<std::uint32_t>(vertex_slots_.size());
  }
  std::uint32_t edge_id_bound() const noexcept {
    return static_cast<std::uint32_t>(edge_slots_.size());
  }

 private:
  struct VertexSlot {
    bool alive = false;
    std::optional<std::string> label;
    std::vector<EdgeId> incident;
  };

  VertexSlot& slot(VertexId v);
  const VertexSlot& slot(VertexId v) const;
  void check_label(const std::string& label) const;
  static void insert_sorted(std::vector<EdgeId>& list, EdgeId e);

  std::vector<VertexSlot> vertex_slots_;
  std::vector<std::optional<Edge>> edge_slots_;
  std::unordered_map<std::string, VertexId> by_label_;
  std::size_t vertex_count_ = 0;
  std::size_t edge_count_ = 0;
};

/// Edge cut: a side X and the edges with exactly one end in X.
struct EdgeCut {
  VertexSet side;
  EdgeSet edges;

  /// |X| = 1 or |V \ X| = 1 in the host graph.
  bool trivial(const MultiGraph& g) const {
    return side.size() == 1 || side.size() + 1 == g.vertex_count();
  }
};

/// Partial injective vertex correspondence between two graphs.
using VertexMap = std::map<VertexId, VertexId>;

/// V(g) \ x.
VertexSet complement(const MultiGraph& g, const VertexSet& x);

/// The cut of X. Requires X nonempty and a proper subset of V(g).
EdgeCut edge_cut(const MultiGraph& g, const VertexSet& x);

/// Contracts X to a single new vertex labelled new_label. Vertices outside X
/// and edges crossing the cut keep their ids; edges inside X are dropped and
/// crossing edges stay parallel. The new vertex is id g.vertex_id_bound().
MultiGraph contract(const MultiGraph& g, const VertexSet& x,
                    std::optional<std::string> new_label = std::nullopt);

/// Copy of g without the vertices in s and their incident edges.
MultiGraph delete_vertices(const MultiGraph& g, const VertexSet& s);

/// Underlying simple graph: one edge per adjacent pair, ids of the
/// lowest-id parallel edge kept.
MultiGraph simplify(const MultiGraph& g);

bool is_connected(const MultiGraph& g);
bool is_bipartite(const MultiGraph& g);

/// True iff |V| > k and no set of fewer than k vertices disconnects the
/// underlying simple graph. Throws GraphError when |V| <= k.
bool vertex_connectivity_at_least(const MultiGraph& g, unsigned k);

}  // namespace bricklab

template <>
struct std::hash<bricklab::VertexId> {
  std::size_t operator()(bricklab::VertexId v) const noexcept {
    return std::hash<std::uint32_t>{}(v.value);
  }
};

template <>
struct std::hash<bricklab::EdgeId> {
  std::size_t operator()(bricklab::EdgeId e) const noexcept {
    return std::hash<std::uint32_t>{}(e.value);
  }
};
