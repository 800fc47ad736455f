#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "bricklab/graph.hpp"

namespace bricklab {

// Edge-list text format (UTF-8, LF):
//
//   <n> <m>
//   v <id> [label]      n lines
//   e <id> <a> <b>      m lines
//
// Ids are written as stored, so a write/read round trip keeps every vertex
// id, edge id and label. Blank lines are ignored on input.

void write_graph(std::ostream& out, const MultiGraph& g);
MultiGraph read_graph(std::istream& in);

/// Undirected DOT export; labels become node labels, edge ids edge tooltips.
void write_dot(std::ostream& out, const MultiGraph& g, const std::string& name = "G");

MultiGraph read_graph_file(const std::filesystem::path& path);
void write_graph_file(const std::filesystem::path& path, const MultiGraph& g);

/// Whitespace-separated vertex ids or labels, as used for cut witnesses.
VertexSet read_vertex_set(std::istream& in, const MultiGraph& g);

}  // namespace bricklab
