#include "bricklab/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "bricklab/errors.hpp"

namespace bricklab {
namespace {

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

std::uint32_t parse_id(const std::string& token, std::size_t line) {
  std::uint32_t value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) throw ParseError(line, "expected a nonnegative integer, got '" + token + "'");
  return value;
}

}  // namespace

void write_graph(std::ostream& out, const MultiGraph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (VertexId v : g.vertices()) {
    out << "v " << v.value;
    if (const auto& l = g.label(v)) out << ' ' << *l;
    out << '\n';
  }
  for (const Edge& e : g.edges()) out << "e " << e.id.value << ' ' << e.a.value << ' ' << e.b.value << '\n';
}

MultiGraph read_graph(std::istream& in) {
  MultiGraph g;
  std::string line;
  std::size_t line_no = 0;
  std::size_t expected_vertices = 0, expected_edges = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto t = tokens(line);
    if (t.empty()) continue;
    if (!have_header) {
      if (t.size() != 2) throw ParseError(line_no, "header must be '<n> <m>'");
      expected_vertices = parse_id(t[0], line_no);
      expected_edges = parse_id(t[1], line_no);
      have_header = true;
      continue;
    }
    try {
      if (t[0] == "v") {
        if (t.size() < 2 || t.size() > 3) throw ParseError(line_no, "vertex line must be 'v <id> [label]'");
        if (g.edge_count() > 0) throw ParseError(line_no, "vertex line after edge lines");
        std::optional<std::string> label;
        if (t.size() == 3) label = t[2];
        g.add_vertex_with_id(VertexId{parse_id(t[1], line_no)}, std::move(label));
      } else if (t[0] == "e") {
        if (t.size() != 4) throw ParseError(line_no, "edge line must be 'e <id> <a> <b>'");
        g.add_edge_with_id(EdgeId{parse_id(t[1], line_no)}, VertexId{parse_id(t[2], line_no)},
                           VertexId{parse_id(t[3], line_no)});
      } else {
        throw ParseError(line_no, "unknown record '" + t[0] + "'");
      }
    } catch (const GraphError& e) {
      throw ParseError(line_no, e.what());
    }
  }
  if (!have_header) throw ParseError(line_no, "missing header");
  if (g.vertex_count() != expected_vertices || g.edge_count() != expected_edges) {
    throw ParseError(line_no, "header announces " + std::to_string(expected_vertices) + " vertices and " +
                                  std::to_string(expected_edges) + " edges, found " +
                                  std::to_string(g.vertex_count()) + " and " + std::to_string(g.edge_count()));
  }
  return g;
}

void write_dot(std::ostream& out, const MultiGraph& g, const std::string& name) {
  out << "graph " << name << " {\n";
  for (VertexId v : g.vertices()) {
    out << "  " << v.value << " [label=\"" << g.display_name(v) << "\"];\n";
  }
  for (const Edge& e : g.edges()) {
    out << "  " << e.a.value << " -- " << e.b.value << " [tooltip=\"e" << e.id.value << "\"];\n";
  }
  out << "}\n";
}

MultiGraph read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return read_graph(in);
}

void write_graph_file(const std::filesystem::path& path, const MultiGraph& g) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  write_graph(out, g);
}

VertexSet read_vertex_set(std::istream& in, const MultiGraph& g) {
  VertexSet out;
  for (std::string t; in >> t;) {
    if (auto v = g.find_vertex(t)) {
      out.push_back(*v);
      continue;
    }
    std::uint32_t value = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (ec != std::errc() || ptr != t.data() + t.size() || !g.has_vertex(VertexId{value})) {
      throw GraphError("'" + t + "' is neither a vertex label nor a vertex id");
    }
    out.push_back(VertexId{value});
  }
  return normalized(std::move(out));
}

}  // namespace bricklab
