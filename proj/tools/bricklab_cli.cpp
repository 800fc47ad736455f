// bricklab: generate the ladder family, verify its counting theorem and the
// supporting claims, and classify arbitrary multigraphs.
//
// Exit codes: 0 all checks pass, 1 verification failure, 2 usage or input error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "bricklab/brick_analysis.hpp"
#include "bricklab/constructions.hpp"
#include "bricklab/errors.hpp"
#include "bricklab/graph_io.hpp"
#include "bricklab/verifier.hpp"

namespace {

constexpr int kVerificationFailed = 1;
constexpr int kUsageError = 2;

struct GraphOutput {
  bool dot = false;
  bool edgelist = false;
  std::string path;

  void attach(CLI::App* cmd) {
    auto* dot_flag = cmd->add_flag("--dot", dot, "Write Graphviz DOT");
    auto* list_flag = cmd->add_flag("--edgelist", edgelist, "Write the edge-list format (default)");
    dot_flag->excludes(list_flag);
    cmd->add_option("--out", path, "Output file (default stdout)");
  }

  void emit(const bricklab::MultiGraph& g, const std::string& name) const {
    std::ofstream file;
    if (!path.empty()) {
      file.open(path);
      if (!file) throw bricklab::Error("cannot write " + path);
    }
    std::ostream& out = path.empty() ? std::cout : file;
    if (dot) {
      bricklab::write_dot(out, g, name);
    } else {
      bricklab::write_graph(out, g);
    }
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Matching-theory toolkit for bricks and the ladder family"};
  app.require_subcommand(1);

  unsigned n_min = 18, n_max = 40;
  std::string format = "csv";
  bool sequential = false;
  auto* theorem = app.add_subcommand("verify-theorem", "Check brickness, extremality and matching counts of G''_n");
  theorem->add_option("--min", n_min, "Smallest even n (>= 18)")->capture_default_str();
  theorem->add_option("--max", n_max, "Largest even n")->capture_default_str();
  theorem->add_option("--format", format, "Table format")->check(CLI::IsMember({"csv", "md"}))->capture_default_str();
  theorem->add_flag("--sequential", sequential, "Compute rows on one thread");

  unsigned t_max = 3;
  auto* claims = app.add_subcommand("verify-claims", "Check the structural claims instance by instance");
  claims->add_option("--t-max", t_max, "Largest ladder length")->capture_default_str();

  unsigned family_n = 18;
  GraphOutput family_out;
  auto* family = app.add_subcommand("family", "Emit the family member G''_n");
  family->add_option("--n", family_n, "Even vertex count >= 18")->required();
  family_out.attach(family);

  unsigned spokes = 5;
  GraphOutput wheel_out;
  auto* wheel = app.add_subcommand("wheel", "Emit the wheel W_k");
  wheel->add_option("--k", spokes, "Number of spokes (>= 3)")->required();
  wheel_out.attach(wheel);

  GraphOutput g0_out;
  auto* g0 = app.add_subcommand("g0", "Emit W_5 with triangles at four rim vertices");
  g0_out.attach(g0);

  std::string graph_path;
  bool tight_cuts = false, solid = false, csv = false;
  std::string witness_path;
  auto* analyze = app.add_subcommand("analyze", "Classify a graph given in the edge-list format");
  analyze->add_option("path", graph_path, "Edge-list file")->required()->check(CLI::ExistingFile);
  analyze->add_flag("--tight-cuts", tight_cuts, "Exhaustive nontrivial tight cut scan (<= 16 vertices)");
  auto* solid_flag = analyze->add_flag("--solid", solid, "Exhaustive solidity scan (<= 14 vertices)");
  auto* witness_opt = analyze->add_option("--solid-witness", witness_path, "File listing one side of a separating cut")
                          ->check(CLI::ExistingFile);
  solid_flag->excludes(witness_opt);
  analyze->add_flag("--csv", csv, "Print one CSV row instead of key-value lines");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (*theorem) {
      const auto rows = bricklab::verify_theorem(n_min, n_max, {!sequential});
      if (format == "md") {
        bricklab::write_theorem_markdown(std::cout, rows);
      } else {
        bricklab::write_theorem_csv(std::cout, rows);
      }
    } else if (*claims) {
      bricklab::write_claims_report(std::cout, bricklab::verify_claims(t_max));
    } else if (*family) {
      family_out.emit(bricklab::family_member(family_n).graph, "G" + std::to_string(family_n));
    } else if (*wheel) {
      wheel_out.emit(bricklab::wheel(spokes), "W" + std::to_string(spokes));
    } else if (*g0) {
      g0_out.emit(bricklab::four_triangle_wheel(), "G0");
    } else if (*analyze) {
      const auto g = bricklab::read_graph_file(graph_path);
      bricklab::AnalysisRequest request;
      request.scan_tight_cuts = tight_cuts;
      request.scan_solid = solid;
      if (!witness_path.empty()) {
        std::ifstream in(witness_path);
        request.solid_witness = bricklab::read_vertex_set(in, g);
      }
      const auto report = bricklab::analyze_graph(g, request);
      if (csv) {
        std::cout << bricklab::analysis_csv_header() << '\n' << bricklab::to_csv_row(report) << '\n';
      } else {
        std::cout << bricklab::to_key_value(report, g);
      }
    }
  } catch (const bricklab::VerificationFailure& e) {
    std::cerr << "verification failed: " << e.what() << '\n';
    return kVerificationFailed;
  } catch (const bricklab::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return 0;
}
