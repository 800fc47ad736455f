#include "bricklab/verifier.hpp"

#include <algorithm>
#include <future>
#include <iterator>
#include <ostream>
#include <sstream>

#include "bricklab/graph_io.hpp"
#include "bricklab/isomorphism.hpp"
#include "bricklab/matching.hpp"

namespace bricklab {
namespace {

constexpr IsomorphismOptions kFamilyIso{48};

std::string describe_matching(const MultiGraph& g, const EdgeSet& m) {
  std::string out = "{";
  for (EdgeId id : m) {
    const Edge& e = g.edge(id);
    if (out.size() > 1) out += ", ";
    out += g.display_name(e.a) + g.display_name(e.b);
  }
  return out + "}";
}

std::string describe_matchings(const MultiGraph& g, const std::vector<PerfectMatching>& ms) {
  if (ms.empty()) return "no perfect matching";
  std::string out;
  for (const auto& m : ms) out += (out.empty() ? "" : " ; ") + describe_matching(g, m);
  return out;
}

std::string member_name(unsigned n) { return "G''_" + std::to_string(n); }

class ClaimChecker {
 public:
  explicit ClaimChecker(ClaimsReport& report) : report_(report) {}

  void require(bool ok, const std::string& claim, const std::string& instance, const std::string& statement,
               const std::string& counterwitness) {
    if (!ok) throw VerificationFailure(claim, instance + ": " + statement, counterwitness);
    report_.checks.push_back({claim, instance, statement});
  }

  /// g must have exactly one perfect matching, equal to `expected` when given.
  EdgeSet unique_matching(const MultiGraph& g, const std::string& claim, const std::string& instance,
                          const std::optional<EdgeSet>& expected = std::nullopt) {
    const auto census = enumerate_perfect_matchings(g, MatchingOptions{48});
    std::string statement = "unique perfect matching";
    if (expected) statement += " " + describe_matching(g, *expected);
    const bool ok = census.count == 1 && (!expected || census.matchings->front() == *expected);
    require(ok, claim, instance, statement, describe_matchings(g, *census.matchings));
    return census.matchings->front();
  }

  void isomorphic(const MultiGraph& a, const MultiGraph& b, const std::string& claim, const std::string& instance,
                  const std::string& statement) {
    const bool ok = find_isomorphism(a, b, kFamilyIso).has_value();
    require(ok, claim, instance, statement, "no isomorphism exists");
  }

 private:
  ClaimsReport& report_;
};

MultiGraph with_extra_edges(MultiGraph g, const std::string& a, const std::string& b, int copies) {
  for (int c = 0; c < copies; ++c) g.add_edge(g.vertex(a), g.vertex(b));
  return g;
}

std::string rung(const char* prefix, unsigned s, unsigned j) {
  return prefix + ("_" + std::to_string(s) + "^" + std::to_string(j));
}

void check_claim1(ClaimChecker& check, unsigned t) {
  const std::string inst = "G'_" + std::to_string(t);
  const MultiGraph g = apex_ladder(t);
  const VertexSet side = last_rung_side(t);
  const EdgeCut cut = edge_cut(g, side);

  const MultiGraph outer = contract(g, complement(g, side), "xbar");
  const auto hub_map = find_isomorphism(outer, wheel(5), kFamilyIso);
  check.require(hub_map && hub_map->at(outer.vertex("xbar")) == wheel(5).vertex("h"), "claim1", inst,
                "G'_t/(complement of X_t) is W_5 with the contracted vertex as hub", "no hub-preserving isomorphism");

  const MultiGraph inner = contract(g, side, "x");
  if (t == 1) {
    check.isomorphic(simplify(inner), wheel(5), "claim1", inst, "G'_1/X_1 is W_5 up to multiple spokes");
  } else {
    check.isomorphic(inner, with_extra_edges(apex_ladder(t - 1), "u", "u'", 2), "claim1", inst,
                     "G'_t/X_t is G'_{t-1} with two extra u-u' edges");
  }

  const std::vector<std::pair<std::string, std::string>> matching =
      t == 1 ? std::vector<std::pair<std::string, std::string>>{{"u_0^1", "u_1^1"}, {"u_0^4", "u_1^3"}, {"u_1^2", "u'"}}
             : std::vector<std::pair<std::string, std::string>>{
                   {rung("u", t - 1, 1), rung("u", t, 1)}, {rung("u", t - 1, 4), rung("u", t, 3)}, {"u", "u'"}};
  const EdgeSet three = labelled_edges(g, matching);
  const bool in_cut = std::includes(cut.edges.begin(), cut.edges.end(), three.begin(), three.end());
  check.require(in_cut, "claim1", inst, "cut of X_t contains the matching " + describe_matching(g, three),
                "edges outside the cut");

  const bool by_lemma = lemma1_brick_test(g, cut);
  const bool by_elp = is_brick_elp(g);
  check.require(by_lemma && by_elp, "claim1", inst, "brick by the cover-pair test and by the pair-deletion test",
                "cover-pair=" + std::to_string(by_lemma) + " pair-deletion=" + std::to_string(by_elp));
}

void check_claim3(ClaimChecker& check, unsigned t) {
  const unsigned n = 8 * (t + 1) + 6;
  const FamilyMember member = family_member(n);
  const MultiGraph& g = member.graph;
  const std::string inst = member_name(n);
  const EdgeId uu = labelled_edges(g, {{"u", "u'"}}).front();
  const auto through = matchings_through(g, uu);
  check.require(through.count == 1, "claim3", inst, "uu' is a solitary edge", describe_matchings(g, *through.matchings));
  const MultiGraph rest = delete_vertices(g, normalized({g.vertex("u"), g.vertex("u'")}));
  check.unique_matching(rest, "claim3", inst + " - {u,u'}", canonical_matching(member));
}

// For n = 2 mod 8: the single perfect matching with more than one edge in
// the cut of X_k, and uniqueness of the matching of the remainder.
void check_claim4_splice_case(ClaimChecker& check, const FamilyMember& member) {
  const MultiGraph& g = member.graph;
  const unsigned k = member.params.t;
  const std::string inst = member_name(member.params.n);
  const VertexSet side = normalized({g.vertex(rung("u", k, 1)), g.vertex(rung("u", k, 2)), g.vertex(rung("u", k, 3)),
                                     g.vertex(rung("u", k, 4)), g.vertex("u")});
  const EdgeCut cut = edge_cut(g, side);
  const auto census = enumerate_perfect_matchings(g, MatchingOptions{48});
  std::vector<PerfectMatching> heavy;
  for (const auto& m : *census.matchings) {
    std::size_t hits = 0;
    for (EdgeId e : m) hits += std::binary_search(cut.edges.begin(), cut.edges.end(), e);
    if (hits > 1) heavy.push_back(m);
  }
  check.require(heavy.size() == 1, "claim4", inst, "exactly one perfect matching meets the cut of X_k more than once",
                describe_matchings(g, heavy));

  const std::string prev_one = k == 1 ? "y_0^1" : rung("u", k - 1, 1);
  const std::string low = k == 1 ? "z_0^4" : rung("z", k - 1, 4);
  const EdgeSet crossing =
      labelled_edges(g, {{prev_one, rung("u", k, 1)}, {low, rung("u", k, 3)}, {rung("u", k, 2), "u'"}});
  EdgeSet meet;
  std::set_intersection(heavy.front().begin(), heavy.front().end(), cut.edges.begin(), cut.edges.end(),
                        std::back_inserter(meet));
  check.require(meet == crossing, "claim4", inst, "that matching meets the cut in " + describe_matching(g, crossing),
                describe_matching(g, meet));

  const MultiGraph rest = delete_vertices(
      g, normalized({g.vertex(prev_one), g.vertex(rung("u", k, 1)), g.vertex(low), g.vertex(rung("u", k, 3)),
                     g.vertex(rung("u", k, 2)), g.vertex("u'")}));
  std::optional<EdgeSet> expected;
  if (k == 1) {
    expected = labelled_edges(rest, {{"u", "u_1^4"}, {"x_0^4", "y_0^4"}, {"x_0^3", "z_0^3"}, {"z_0^2", "y_0^3"},
                                     {"x_0^2", "y_0^2"}, {"x_0^1", "z_0^1"}});
  }
  check.unique_matching(rest, "claim4", inst + " minus the ends of the crossing edges", expected);

  const MultiGraph outer = contract(g, complement(g, side), "xbar");
  check.isomorphic(outer, wheel(5), "claim4", inst, "G''_n/(complement of X_k) is W_5");
  const MultiGraph inner = contract(g, side, "x");
  if (k == 1) {
    check.isomorphic(simplify(inner), simplify(four_triangle_wheel()), "claim4", inst,
                     "G''_18/X_1 is the four-triangle wheel up to multiple spokes");
  } else {
    check.isomorphic(inner, with_extra_edges(family_member(member.params.n - 4).graph, "u", "u'", 2), "claim4", inst,
                     "G''_n/X_k is G''_{n-4} with two extra u-u' edges");
  }
}

// For n = 4, 6, 0 mod 8: G''_n is G''_{n-2} with a triangle at h, and
// G''_{n-2} - h - N(h) has the stated unique perfect matching.
void check_claim4_insertion_case(ClaimChecker& check, const FamilyMember& member) {
  const unsigned n = member.params.n;
  const unsigned k = member.params.t;
  const FamilyMember previous = family_member(n - 2);
  const MultiGraph& g = previous.graph;

  std::string host;
  std::vector<std::pair<std::string, std::string>> extra;
  switch (member.params.i) {
    case 4:
      host = rung("u", k, 2);
      extra = {{"u", rung("u", k, 4)}};
      break;
    case 6:
      host = rung("u", k, 4);
      extra = {{rung("x", k, 2), rung("z", k, 2)}, {rung("u", k, 1), rung("y", k, 2)}};
      break;
    default:
      host = "u";
      extra = {{rung("x", k, 2), rung("y", k, 2)}, {rung("x", k, 4), rung("y", k, 4)}, {rung("z", k, 2), rung("u", k, 3)}};
      break;
  }
  const VertexId h = g.vertex(host);
  const std::string inst = member_name(n);
  check.isomorphic(member.graph, triangle_insert(g, h).graph, "claim4", inst,
                   member_name(n) + " is " + member_name(n - 2) + " with a triangle at " + host);

  VertexSet removed = g.neighbors(h);
  removed.push_back(h);
  const MultiGraph rest = delete_vertices(g, normalized(removed));
  auto pairs = canonical_matching_pairs(k - 1);
  pairs.insert(pairs.end(), extra.begin(), extra.end());
  check.unique_matching(rest, "claim4", member_name(n - 2) + " - " + host + " - N(" + host + ")",
                        labelled_edges(rest, pairs));
  check.require(extremal_insertion_check(g, h), "claim4", member_name(n - 2),
                "triangle insertion at " + host + " preserves extremality", "check failed");
}

void check_base_brick(ClaimChecker& check) {
  const MultiGraph g = four_triangle_wheel();
  const std::string inst = "G_0";
  check.require(g.vertex_count() == 14 && g.edge_count() == 22, "lemma-g0", inst, "14 vertices and 22 edges",
                std::to_string(g.vertex_count()) + " vertices, " + std::to_string(g.edge_count()) + " edges");
  const auto count = count_perfect_matchings(g);
  check.require(count == 9, "lemma-g0", inst, "9 perfect matchings", std::to_string(count));
  check.require(is_brick_elp(g), "lemma-g0", inst, "brick", "pair-deletion test failed");
  check.require(is_extremal(g), "lemma-g0", inst, "extremal (9 = 22 - 14 + 1)", std::to_string(count));

  const VertexId hub = g.vertex("h");
  std::uint64_t total = 0;
  for (VertexId v : g.neighbors(hub)) {
    const std::uint64_t expected = g.label(v)->front() == 'r' ? 1 : 2;
    const auto found = count_perfect_matchings(delete_vertices(g, normalized({hub, v})));
    total += found;
    check.require(found == expected, "lemma-g0", inst,
                  "G_0 - h - " + g.display_name(v) + " has " + std::to_string(expected) + " perfect matchings",
                  std::to_string(found));
  }
  check.require(total == 9, "lemma-g0", inst, "per-spoke counts total 9", std::to_string(total));
}

}  // namespace

VerificationFailure::VerificationFailure(std::string claim, std::string instance, std::string counterwitness)
    : Error(claim + " failed on " + instance + "; counterwitness: " + counterwitness),
      claim_(std::move(claim)),
      instance_(std::move(instance)),
      counterwitness_(std::move(counterwitness)) {}

std::uint64_t predicted_matching_count(const FamilyParams& p) { return (5ULL * p.n + 8 - p.i) / 8; }

namespace {

TheoremRow theorem_row(unsigned n) {
  const FamilyMember member = family_member(n);
  const MultiGraph& g = member.graph;
  const auto& p = member.params;
  TheoremRow row{n, p.t, p.i, g.vertex_count(), g.edge_count(), count_perfect_matchings(g),
                 predicted_matching_count(p), is_brick_elp(g), false, n - 1ULL, false};
  row.is_extremal = row.is_brick && static_cast<std::int64_t>(row.pm_count) == matching_lattice_dimension(g);
  row.refutes = row.pm_count < row.n_minus_1;

  const std::string inst = member_name(n);
  auto fail = [&](const std::string& what, const std::string& got) { throw VerificationFailure("theorem", inst + ": " + what, got); };
  if (row.vertices != n) fail("vertex count " + std::to_string(n), std::to_string(row.vertices));
  const std::size_t edges = p.t + 1 + 3 * n / 2;
  if (row.edges != edges) fail("edge count t+1+3n/2 = " + std::to_string(edges), std::to_string(row.edges));
  if (row.predicted != (5ULL * n + 7) / 8) fail("(5n+8-i)/8 = ceil(5n/8)", std::to_string(row.predicted));
  if (!row.is_brick) fail("brick", "pair-deletion test failed");
  if (row.pm_count != row.predicted) fail("perfect matching count " + std::to_string(row.predicted), std::to_string(row.pm_count));
  if (!row.is_extremal) fail("extremal", "count " + std::to_string(row.pm_count) + " vs dimension " +
                                             std::to_string(matching_lattice_dimension(g)));
  if (!row.refutes) fail("fewer than n-1 perfect matchings", std::to_string(row.pm_count));
  return row;
}

}  // namespace

std::vector<TheoremRow> verify_theorem(unsigned n_min, unsigned n_max, const TheoremOptions& options) {
  if (n_min < 18 || n_min > n_max || n_min % 2 != 0 || n_max % 2 != 0) {
    throw PreconditionError("theorem range must satisfy 18 <= min <= max with both even");
  }
  std::vector<TheoremRow> rows;
  if (!options.parallel) {
    for (unsigned n = n_min; n <= n_max; n += 2) rows.push_back(theorem_row(n));
    return rows;
  }
  std::vector<std::future<TheoremRow>> pending;
  for (unsigned n = n_min; n <= n_max; n += 2) pending.push_back(std::async(std::launch::async, theorem_row, n));
  for (auto& f : pending) rows.push_back(f.get());
  return rows;
}

std::string theorem_csv_header() { return "n,t,i,vertices,edges,pm_count,predicted,is_brick,is_extremal,n_minus_1,refutes"; }

std::string to_csv_row(const TheoremRow& r) {
  std::ostringstream out;
  auto b = [](bool v) { return v ? "true" : "false"; };
  out << r.n << ',' << r.t << ',' << r.i << ',' << r.vertices << ',' << r.edges << ',' << r.pm_count << ','
      << r.predicted << ',' << b(r.is_brick) << ',' << b(r.is_extremal) << ',' << r.n_minus_1 << ',' << b(r.refutes);
  return out.str();
}

void write_theorem_csv(std::ostream& out, const std::vector<TheoremRow>& rows) {
  out << theorem_csv_header() << '\n';
  for (const auto& r : rows) out << to_csv_row(r) << '\n';
}

void write_theorem_markdown(std::ostream& out, const std::vector<TheoremRow>& rows) {
  out << "| n | t | i | vertices | edges | pm_count | predicted | is_brick | is_extremal | n_minus_1 | refutes |\n"
      << "|---|---|---|---|---|---|---|---|---|---|---|\n";
  for (const auto& r : rows) {
    std::string row = to_csv_row(r);
    std::replace(row.begin(), row.end(), ',', '|');
    out << '|' << row << "|\n";
  }
}

ClaimsReport verify_claims(unsigned t_max) {
  if (t_max < 1) throw PreconditionError("t_max must be at least 1");
  ClaimsReport report;
  ClaimChecker check(report);

  check_base_brick(check);
  for (unsigned t = 1; t <= t_max; ++t) check_claim1(check, t);
  for (unsigned n = 18; n <= 8 * t_max + 16; n += 2) {
    const FamilyMember member = family_member(n);
    check.require(is_brick_elp(member.graph), "claim2", member_name(n), "brick", "pair-deletion test failed");
  }
  for (unsigned t = 1; t <= t_max; ++t) check_claim3(check, t);
  for (unsigned n = 18; n <= 8 * t_max + 16; n += 2) {
    const FamilyMember member = family_member(n);
    if (member.params.i == 2) {
      check_claim4_splice_case(check, member);
    } else {
      check_claim4_insertion_case(check, member);
    }
    check.require(is_extremal(member.graph), "claim4", member_name(n), "extremal",
                  std::to_string(count_perfect_matchings(member.graph)) + " perfect matchings vs dimension " +
                      std::to_string(matching_lattice_dimension(member.graph)));
  }
  return report;
}

void write_claims_report(std::ostream& out, const ClaimsReport& report) {
  for (const auto& c : report.checks) out << "PASS " << c.claim << " [" << c.instance << "] " << c.statement << '\n';
  out << report.checks.size() << " checks passed\n";
}

AnalysisReport analyze_file(const std::filesystem::path& path, const AnalysisRequest& request) {
  return analyze_graph(read_graph_file(path), request);
}

}  // namespace bricklab
