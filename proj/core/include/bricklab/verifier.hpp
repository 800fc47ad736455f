#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "bricklab/brick_analysis.hpp"
#include "bricklab/constructions.hpp"
#include "bricklab/errors.hpp"
#include "bricklab/graph.hpp"

namespace bricklab {

/// A checked statement turned out false. Carries the offending object
/// (matching, cut side, count) in serialised form.
class VerificationFailure : public Error {
 public:
  VerificationFailure(std::string claim, std::string instance, std::string counterwitness);

  const std::string& claim() const noexcept { return claim_; }
  const std::string& instance() const noexcept { return instance_; }
  const std::string& counterwitness() const noexcept { return counterwitness_; }

 private:
  std::string claim_;
  std::string instance_;
  std::string counterwitness_;
};

struct TheoremRow {
  unsigned n = 0;
  unsigned t = 0;
  unsigned i = 0;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::uint64_t pm_count = 0;
  std::uint64_t predicted = 0;
  bool is_brick = false;
  bool is_extremal = false;
  std::uint64_t n_minus_1 = 0;
  bool refutes = false;
};

/// (5n + 8 - i) / 8, which equals ceil(5n / 8) on the family.
std::uint64_t predicted_matching_count(const FamilyParams& params);

struct TheoremOptions {
  bool parallel = true;
};

/// One row per even n in [n_min, n_max], ordered by n. Throws
/// VerificationFailure on the first row whose computed values disagree with
/// the closed forms (vertex count, edge count t + 1 + 3n/2, brickness,
/// matching count, extremality, count below n - 1).
std::vector<TheoremRow> verify_theorem(unsigned n_min, unsigned n_max, const TheoremOptions& options = {});

std::string theorem_csv_header();
std::string to_csv_row(const TheoremRow& row);
void write_theorem_csv(std::ostream& out, const std::vector<TheoremRow>& rows);
void write_theorem_markdown(std::ostream& out, const std::vector<TheoremRow>& rows);

struct CheckRecord {
  std::string claim;
  std::string instance;
  std::string statement;
};

struct ClaimsReport {
  std::vector<CheckRecord> checks;
};

/// Instance checks of the four structural claims behind the theorem and of
/// the 14-vertex base brick, for ladder lengths t = 1..t_max. Throws
/// VerificationFailure on the first failed check.
ClaimsReport verify_claims(unsigned t_max);

void write_claims_report(std::ostream& out, const ClaimsReport& report);

AnalysisReport analyze_file(const std::filesystem::path& path, const AnalysisRequest& request = {});

}  // namespace bricklab
