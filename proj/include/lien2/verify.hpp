#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace lien2 {

struct VerifyOptions {
  std::uint64_t seed = 42;
  int k_max = 3;
  /// When set, replaces the pinned tolerance of every float-bound check
  /// (exact checks are unaffected), to probe headroom.
  std::optional<double> tolerance_override;

  // Sample counts; the defaults are the acceptance counts.
  int exp_samples = 1000;
  int orbit_f_samples = 500;
  int conservation_f = 100;
  int conservation_moves = 50;
  int char_samples = 200;
  int rep_char_samples = 200;
  int tangency_points = 500;
  int h_points = 1000;
  int jacobian_triples = 100;
  int leaf_f_samples = 200;
  int leaf_moves = 20;

  double pick(double pinned) const {
    return tolerance_override ? *tolerance_override : pinned;
  }
};

struct CheckResult {
  std::string id;
  std::string family;  // display name of the swept instance
  long samples = 0;
  double max_defect = 0.0;
  double tolerance = 0.0;
  bool exact = false;  // defect must be exactly zero
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  VerifyOptions options;
  std::vector<CheckResult> checks;

  bool all_pass() const;
  /// Worst defect over all rows with the given check id (pass flag anded).
  CheckResult aggregate(const std::string& id) const;
};

/// Runs every invariant suite across the family sweep. Deterministic for a
/// fixed (seed, tolerance, k_max): repeated runs render byte-identically.
VerifyReport run_verification(const VerifyOptions& options);

std::string render_report_text(const VerifyReport& report);
nlohmann::json render_report_json(const VerifyReport& report);
std::string render_report_csv(const VerifyReport& report);

}  // namespace lien2
