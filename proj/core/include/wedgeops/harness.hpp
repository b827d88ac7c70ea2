#ifndef WEDGEOPS_HARNESS_HPP
#define WEDGEOPS_HARNESS_HPP

#include <cstdint>
#include <map>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "wedgeops/trigpoly.hpp"

namespace wedgeops {

enum class CheckStatus { Pass, Fail, Degenerate };

std::string to_string(CheckStatus status);

/// One verification outcome. `status` is pass exactly when
/// measured <= tolerance, except for degenerate configurations (e.g. a
/// wedge grade above the dimension), which are reported as such and do not
/// fail a run. Identical seeds and inputs reproduce identical measured
/// values.
struct CheckResult {
  std::string check_id;
  CheckStatus status = CheckStatus::Pass;
  double measured = 0.0;
  double tolerance = 0.0;
  std::string details;
  std::uint64_t seed = 0;
};

struct RunConfig {
  int dim = 3;
  int degree = 6;
  int grade = 2;
  int trials = 50;
  std::uint64_t seed = 0;
  std::map<std::string, double> tol_overrides;  // check_id -> tolerance
  std::vector<std::string> xi_files;            // echoed into reports
  std::vector<VecTrigPoly> external_symbols;    // loaded from xi_files

  /// Throws std::invalid_argument on out-of-range values.
  void validate() const;
};

struct SuiteReport {
  std::vector<CheckResult> checks;  // sorted by check_id
  int passed = 0;
  int failed = 0;
  int degenerate = 0;

  bool all_ok() const { return failed == 0; }
};

/// Runs every invariant of the tensor, series and operator modules with
/// seeded randomness. Deterministic per config.
SuiteReport run_suite(const RunConfig& cfg);

/// Runs the built-in worked examples (fixed inputs, no configuration).
SuiteReport run_paper_examples();

nlohmann::json report_to_json(const SuiteReport& report, const RunConfig* cfg);
std::string report_to_text(const SuiteReport& report);

/// Default seed: the WEDGEOPS_SEED environment variable when set, else 0.
std::uint64_t default_seed();

}  // namespace wedgeops

#endif
