// Command-line verification harness: runs the built-in worked examples,
// the seeded property suite, and pointwise-orthogonal-complement
// computations over JSON series files.
//
// Exit codes: 0 all checks pass, 1 at least one check failed, 2 bad input
// or configuration.

#include <CLI11.hpp>
#include <iostream>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "wedgeops/harness.hpp"
#include "wedgeops/operators.hpp"
#include "wedgeops/serialization.hpp"

namespace {

struct SuiteOptions {
  wedgeops::RunConfig cfg;
  std::vector<std::string> tol_overrides;
  bool text = false;
  bool json = false;
};

void apply_tol_overrides(wedgeops::RunConfig& cfg, const std::vector<std::string>& overrides) {
  for (const std::string& entry : overrides) {
    const auto pos = entry.find('=');
    if (pos == std::string::npos || pos == 0 || pos + 1 == entry.size()) {
      throw std::invalid_argument("--tol expects check_id=value, got '" + entry + "'");
    }
    std::size_t consumed = 0;
    const std::string value = entry.substr(pos + 1);
    const double tol = std::stod(value, &consumed);
    if (consumed != value.size()) {
      throw std::invalid_argument("--tol expects a numeric value, got '" + value + "'");
    }
    cfg.tol_overrides[entry.substr(0, pos)] = tol;
  }
}

void load_symbols(wedgeops::RunConfig& cfg) {
  for (const std::string& path : cfg.xi_files) {
    cfg.external_symbols.push_back(wedgeops::load_series(path));
  }
}

int emit_report(const wedgeops::SuiteReport& report, const wedgeops::RunConfig* cfg, bool text) {
  if (text) {
    std::cout << wedgeops::report_to_text(report);
  } else {
    std::cout << wedgeops::report_to_json(report, cfg).dump(2) << "\n";
  }
  return report.all_ok() ? 0 : 1;
}

int run_poc(const std::vector<std::string>& files, int degree, double tol) {
  std::vector<wedgeops::VecTrigPoly> symbols;
  for (const std::string& path : files) symbols.push_back(wedgeops::load_series(path));
  const int dim = symbols.front().valdim();
  for (const auto& s : symbols) {
    if (!s.is_analytic(0.0)) {
      throw std::invalid_argument("poc: symbol has negative frequencies");
    }
  }
  const wedgeops::PocResult result = wedgeops::poc_basis(symbols, dim, degree, tol);
  nlohmann::json basis = nlohmann::json::array();
  for (const auto& b : result.basis) basis.push_back(wedgeops::to_json(b));
  const nlohmann::json out = {{"dimension", result.dimension()},
                              {"degenerate", result.degenerate},
                              {"degree", degree},
                              {"valdim", dim},
                              {"basis", std::move(basis)}};
  std::cout << out.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exterior-power and creation-operator verification harness"};
  app.require_subcommand(1);

  auto* paper = app.add_subcommand("paper-examples", "run the built-in worked examples");
  bool paper_json = false;
  bool paper_text = false;
  paper->add_flag("--json", paper_json, "JSON report (default: text)");
  paper->add_flag("--text", paper_text, "plain-text report");

  SuiteOptions suite_opts;
  bool suite_seed_given = false;
  auto* suite = app.add_subcommand("suite", "run the seeded property suite");
  suite->add_option("--dim", suite_opts.cfg.dim, "value-space dimension d");
  suite->add_option("--degree", suite_opts.cfg.degree, "analytic truncation degree N");
  suite->add_option("--grade", suite_opts.cfg.grade, "wedge grade p");
  suite->add_option("--trials", suite_opts.cfg.trials, "randomized trials per check");
  suite->add_option("--seed", suite_opts.cfg.seed, "PRNG seed (default: WEDGEOPS_SEED or 0)")
      ->each([&](const std::string&) { suite_seed_given = true; });
  suite->add_option("--tol", suite_opts.tol_overrides, "tolerance override check_id=value (repeatable)");
  suite->add_option("--xi", suite_opts.cfg.xi_files, "JSON series file with an extra symbol (repeatable)");
  suite->add_flag("--text", suite_opts.text, "plain-text report");
  suite->add_flag("--json", suite_opts.json, "JSON report (default)");

  auto* poc = app.add_subcommand("poc", "orthonormal basis of a pointwise orthogonal complement");
  std::vector<std::string> poc_files;
  int poc_degree = 4;
  double poc_tol = 1e-10;
  poc->add_option("--xi", poc_files, "JSON series file (repeatable)")->required();
  poc->add_option("--degree", poc_degree, "analytic truncation degree N");
  poc->add_option("--tol", poc_tol, "relative nullspace threshold");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (paper->parsed()) {
      return emit_report(wedgeops::run_paper_examples(), nullptr, !paper_json || paper_text);
    }
    if (suite->parsed()) {
      if (!suite_seed_given) suite_opts.cfg.seed = wedgeops::default_seed();
      apply_tol_overrides(suite_opts.cfg, suite_opts.tol_overrides);
      load_symbols(suite_opts.cfg);
      suite_opts.cfg.validate();
      return emit_report(wedgeops::run_suite(suite_opts.cfg), &suite_opts.cfg,
                         suite_opts.text && !suite_opts.json);
    }
    if (poc->parsed()) {
      if (poc_degree < 0) throw std::invalid_argument("poc: degree must be >= 0");
      return run_poc(poc_files, poc_degree, poc_tol);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
