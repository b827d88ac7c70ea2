#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <nlohmann/json.hpp>
#include <string>

#include "wedgeops/serialization.hpp"

#ifndef WEDGEOPS_CLI_PATH
#error "WEDGEOPS_CLI_PATH must point at the CLI binary"
#endif

namespace {

struct CommandResult {
  int exit_code = -1;
  std::string output;
};

CommandResult run_cli(const std::string& args) {
  const std::string command = std::string(WEDGEOPS_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CommandResult result;
  std::array<char, 4096> buffer{};
  std::size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    result.output.append(buffer.data(), got);
  }
  const int status = pclose(pipe);
  result.exit_code = WEXITSTATUS(status);
  return result;
}

std::string write_temp(const std::string& name, const std::string& body) {
  const std::string path = std::string("cli_test_") + name + ".json";
  std::ofstream out(path);
  out << body;
  return path;
}

const char* kGoldenSymbol = R"({
  "valdim": 2, "kmin": 0,
  "coeffs": [ [[0.7071067811865476, 0], [0, 0]], [[0, 0], [0.7071067811865476, 0]] ]
})";

const char* kZSquaredSymbol = R"({
  "valdim": 2, "kmin": 1,
  "coeffs": [ [[1, 0], [0, 0]], [[0, 0], [1, 0]] ]
})";

}  // namespace

TEST_CASE("paper-examples runs clean") {
  const CommandResult text = run_cli("paper-examples");
  CHECK(text.exit_code == 0);
  CHECK(text.output.find("summary:") != std::string::npos);
  CHECK(text.output.find("fail") != std::string::npos);  // the summary line counts failures

  const CommandResult json = run_cli("paper-examples --json");
  CHECK(json.exit_code == 0);
  const auto report = nlohmann::json::parse(json.output);
  CHECK(report["summary"]["fail"] == 0);
  CHECK(report["summary"]["total"] == report["checks"].size());
}

TEST_CASE("suite emits a valid, sorted, seeded JSON report") {
  const CommandResult result = run_cli("suite --dim 3 --grade 2 --degree 5 --trials 10 --seed 42");
  CHECK(result.exit_code == 0);
  const auto report = nlohmann::json::parse(result.output);
  CHECK(report["summary"]["fail"] == 0);
  CHECK(report["config"]["seed"] == 42);
  CHECK(report["config"]["dim"] == 3);

  std::string previous;
  for (const auto& check : report["checks"]) {
    const std::string id = check["check_id"].get<std::string>();
    CHECK(previous < id);
    previous = id;
    CHECK(check.contains("measured"));
    CHECK(check.contains("tolerance"));
    CHECK(check.contains("seed"));
    const std::string status = check["status"].get<std::string>();
    const bool within = check["measured"].get<double>() <= check["tolerance"].get<double>();
    if (status == "pass") CHECK(within);
    if (status == "fail") CHECK_FALSE(within);
  }
}

TEST_CASE("reference configuration passes everything") {
  const CommandResult result = run_cli("suite --dim 3 --grade 3 --degree 6 --trials 50 --seed 7");
  CHECK(result.exit_code == 0);
  const auto report = nlohmann::json::parse(result.output);
  CHECK(report["summary"]["fail"] == 0);
  CHECK(report["summary"]["degenerate"] == 0);
}

TEST_CASE("a failing check drives exit code 1") {
  // negative tolerance can never be met, so the run must report failure
  const CommandResult result = run_cli(
      "suite --dim 2 --grade 2 --degree 3 --trials 2 --seed 5 --tol wedge_core.gram_nonneg=-1");
  CHECK(result.exit_code == 1);
  const auto report = nlohmann::json::parse(result.output);
  CHECK(report["summary"]["fail"].get<int>() >= 1);
}

TEST_CASE("suite reports are byte-identical for identical configs") {
  const std::string args = "suite --dim 3 --grade 3 --degree 4 --trials 5 --seed 7";
  const CommandResult first = run_cli(args);
  const CommandResult second = run_cli(args);
  CHECK(first.exit_code == 0);
  CHECK(first.output == second.output);
  CHECK(first.output.size() > 100);
}

TEST_CASE("grade above dimension degrades gracefully") {
  const CommandResult result = run_cli("suite --dim 2 --grade 5 --trials 3 --seed 1");
  CHECK(result.exit_code == 0);
  const auto report = nlohmann::json::parse(result.output);
  CHECK(report["summary"]["degenerate"].get<int>() >= 1);
  CHECK(report["summary"]["fail"] == 0);
}

TEST_CASE("help exits cleanly") {
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("suite --help").exit_code == 0);
}

TEST_CASE("config and input errors exit with status 2") {
  CHECK(run_cli("suite --trials 0").exit_code == 2);
  CHECK(run_cli("suite --dim 0").exit_code == 2);
  CHECK(run_cli("poc --xi does_not_exist.json").exit_code == 2);
  CHECK(run_cli("nonsense-subcommand").exit_code == 2);

  const std::string malformed = write_temp("malformed", "{ not json");
  CHECK(run_cli("poc --xi " + malformed).exit_code == 2);

  const std::string antianalytic =
      write_temp("antianalytic", R"({"valdim": 1, "kmin": -1, "coeffs": [[[1, 0]]]})");
  CHECK(run_cli("poc --xi " + antianalytic).exit_code == 2);
}

TEST_CASE("poc subcommand: dimensions and the membership example") {
  const std::string golden = write_temp("golden", kGoldenSymbol);
  const CommandResult result = run_cli("poc --xi " + golden + " --degree 4");
  CHECK(result.exit_code == 0);
  const auto out = nlohmann::json::parse(result.output);
  CHECK(out["dimension"] == 4);
  CHECK(out["degenerate"] == false);
  CHECK(out["basis"].size() == 4);

  // constant e1 at degree 0: dimension 1, spanning e2
  const std::string constant =
      write_temp("constant", R"({"valdim": 2, "kmin": 0, "coeffs": [[[1, 0], [0, 0]]]})");
  const CommandResult c0 = run_cli("poc --xi " + constant + " --degree 0");
  CHECK(c0.exit_code == 0);
  const auto cj = nlohmann::json::parse(c0.output);
  CHECK(cj["dimension"] == 1);
  const auto basis_vec = wedgeops::series_from_json(cj["basis"][0]);
  CHECK(std::abs(basis_vec.coeff(0)[0]) < 1e-12);
  CHECK(std::abs(std::abs(basis_vec.coeff(0)[1]) - 1.0) < 1e-12);

  // (z, z^2) at degree 3: the span contains (1, -z)
  const std::string gfile = write_temp("zz2", kZSquaredSymbol);
  const CommandResult gz = run_cli("poc --xi " + gfile + " --degree 3");
  CHECK(gz.exit_code == 0);
  const auto gj = nlohmann::json::parse(gz.output);
  wedgeops::VecTrigPoly f(2, 0,
                          {wedgeops::Vec::Unit(2, 0),
                           wedgeops::Complex(-1.0, 0.0) * wedgeops::Vec::Unit(2, 1)});
  wedgeops::VecTrigPoly projection = wedgeops::VecTrigPoly::zero(2);
  for (const auto& bj : gj["basis"]) {
    const auto b = wedgeops::series_from_json(bj);
    projection = projection + b * wedgeops::l2_inner(f, b);
  }
  CHECK((f - projection).l2_norm() < 1e-10 * f.l2_norm());
}

TEST_CASE("WEDGEOPS_SEED provides the default seed") {
  // set the variable through the shell for one invocation
  const std::string command = std::string("WEDGEOPS_SEED=123 ") + WEDGEOPS_CLI_PATH +
                              " suite --dim 2 --grade 2 --degree 3 --trials 2 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  std::array<char, 4096> buffer{};
  std::size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) output.append(buffer.data(), got);
  CHECK(WEXITSTATUS(pclose(pipe)) == 0);
  CHECK(nlohmann::json::parse(output)["config"]["seed"] == 123);
}

TEST_CASE("suite accepts external symbols") {
  const std::string golden = write_temp("golden_ext", kGoldenSymbol);
  const CommandResult result =
      run_cli("suite --dim 2 --grade 2 --degree 4 --trials 5 --seed 3 --xi " + golden);
  CHECK(result.exit_code == 0);
  const auto report = nlohmann::json::parse(result.output);
  CHECK(report["config"]["xi_files"].size() == 1);
  bool found = false;
  for (const auto& check : report["checks"]) {
    if (check["check_id"] == "operators.toeplitz_identity") {
      found = check["details"].get<std::string>().find("external") != std::string::npos;
    }
  }
  CHECK(found);
}

TEST_CASE("tolerance overrides are applied and echoed") {
  const CommandResult result = run_cli(
      "suite --dim 2 --grade 2 --degree 3 --trials 2 --seed 5 --tol "
      "wedge_core.gram_nonneg=0.5");
  CHECK(result.exit_code == 0);
  const auto report = nlohmann::json::parse(result.output);
  CHECK(report["config"]["tol_overrides"]["wedge_core.gram_nonneg"] == 0.5);
  for (const auto& check : report["checks"]) {
    if (check["check_id"] == "wedge_core.gram_nonneg") {
      CHECK(check["tolerance"] == 0.5);
    }
  }
  CHECK(run_cli("suite --tol no_equals_sign").exit_code == 2);
}
