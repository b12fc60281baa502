#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <string>

#include "gammaq/gamma.hpp"
#include "gammaq/state_io.hpp"
#include "gammaq/zoo.hpp"

using namespace gammaq;
using nlohmann::json;

namespace {

struct CliResult {
  int exit_code = -1;
  std::string output;
};

CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string(GAMMAQ_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult result;
  std::array<char, 512> buf{};
  while (fgets(buf.data(), buf.size(), pipe) != nullptr) {
    result.output += buf.data();
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

double parse_gamma_line(const std::string& output) {
  const std::string key = "gamma = ";
  const std::size_t pos = output.find(key);
  REQUIRE(pos != std::string::npos);
  return std::stod(output.substr(pos + key.size()));
}

}  // namespace

TEST_CASE("cli gamma text output") {
  const CliResult r = run_cli("gamma --zoo ghz3");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("(norms: all 2)") != std::string::npos);
  CHECK(std::abs(parse_gamma_line(r.output) - std::sqrt(0.5)) < 1e-12);

  const CliResult bell4 = run_cli("gamma --zoo bell --norm 2=4");
  CHECK(bell4.exit_code == 0);
  CHECK(std::abs(parse_gamma_line(bell4.output) - 1.0) < 1e-12);
  CHECK(bell4.output.find("(norms: all 4)") != std::string::npos);
}

TEST_CASE("cli profile lists every subset with raw and weighted values") {
  const CliResult r = run_cli("profile --zoo psi1");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("subset {2,4}: 0.125 (weighted 0.25") != std::string::npos);
  CHECK(r.output.find("subset {1,2,3}: 0.125") != std::string::npos);
  CHECK(r.output.find("subset {1,3,4}: 0.125") != std::string::npos);
  CHECK(r.output.find("subset {1,2}: 0 ") != std::string::npos);
  CHECK(std::abs(parse_gamma_line(r.output) - std::sqrt(0.75)) < 1e-12);
}

TEST_CASE("cli json output conforms to the report schema") {
  const CliResult r = run_cli("gamma --zoo w --json");
  CHECK(r.exit_code == 0);
  const json doc = json::parse(r.output);
  CHECK(doc.at("gamma").is_number());
  CHECK(doc.at("norms").at("2").get<double>() == 2.0);
  CHECK(doc.at("norms").at("3").get<double>() == 2.0);
  CHECK(doc.at("contributions").is_array());
  CHECK(doc.at("contributions").size() == 4);
  CHECK(doc.at("contributions")[0].at("subset").get<std::vector<int>>() ==
        std::vector<int>{1, 2});
  CHECK(doc.at("term_counts").at("2").get<int>() == 6);
  CHECK(doc.at("term_counts").at("3").get<int>() == 1);

  // Text and JSON agree on the value.
  const CliResult t = run_cli("gamma --zoo w");
  CHECK(parse_gamma_line(t.output) == doctest::Approx(doc.at("gamma").get<double>())
                                          .epsilon(1e-15));
}

TEST_CASE("cli sup json carries the optimizer section") {
  const CliResult r = run_cli("sup --zoo bell --restarts 3 --seed 5 --json");
  CHECK(r.exit_code == 0);
  const json doc = json::parse(r.output);
  const json& opt = doc.at("optimizer");
  CHECK(opt.at("gamma_sup_lower_bound").is_number());
  CHECK(opt.at("restarts").get<int>() == 3);
  CHECK(opt.at("evaluations").is_number_integer());
  CHECK(opt.at("per_restart").size() == 3);
  CHECK(opt.at("achieving_parameters").size() == 2);
  CHECK(opt.at("achieving_parameters")[0].size() == 4);
  CHECK(doc.at("report").at("gamma").get<double>() ==
        opt.at("gamma_sup_lower_bound").get<double>());
  CHECK(opt.at("gamma_sup_lower_bound").get<double>() >= std::sqrt(0.5) - 1e-9);
}

TEST_CASE("cli verify-povm") {
  const CliResult r = run_cli("verify-povm --zoo ghz3 --seed 7");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("max |gamma - 2pi|rho|| = ") != std::string::npos);
  CHECK(r.output.find("PASS") != std::string::npos);

  const CliResult j = run_cli("verify-povm --zoo w --seed 3 --nodes 16 --json");
  CHECK(j.exit_code == 0);
  const json doc = json::parse(j.output);
  CHECK(doc.at("pass").get<bool>());
  CHECK(doc.at("nodes").get<int>() == 16);
  CHECK(doc.at("max_abs_error").get<double>() < 1e-9);
}

TEST_CASE("cli zoo command writes loadable state files") {
  const auto path = std::filesystem::temp_directory_path() / "gammaq_cli_zoo.json";
  const CliResult r = run_cli("zoo --zoo psi2 --out " + path.string());
  CHECK(r.exit_code == 0);
  const PureState loaded = read_state_file(path.string());
  const NormalizationVector norms = NormalizationVector::uniform(4);
  CHECK(gamma(loaded, norms).gamma == gamma(psi2(), norms).gamma);
  std::filesystem::remove(path);

  const CliResult list = run_cli("zoo");
  CHECK(list.exit_code == 0);
  CHECK(list.output.find("ghz") != std::string::npos);
  CHECK(list.output.find("cat<m>") != std::string::npos);
}

TEST_CASE("cli exit codes") {
  CHECK(run_cli("gamma --zoo does-not-exist").exit_code == 1);
  CHECK(run_cli("gamma").exit_code == 1);
  CHECK(run_cli("nonsense-command").exit_code == 1);
  CHECK(run_cli("gamma --zoo ghz3 --norm nonsense").exit_code == 1);

  const auto path = std::filesystem::temp_directory_path() / "gammaq_cli_zero.json";
  std::ofstream(path) << R"({"dims":[2,2],"entries":[{"ket":"00","re":0.0}]})";
  CHECK(run_cli("gamma --file " + path.string()).exit_code == 1);
  std::filesystem::remove(path);

  CHECK(run_cli("gamma --zoo ghz3").exit_code == 0);
}
