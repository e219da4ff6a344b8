#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "evanslab/cli.hpp"

using namespace evanslab;
namespace fs = std::filesystem;

namespace {

std::string temp_path(const std::string& name) {
  return (fs::temp_directory_path() / ("evanslab_test_" + name)).string();
}

nlohmann::json read_json(const std::string& path) {
  std::ifstream f(path);
  REQUIRE(f.good());
  nlohmann::json j;
  f >> j;
  return j;
}

std::string read_text(const std::string& path) {
  std::ifstream f(path);
  REQUIRE(f.good());
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("default configuration JSON") {
  nlohmann::json j = cli::default_config_json();
  CHECK(j.at("schema").get<int>() == kSchemaVersion);
  CHECK(j.at("grid").at("n").get<int>() == 120);
  CHECK(j.at("L").get<double>() == 30.0);
  CHECK(j.contains("seed"));
  CHECK(j.contains("threads"));
}

TEST_CASE("catalog task lists all ten examples") {
  cli::JobConfig cfg;
  cfg.task = "catalog";
  cfg.out = temp_path("catalog.json");
  REQUIRE(cli::run(cfg) == 0);
  nlohmann::json j = read_json(cfg.out);
  CHECK(j.at("schema").get<int>() == kSchemaVersion);
  REQUIRE(j.at("examples").size() == 10);
  CHECK(j["examples"][0]["shape"] == "pulse");
  CHECK(j["examples"][1]["shape"] == "front");
  CHECK(j["examples"][2]["kind"] == "piecewise");
  CHECK(j["examples"][4]["c"].get<double>() > 0.0);
}

TEST_CASE("profile-check validates closed-form and piecewise entries") {
  cli::JobConfig cfg;
  cfg.task = "profile-check";
  cfg.example = 1;
  cfg.out = temp_path("pc1.json");
  REQUIRE(cli::run(cfg) == 0);
  nlohmann::json j1 = read_json(cfg.out);
  CHECK(j1.at("ok").get<bool>());
  CHECK(j1.at("residual").get<double>() < 1e-6);

  cfg.example = 3;
  cfg.out = temp_path("pc3.json");
  REQUIRE(cli::run(cfg) == 0);
  nlohmann::json j3 = read_json(cfg.out);
  CHECK(j3.at("piecewise_valid").get<bool>());
}

TEST_CASE("essential task writes border CSV") {
  cli::JobConfig cfg;
  cfg.task = "essential";
  cfg.example = 2;
  cfg.out = temp_path("borders.csv");
  REQUIRE(cli::run(cfg) == 0);
  std::string csv = read_text(cfg.out);
  CHECK(csv.rfind("k,re_lambda,im_lambda,branch,side\n", 0) == 0);
  // 2 sides x 2 branches x 2001 samples plus the header.
  size_t lines = std::count(csv.begin(), csv.end(), '\n');
  CHECK(lines >= 4 * 2001);
}

TEST_CASE("evans-scan finds the known eigenvalue and honours --fail-on-unstable") {
  cli::JobConfig cfg;
  cfg.task = "evans-scan";
  cfg.example = 7;
  cfg.params = {{"D", 1.0}};
  cfg.scan_lo = 4.0;
  cfg.scan_hi = 6.0;
  cfg.scan_n = 16;
  cfg.out = temp_path("scan7.json");
  REQUIRE(cli::run(cfg) == 0);
  nlohmann::json j = read_json(cfg.out);
  REQUIRE(j.at("roots").size() == 1);
  CHECK(j["roots"][0]["lambda"][0].get<double>() == Catch::Approx(5.0).margin(1e-5));

  cfg.fail_on_unstable = true;
  CHECK(cli::run(cfg) == 2);
}

TEST_CASE("invalid configurations exit with status 1") {
  cli::JobConfig cfg;
  cfg.task = "no-such-task";
  CHECK(cli::run(cfg) == 1);

  cfg.task = "profile-check";
  cfg.example = 42;
  CHECK(cli::run(cfg) == 1);

  cfg.task = "catalog";
  cfg.example = 0;
  cfg.out = "/nonexistent-dir/out.json";
  CHECK(cli::run(cfg) == 1);
}

TEST_CASE("winding task certifies example 6 stability") {
  cli::JobConfig cfg;
  cfg.task = "winding";
  cfg.example = 6;
  cfg.out = temp_path("winding6.json");
  cfg.fail_on_unstable = true;
  REQUIRE(cli::run(cfg) == 0);
  nlohmann::json j = read_json(cfg.out);
  CHECK(j.at("winding").get<int>() == 0);
  CHECK(j.at("chart").get<std::string>() == "t3");
}

#ifdef EVANSLAB_CLI_PATH
TEST_CASE("command-line front end") {
  std::string exe = EVANSLAB_CLI_PATH;
  REQUIRE(fs::exists(exe));

  std::string out = temp_path("cli_defaults.json");
  REQUIRE(std::system((exe + " --print-defaults > " + out).c_str()) == 0);
  nlohmann::json defs = read_json(out);
  CHECK(defs.at("schema").get<int>() == kSchemaVersion);

  std::string cat = temp_path("cli_catalog.json");
  REQUIRE(std::system((exe + " catalog --out " + cat).c_str()) == 0);
  CHECK(read_json(cat).at("examples").size() == 10);

  // No subcommand: usage on stderr, exit 1.
  int rc = std::system((exe + " > /dev/null 2>&1").c_str());
  CHECK(WEXITSTATUS(rc) == 1);

  // Malformed --grid is rejected.
  rc = std::system((exe + " evans-scan --example 7 --grid bogus > /dev/null 2>&1").c_str());
  CHECK(WEXITSTATUS(rc) == 1);
}
#endif
