#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "fif/oracle.hpp"
#include "fif/partition.hpp"
#include "run.hpp"
#include "run_config.hpp"
#include "target_loader.hpp"

using fifit::load_target;
using fifit::parse_args;
using fifit::RunConfig;
using fifit::UsageError;

namespace fs = std::filesystem;

namespace {

fs::path make_temp_dir(const std::string& tag) {
  const fs::path dir = fs::temp_directory_path() / ("fifit_test_" + tag);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

std::vector<std::pair<std::size_t, double>> read_coeffs(const fs::path& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::string line;
  std::getline(in, line);
  REQUIRE(line == "k,alpha");
  std::vector<std::pair<std::size_t, double>> rows;
  while (std::getline(in, line)) {
    const auto comma = line.find(',');
    rows.emplace_back(std::stoul(line.substr(0, comma)),
                      std::stod(line.substr(comma + 1)));
  }
  return rows;
}

}  // namespace

TEST_CASE("flag parsing") {
  SUBCASE("uniform partition with broadcast scaling") {
    const RunConfig cfg =
        parse_args({"--a", "0", "--b", "1", "--n", "8", "--s", "0.3", "--target", "sin"});
    REQUIRE(cfg.uniform_segments.has_value());
    CHECK(*cfg.uniform_segments == 8);
    REQUIRE(cfg.scales.size() == 8);
    for (double s : cfg.scales) CHECK(s == 0.3);
    CHECK(cfg.target_spec == "sin");
    CHECK(cfg.quad.panels == 16);
    CHECK(cfg.quad.points == 5);
    CHECK(cfg.eval.depth == 6);
  }

  SUBCASE("explicit nodes with per-segment scaling") {
    const RunConfig cfg = parse_args(
        {"--nodes", "0,0.3,1", "--s", "0.2,-0.4", "--target", "csv:data.csv"});
    REQUIRE(cfg.nodes.has_value());
    CHECK(cfg.nodes->size() == 3);
    CHECK((*cfg.nodes)[1] == 0.3);
    const std::vector<double> expected{0.2, -0.4};
    CHECK(cfg.scales == expected);
  }

  SUBCASE("violations exit through UsageError") {
    CHECK_THROWS_AS(parse_args({"--n", "4", "--s", "1.0", "--target", "sin"}),
                    UsageError);
    CHECK_THROWS_AS(parse_args({"--n", "4", "--target", "sin", "--bogus", "1"}),
                    UsageError);
    CHECK_THROWS_AS(parse_args({"--n", "4"}), UsageError);  // missing target
    CHECK_THROWS_AS(parse_args({"--nodes", "0,x,1", "--target", "sin"}), UsageError);
    CHECK_THROWS_AS(parse_args({"--target", "sin"}), UsageError);  // no partition
    CHECK_THROWS_AS(parse_args({"--n", "4", "--nodes", "0,0.5,1", "--target", "sin"}),
                    UsageError);
    CHECK_THROWS_AS(parse_args({"--n", "4", "--s", "0.1,0.2,0.3", "--target", "sin"}),
                    UsageError);  // wrong list length
    CHECK_THROWS_AS(parse_args({"--n", "4", "--nodes", "0,0.6,0.5,1", "--target", "s"}),
                    UsageError);  // non-monotone nodes
  }

  SUBCASE("help is requested, not an error") {
    CHECK_THROWS_AS(parse_args({"--help"}), fifit::HelpRequested);
  }
}

TEST_CASE("builtin targets") {
  CHECK(load_target("sin", 0.0, 1.0)(0.5) == std::sin(0.5));
  CHECK(load_target("cos", 0.0, 1.0)(0.2) == std::cos(0.2));
  CHECK(load_target("runge", -1.0, 1.0)(0.0) == 1.0);
  CHECK(load_target("poly:1,0,2", 0.0, 1.0)(3.0) == 19.0);
  CHECK_THROWS_AS(load_target("nope", 0.0, 1.0), std::runtime_error);
  CHECK_THROWS_AS(load_target("poly:", 0.0, 1.0), std::runtime_error);
}

TEST_CASE("csv targets interpolate linearly and demand coverage") {
  const fs::path dir = make_temp_dir("csv");

  write_file(dir / "ok.csv", "x,y\n0,0\n1,2\n");
  const fif::TargetFunction f = load_target("csv:" + (dir / "ok.csv").string(), 0.0, 1.0);
  CHECK(f(0.25) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(f(1.0) == doctest::Approx(2.0).epsilon(1e-15));

  write_file(dir / "headerless.csv", "0,1\n0.5,2\n1,3\n");
  CHECK(load_target("csv:" + (dir / "headerless.csv").string(), 0.0, 1.0)(0.75) ==
        doctest::Approx(2.5).epsilon(1e-15));

  write_file(dir / "short.csv", "x,y\n0.1,0\n1,2\n");
  CHECK_THROWS_AS(load_target("csv:" + (dir / "short.csv").string(), 0.0, 1.0),
                  std::runtime_error);

  write_file(dir / "unsorted.csv", "x,y\n0,0\n0.6,1\n0.5,2\n1,3\n");
  CHECK_THROWS_AS(load_target("csv:" + (dir / "unsorted.csv").string(), 0.0, 1.0),
                  std::runtime_error);

  CHECK_THROWS_AS(load_target("csv:" + (dir / "missing.csv").string(), 0.0, 1.0),
                  std::runtime_error);
}

TEST_CASE("end-to-end run writes coefficients, samples, and a report") {
  const fs::path dir = make_temp_dir("run");
  RunConfig cfg = parse_args({"--n", "4", "--s", "0.3", "--target", "poly:0,1",
                              "--depth", "4",
                              "--out-coeffs", (dir / "c.csv").string(),
                              "--out-samples", (dir / "s.csv").string(),
                              "--out-report", (dir / "r.json").string()});
  REQUIRE(fifit::run(cfg) == 0);

  const auto coeffs = read_coeffs(dir / "c.csv");
  REQUIRE(coeffs.size() == 5);
  for (std::size_t k = 0; k < 5; ++k) {
    CHECK(coeffs[k].first == k);
    CHECK(std::abs(coeffs[k].second - 0.25 * static_cast<double>(k)) <= 1e-10);
  }

  const nlohmann::json report = nlohmann::json::parse(slurp(dir / "r.json"));
  CHECK(report.at("n") == 4);
  CHECK(report.at("s").size() == 4);
  CHECK(report.at("collage_residual").get<double>() <= 1e-10);
  CHECK(report.at("max_node_jump").get<double>() <= 1e-10);
  CHECK(report.at("quad").at("panels") == 16);
  CHECK(report.at("depth") == 4);
  const double bound = report.at("collage_bound").get<double>();
  const double recomputed = report.at("collage_residual").get<double>() /
                            (1.0 - report.at("contraction").get<double>());
  CHECK(std::abs(bound - recomputed) <= 1e-10 * std::max(1.0, std::abs(bound)));

  // Sample rows carry the target alongside the approximant.
  std::ifstream samples(dir / "s.csv");
  std::string line;
  std::getline(samples, line);
  CHECK(line == "x,f_target,f_approx");
  std::size_t rows = 0;
  while (std::getline(samples, line)) ++rows;
  CHECK(rows == 1025);  // 4^5 + 1 address points at depth 4
}

TEST_CASE("zero target produces all-zero outputs") {
  const fs::path dir = make_temp_dir("zero");
  RunConfig cfg = parse_args({"--n", "4", "--s", "0.2", "--target", "poly:0",
                              "--depth", "3",
                              "--out-coeffs", (dir / "c.csv").string(),
                              "--out-samples", (dir / "s.csv").string(),
                              "--out-report", (dir / "r.json").string()});
  REQUIRE(fifit::run(cfg) == 0);
  for (const auto& [k, alpha] : read_coeffs(dir / "c.csv")) {
    CHECK(std::abs(alpha) <= 1e-14);
  }
  const nlohmann::json report = nlohmann::json::parse(slurp(dir / "r.json"));
  CHECK(report.at("collage_residual").get<double>() <= 1e-14);
  CHECK(report.at("measured_l2_error").get<double>() <= 1e-14);
}

TEST_CASE("a zero-scaling run reproduces the hat projection") {
  const fs::path dir = make_temp_dir("hat");
  RunConfig cfg = parse_args({"--n", "8", "--s", "0", "--target", "sin",
                              "--depth", "4",
                              "--out-coeffs", (dir / "c.csv").string(),
                              "--out-samples", (dir / "s.csv").string(),
                              "--out-report", (dir / "r.json").string()});
  REQUIRE(fifit::run(cfg) == 0);
  const std::vector<double> reference = fif::oracle::hat_projection(
      {[](double x) { return std::sin(x); }, "sin"}, fif::build_partition(0.0, 1.0, 8),
      {});
  const auto coeffs = read_coeffs(dir / "c.csv");
  REQUIRE(coeffs.size() == reference.size());
  for (std::size_t k = 0; k < reference.size(); ++k) {
    CHECK(std::abs(coeffs[k].second - reference[k]) <= 1e-10);
  }
}

TEST_CASE("binary exit codes separate usage errors from pipeline errors") {
  const fs::path dir = make_temp_dir("exit");
  const std::string quiet = " > /dev/null 2>&1";
  auto exit_code = [&](const std::string& args) {
    const int status = std::system((std::string(FIFIT_BIN) + " " + args + quiet).c_str());
    return WEXITSTATUS(status);
  };
  CHECK(exit_code("--help") == 0);
  CHECK(exit_code("--n 4 --s 1.0 --target sin") == 2);
  CHECK(exit_code("--n 4 --target sin --bogus 1") == 2);
  CHECK(exit_code("--n 4") == 2);  // missing target
  CHECK(exit_code("--n 4 --target csv:" + (dir / "absent.csv").string()) == 1);
  CHECK(exit_code("--n 4 --s 0.3 --target sin --depth 3"
                  " --out-coeffs " + (dir / "c.csv").string() +
                  " --out-samples " + (dir / "s.csv").string() +
                  " --out-report " + (dir / "r.json").string()) == 0);
}

TEST_CASE("identical configurations write identical bytes") {
  const fs::path dir = make_temp_dir("determinism");
  for (int round = 0; round < 2; ++round) {
    const std::string tag = std::to_string(round);
    RunConfig cfg = parse_args({"--n", "8", "--s", "0.4", "--target", "exp",
                                "--depth", "4", "--threads", round == 0 ? "1" : "3",
                                "--out-coeffs", (dir / ("c" + tag)).string(),
                                "--out-samples", (dir / ("s" + tag)).string(),
                                "--out-report", (dir / ("r" + tag)).string()});
    REQUIRE(fifit::run(cfg) == 0);
  }
  CHECK(slurp(dir / "c0") == slurp(dir / "c1"));
  CHECK(slurp(dir / "s0") == slurp(dir / "s1"));
  CHECK(slurp(dir / "r0") == slurp(dir / "r1"));
}
