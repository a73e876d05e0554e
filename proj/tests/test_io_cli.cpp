#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "minrank/cli.hpp"
#include "minrank/experiment.hpp"
#include "minrank/instance_io.hpp"
#include "minrank/pipeline.hpp"

using namespace minrank;
using nlohmann::json;

namespace {

namespace fs = std::filesystem;

fs::path temp_dir() {
  const fs::path dir = fs::temp_directory_path() / "minrank_tests";
  fs::create_directories(dir);
  return dir;
}

int run_cli(const std::vector<std::string>& args, std::string* out_text = nullptr,
            std::string* err_text = nullptr) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  if (out_text != nullptr) *out_text = out.str();
  if (err_text != nullptr) *err_text = err.str();
  return code;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("instance JSON round trip") {
  const InstanceParams cparams{InstanceKind::classical, 3, 3, 1, 4, 101, true,
                               DegreeMatrix::constant(3, 3, 1)};
  const auto cinst = MinRankInstance::random(cparams, 7);
  const auto cj = instance_to_json(cinst);
  const auto cback = instance_from_json(cj);
  CHECK(cback.kind() == InstanceKind::classical);
  CHECK(cback.seed() == 7);
  for (int t = 0; t < 4; ++t)
    CHECK(cback.scalar_matrices()[static_cast<std::size_t>(t)] ==
          cinst.scalar_matrices()[static_cast<std::size_t>(t)]);

  const InstanceParams gparams{
      InstanceKind::generalized, 2, 3, 1, 3, 101, false,
      DegreeMatrix::validate({{1, 2, 2}, {2, 3, 3}})};
  const auto ginst = MinRankInstance::random(gparams, 11);
  const auto gback = instance_from_json(instance_to_json(ginst));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(gback.matrix().entry(i, j) == ginst.matrix().entry(i, j));
}

TEST_CASE("malformed instance files are usage errors") {
  CHECK_THROWS_AS(instance_from_json(json::parse("{}")), usage_error);
  CHECK_THROWS_AS(instance_from_json(json::parse(R"({"format": 2})")),
                  usage_error);
  // degree grid out of canonical row order
  json j = instance_to_json(MinRankInstance::random(
      InstanceParams{InstanceKind::generalized, 2, 2, 1, 2, 101, true,
                     DegreeMatrix::validate({{1, 2}, {2, 3}})},
      1));
  j["degree_matrix"] = {{2, 3}, {1, 2}};
  CHECK_THROWS_AS(instance_from_json(j), usage_error);
}

TEST_CASE("gen writes byte-identical files for a fixed seed") {
  const auto dir = temp_dir();
  const std::string a = (dir / "a.json").string();
  const std::string b = (dir / "b.json").string();
  const std::vector<std::string> base{"gen",  "--kind", "classical", "-m",
                                      "3",    "-n",     "3",         "-r",
                                      "1",    "-k",     "4",         "-p",
                                      "101",  "--seed", "7",         "--out"};
  auto cmd_a = base;
  cmd_a.push_back(a);
  auto cmd_b = base;
  cmd_b.push_back(b);
  CHECK(run_cli(cmd_a) == 0);
  CHECK(run_cli(cmd_b) == 0);
  const std::string ta = slurp(a), tb = slurp(b);
  CHECK(!ta.empty());
  CHECK(ta == tb);
  const auto inst = read_instance(a);
  CHECK(inst.k() == 4);
  CHECK(inst.field().modulus() == 101);
}

TEST_CASE("gen rejects bad parameters with exit 1") {
  std::string err;
  CHECK(run_cli({"gen", "-m", "3", "-n", "3", "-r", "3", "-k", "4", "--out",
                 (temp_dir() / "bad.json").string()},
                nullptr, &err) == 1);
  CHECK(err.find("r < m") != std::string::npos);
}

TEST_CASE("bound command from parameters") {
  std::string out;
  CHECK(run_cli({"bound", "-m", "3", "-n", "3", "-r", "1", "-k", "4",
                 "--degree-const", "1", "--json"},
                &out) == 0);
  json j = json::parse(out);
  CHECK(j["bound_main"] == 3);
  CHECK(j["classification"] == "well-defined");
  CHECK(j["krull_dim"] == 0);

  CHECK(run_cli({"bound", "-m", "3", "-n", "3", "-r", "1", "-k", "4",
                 "--degree-const", "2", "--json"},
                &out) == 0);
  CHECK(json::parse(out)["bound_main"] == 9);

  std::string err;
  CHECK(run_cli({"bound", "-m", "2", "-n", "2", "-r", "1", "-k", "2",
                 "--degree-grid", "[[1,1],[1,2]]"},
                nullptr, &err) == 1);
  CHECK(err.find("additivity") != std::string::npos);
}

TEST_CASE("solve command end to end") {
  const auto dir = temp_dir();
  const std::string path = (dir / "solve_me.json").string();
  REQUIRE(run_cli({"gen", "--kind", "classical", "-m", "3", "-n", "3", "-r",
                   "1", "-k", "4", "-p", "101", "--seed", "7", "--out",
                   path}) == 0);
  std::string out;
  CHECK(run_cli({"solve", path, "--json"}, &out) == 0);
  json j = json::parse(out);
  CHECK(j["measured_solvdeg"].get<int>() <= 3);
  CHECK(j["bound"] == 3);
  CHECK(j["bound_respected"] == true);
  CHECK(j["lt_ideal_agrees"] == true);
  CHECK(j["zero_dimensional"] == true);
  CHECK(j["minor_count"] == 9);

  // human output mentions the headline facts
  CHECK(run_cli({"solve", path}, &out) == 0);
  CHECK(out.find("bound respected") != std::string::npos);
  CHECK(out.find("per-degree") != std::string::npos);
}

TEST_CASE("an unreachable degree cap exits with code 2") {
  const auto dir = temp_dir();
  const std::string path = (dir / "capped.json").string();
  REQUIRE(run_cli({"gen", "--kind", "classical", "-m", "3", "-n", "3", "-r",
                   "1", "-k", "4", "-p", "101", "--seed", "7", "--out",
                   path}) == 0);
  std::string err;
  CHECK(run_cli({"solve", path, "--cap", "1"}, nullptr, &err) == 2);
  CHECK(err.find("engine abort") != std::string::npos);
}

TEST_CASE("over-determined instances need --force") {
  const auto dir = temp_dir();
  const std::string path = (dir / "over.json").string();
  REQUIRE(run_cli({"gen", "--kind", "classical", "-m", "3", "-n", "3", "-r",
                   "1", "-k", "3", "-p", "101", "--seed", "3", "--out",
                   path}) == 0);
  std::string out, err;
  CHECK(run_cli({"solve", path}, &out, &err) == 1);
  CHECK(err.find("over-determined") != std::string::npos);
  CHECK(run_cli({"solve", path, "--force", "--json"}, &out) == 0);
  CHECK(json::parse(out)["bounds"]["applicable"] == false);
}

TEST_CASE("affine generalized solve homogenizes and respects the bound") {
  const InstanceParams params{InstanceKind::generalized, 2, 2, 1, 2, 101,
                              false, DegreeMatrix::validate({{1, 2}, {2, 3}})};
  const auto inst = MinRankInstance::random(params, 5);
  const SolveOutcome outcome = solve_instance(inst);
  CHECK(outcome.homogenized);
  CHECK(outcome.bounds.bound_main == 4);  // 1*d11 + d22 - 1 + 1
  CHECK(outcome.report.measured_solvdeg <= 4);
  CHECK(outcome.report.bound_respected);
  CHECK(outcome.report.lt_ideal_agrees);
}

TEST_CASE("bruteforce on tiny instances") {
  const auto dir = temp_dir();
  const std::string path = (dir / "brute.json").string();
  REQUIRE(run_cli({"gen", "--kind", "classical", "-m", "2", "-n", "2", "-r",
                   "1", "-k", "1", "-p", "5", "--seed", "2", "--out",
                   path}) == 0);
  std::string out;
  CHECK(run_cli({"bruteforce", path, "--json"}, &out) == 0);
  json j = json::parse(out);
  CHECK(j["searched"] == 5);
  CHECK(j["equivalence_holds"] == true);
  // x1 * M1 with det(M1) != 0: only the zero point drops rank
  REQUIRE(j["solutions"].size() == 1);
  CHECK(j["solutions"][0] == json::array({0}));
}

TEST_CASE("bruteforce refuses oversized search spaces") {
  const InstanceParams params{InstanceKind::classical, 3, 3, 1, 8, 101, true,
                              DegreeMatrix::constant(3, 3, 1)};
  const auto inst = MinRankInstance::random(params, 1);
  CHECK_THROWS_AS(brute_force(inst), usage_error);
}

TEST_CASE("the zero point always solves homogeneous instances") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const InstanceParams params{InstanceKind::generalized, 2, 3, 1, 2, 5,
                                true, DegreeMatrix::constant(2, 3, 2)};
    const auto res =
        brute_force(MinRankInstance::random(params, seed));
    bool zero_found = false;
    for (const auto& pt : res.solutions)
      zero_found = zero_found ||
                   std::all_of(pt.begin(), pt.end(),
                               [](std::uint32_t v) { return v == 0; });
    CHECK(zero_found);
  }
}

TEST_CASE("experiment config parsing and a tiny run") {
  const auto dir = temp_dir();
  const std::string cfg_path = (dir / "exp.json").string();
  {
    std::ofstream cfg(cfg_path);
    cfg << R"({
      "format": 1,
      "trials": 2,
      "base_seed": 5,
      "cells": [
        {"kind": "classical", "m": 3, "n": 3, "r": 1, "k": 4, "p": 101},
        {"kind": "classical", "m": 3, "n": 3, "r": 1, "k": 5, "p": 101},
        {"kind": "generalized", "m": 2, "n": 2, "r": 1, "k": 2, "p": 101,
         "homogeneous": true, "degree_offsets": {"e": [1, 2], "f": [0, 1]}}
      ]
    })";
  }
  const std::string csv_path = (dir / "rows.csv").string();
  const std::string json_path = (dir / "summary.json").string();
  std::string err;
  CHECK(run_cli({"experiment", cfg_path, "--out", csv_path, "--json-out",
                 json_path, "--jobs", "2"},
                nullptr, &err) == 0);

  const std::string csv = slurp(csv_path);
  std::istringstream lines(csv);
  std::string header;
  std::getline(lines, header);
  CHECK(header ==
        "m,n,r,k,p,seed,kind,class,solvdeg,bound,respected,gb_size,ms,"
        "resamples");
  int rows = 0;
  for (std::string line; std::getline(lines, line);) ++rows;
  CHECK(rows == 6);  // 3 cells x 2 trials

  json summary = json::parse(slurp(json_path));
  CHECK(summary["violations"] == 0);
  CHECK(summary["rows"].size() == 6);
  for (const auto& row : summary["rows"]) {
    CHECK(row["respected"] == true);
    CHECK(row["aborted"] == false);
    if (row["k"] == 5) CHECK(row["krull_dim"] == 1);  // under-defined cell
    if (row["k"] == 4 && row["kind"] == "classical")
      CHECK(row["solvdeg"].get<int>() <= 3);
  }
}

TEST_CASE("experiment with no cells writes only the header") {
  const auto dir = temp_dir();
  const std::string cfg_path = (dir / "empty.json").string();
  {
    std::ofstream cfg(cfg_path);
    cfg << R"({"format": 1, "trials": 3, "cells": []})";
  }
  std::string out;
  CHECK(run_cli({"experiment", cfg_path}, &out) == 0);
  CHECK(out ==
        "m,n,r,k,p,seed,kind,class,solvdeg,bound,respected,gb_size,ms,"
        "resamples\n");
}

TEST_CASE("experiment rows are replayable from their recorded seed") {
  ExperimentConfig config;
  config.trials = 1;
  config.base_seed = 3;
  config.cells.push_back(
      CellSpec{InstanceParams{InstanceKind::classical, 3, 3, 1, 4, 101, true,
                              DegreeMatrix::constant(3, 3, 1)}});
  const ExperimentSummary s1 = run_experiment(config);
  const ExperimentSummary s2 = run_experiment(config);
  REQUIRE(s1.rows.size() == 1);
  CHECK(s1.rows[0].seed == s2.rows[0].seed);
  CHECK(s1.rows[0].measured == s2.rows[0].measured);
  CHECK(s1.rows[0].gb_size == s2.rows[0].gb_size);
  // replay: generating from the recorded seed and solving reproduces the row
  const auto inst =
      MinRankInstance::random(config.cells[0].params, s1.rows[0].seed);
  SolveOptions opts;
  opts.force = true;
  const SolveOutcome replay = solve_instance(inst, opts);
  CHECK(replay.report.measured_solvdeg == s1.rows[0].measured);
}
