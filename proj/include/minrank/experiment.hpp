#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "minrank/pipeline.hpp"

namespace minrank {

struct CellSpec {
  InstanceParams params;
};

struct ExperimentConfig {
  std::vector<CellSpec> cells;
  int trials = 1;
  std::uint64_t base_seed = 1;
  int cap_slack = 3;  // degree cap = bound + cap_slack
  int jobs = 0;       // 0: hardware concurrency
  std::string csv_out;   // empty: caller decides (CLI prints to stdout)
  std::string json_out;  // empty: no JSON summary file
};

ExperimentConfig experiment_config_from_json(const nlohmann::json& j);
ExperimentConfig read_experiment_config(const std::string& path);

struct ExperimentRow {
  std::size_t cell = 0;
  int trial = 0;
  InstanceParams params{InstanceKind::classical, 1, 1, 0, 1, 2, true,
                        DegreeMatrix::constant(1, 1, 1)};
  std::uint64_t seed = 0;  // the seed actually used (after resampling)
  int measured = -1;       // -1 when the run did not complete
  std::int64_t bound = -1;
  bool respected = false;
  bounds::ProblemClass classification = bounds::ProblemClass::well_defined;
  bool applicable = false;
  std::optional<std::int64_t> krull_dim;
  int gb_size = 0;
  double ms = 0.0;
  int resamples = 0;
  bool aborted = false;
  std::string error;  // abort/violation diagnostic, empty on success
};

struct CellSummary {
  std::size_t cell = 0;
  int runs = 0;
  int max_measured = -1;
  std::int64_t bound = -1;
  int violations = 0;
  int aborts = 0;
  int resamples = 0;
};

struct ExperimentSummary {
  std::vector<ExperimentRow> rows;  // configuration order
  std::vector<CellSummary> cells;
  int violations = 0;
};

// Runs all cells x trials on a worker pool; each run is internally
// deterministic with seed base_seed + trial (resampled up to 5 times on
// degeneracy signals, with recorded derived seeds).
ExperimentSummary run_experiment(const ExperimentConfig& config);

// Fixed header: m,n,r,k,p,seed,kind,class,solvdeg,bound,respected,gb_size,ms,resamples
void write_experiment_csv(std::ostream& out,
                          const std::vector<ExperimentRow>& rows);
nlohmann::ordered_json experiment_summary_json(const ExperimentConfig& config,
                                               const ExperimentSummary& s);

}  // namespace minrank
