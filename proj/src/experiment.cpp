#include "minrank/experiment.hpp"

#include <atomic>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

namespace minrank {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

DegreeMatrix degree_from_cell_json(const json& c, int m, int n,
                                   InstanceKind kind) {
  const bool has_grid = c.contains("degree_grid");
  const bool has_const = c.contains("degree_const");
  const bool has_offsets = c.contains("degree_offsets");
  if (has_grid + has_const + has_offsets > 1)
    throw usage_error(
        "experiment config: give at most one of degree_grid, degree_const, "
        "degree_offsets per cell");
  if (kind == InstanceKind::classical) {
    if (has_grid || has_offsets)
      throw usage_error(
          "experiment config: classical cells take no degree specification");
    if (has_const && c["degree_const"].get<int>() != 1)
      throw usage_error("experiment config: classical cells have degree 1");
    return DegreeMatrix::constant(m, n, 1);
  }
  if (has_grid)
    return DegreeMatrix::validate(
        c["degree_grid"].get<std::vector<std::vector<int>>>());
  if (has_offsets) {
    const auto& o = c["degree_offsets"];
    return DegreeMatrix::from_offsets(o.at("e").get<std::vector<int>>(),
                                      o.at("f").get<std::vector<int>>());
  }
  return DegreeMatrix::constant(m, n,
                                has_const ? c["degree_const"].get<int>() : 1);
}

}  // namespace

ExperimentConfig experiment_config_from_json(const json& j) {
  ExperimentConfig cfg;
  if (j.value("format", 1) != 1)
    throw usage_error("experiment config: unsupported format version");
  cfg.trials = j.value("trials", 1);
  if (cfg.trials < 1)
    throw usage_error("experiment config: trials must be >= 1");
  cfg.base_seed = j.value("base_seed", std::uint64_t{1});
  cfg.cap_slack = j.value("cap_slack", 3);
  cfg.jobs = j.value("jobs", 0);
  cfg.csv_out = j.value("csv_out", std::string{});
  cfg.json_out = j.value("json_out", std::string{});
  if (!j.contains("cells") || !j["cells"].is_array())
    throw usage_error("experiment config: missing \"cells\" array");
  for (const auto& c : j["cells"]) {
    const InstanceKind kind =
        kind_from_name(c.value("kind", std::string("classical")));
    const int m = c.at("m").get<int>();
    const int n = c.at("n").get<int>();
    const int r = c.at("r").get<int>();
    const int k = c.at("k").get<int>();
    const std::int64_t p = c.value("p", 101);
    if (p < 2 || p >= (1ll << 31))
      throw usage_error("experiment config: p out of range");
    const bool homogeneous =
        kind == InstanceKind::classical ? true : c.value("homogeneous", true);
    InstanceParams params{kind,
                          m,
                          n,
                          r,
                          k,
                          static_cast<std::uint32_t>(p),
                          homogeneous,
                          degree_from_cell_json(c, m, n, kind)};
    validate_instance_params(params);
    cfg.cells.push_back(CellSpec{std::move(params)});
  }
  return cfg;
}

ExperimentConfig read_experiment_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw usage_error("cannot open config file: " + path);
  json j;
  try {
    in >> j;
    return experiment_config_from_json(j);
  } catch (const json::exception& e) {
    throw usage_error("experiment config " + path + ": " + e.what());
  }
}

namespace {

constexpr int kMaxResamples = 5;

std::uint64_t derived_seed(std::uint64_t base, int attempt) {
  return base + static_cast<std::uint64_t>(attempt) * 0x9E3779B97F4A7C15ull;
}

ExperimentRow run_one(const ExperimentConfig& config, std::size_t cell_idx,
                      int trial) {
  const CellSpec& cell = config.cells[cell_idx];
  ExperimentRow row;
  row.cell = cell_idx;
  row.trial = trial;
  row.params = cell.params;
  const std::uint64_t trial_seed = config.base_seed +
                                   static_cast<std::uint64_t>(trial);

  for (int attempt = 0; attempt < kMaxResamples; ++attempt) {
    row.seed = derived_seed(trial_seed, attempt);
    row.resamples = attempt;
    try {
      const MinRankInstance inst =
          MinRankInstance::random(cell.params, row.seed);
      const bounds::BoundReport bounds_rep = bounds::bound_report(inst);
      row.bound = bounds_rep.bound_main;
      row.classification = bounds_rep.classification;
      row.applicable = bounds_rep.applicable;
      row.krull_dim = bounds_rep.krull_dim;
      SolveOptions opts;
      opts.force = true;  // cells are explicit intent, over-determined included
      opts.degree_cap =
          static_cast<int>(bounds_rep.bound_main) + config.cap_slack;
      const SolveOutcome outcome = solve_instance(inst, opts);

      row.measured = outcome.report.measured_solvdeg;
      row.respected = outcome.report.bound_respected;
      row.gb_size = static_cast<int>(outcome.report.oracle.generators.size());
      row.ms = outcome.wall_ms;
      row.aborted = false;
      row.error.clear();
      if (!outcome.degeneracy_signals.empty()) {
        std::string joined;
        for (const auto& s : outcome.degeneracy_signals)
          joined += (joined.empty() ? "" : "+") + s;
        if (attempt + 1 < kMaxResamples) {
          row.error = "degenerate draw (" + joined + "), resampled";
          continue;  // fresh seed
        }
        row.error = "degenerate draw (" + joined + "), kept after " +
                    std::to_string(kMaxResamples) + " attempts";
      }
      return row;
    } catch (const engine_abort& e) {
      row.aborted = true;
      row.error = e.what();
      return row;  // recorded in-row, run continues
    } catch (const invariant_violation& e) {
      row.aborted = true;
      row.error = std::string("invariant violation: ") + e.what();
      return row;
    }
  }
  return row;
}

}  // namespace

ExperimentSummary run_experiment(const ExperimentConfig& config) {
  ExperimentSummary summary;
  const std::size_t total_runs =
      config.cells.size() * static_cast<std::size_t>(config.trials);
  summary.rows.resize(total_runs);
  if (total_runs == 0) return summary;

  unsigned jobs = config.jobs > 0
                      ? static_cast<unsigned>(config.jobs)
                      : std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, static_cast<unsigned>(total_runs));

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t idx = next.fetch_add(1);
      if (idx >= total_runs) return;
      const std::size_t cell = idx / static_cast<std::size_t>(config.trials);
      const int trial = static_cast<int>(idx % static_cast<std::size_t>(config.trials));
      summary.rows[idx] = run_one(config, cell, trial);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();

  summary.cells.resize(config.cells.size());
  for (std::size_t c = 0; c < config.cells.size(); ++c)
    summary.cells[c].cell = c;
  for (const ExperimentRow& row : summary.rows) {
    CellSummary& cs = summary.cells[row.cell];
    ++cs.runs;
    cs.bound = row.bound >= 0 ? row.bound : cs.bound;
    cs.max_measured = std::max(cs.max_measured, row.measured);
    cs.resamples += row.resamples;
    if (row.aborted) ++cs.aborts;
    const bool violated = !row.aborted && row.applicable && !row.respected;
    if (violated) {
      ++cs.violations;
      ++summary.violations;
    }
  }
  return summary;
}

void write_experiment_csv(std::ostream& out,
                          const std::vector<ExperimentRow>& rows) {
  out << "m,n,r,k,p,seed,kind,class,solvdeg,bound,respected,gb_size,ms,"
         "resamples\n";
  for (const ExperimentRow& row : rows) {
    std::ostringstream ms;
    ms.setf(std::ios::fixed);
    ms.precision(3);
    ms << row.ms;
    out << row.params.m << ',' << row.params.n << ',' << row.params.r << ','
        << row.params.k << ',' << row.params.p << ',' << row.seed << ','
        << kind_name(row.params.kind) << ','
        << bounds::class_name(row.classification) << ',' << row.measured
        << ',' << row.bound << ',' << (row.respected ? 1 : 0) << ','
        << row.gb_size << ',' << ms.str() << ',' << row.resamples << '\n';
  }
}

ordered_json experiment_summary_json(const ExperimentConfig& config,
                                     const ExperimentSummary& s) {
  ordered_json j;
  j["format"] = 1;
  j["trials"] = config.trials;
  j["base_seed"] = config.base_seed;
  ordered_json rows = ordered_json::array();
  for (const ExperimentRow& row : s.rows) {
    ordered_json r;
    r["cell"] = row.cell;
    r["trial"] = row.trial;
    r["m"] = row.params.m;
    r["n"] = row.params.n;
    r["r"] = row.params.r;
    r["k"] = row.params.k;
    r["p"] = row.params.p;
    r["seed"] = row.seed;
    r["kind"] = kind_name(row.params.kind);
    r["class"] = bounds::class_name(row.classification);
    r["solvdeg"] = row.measured;
    r["bound"] = row.bound;
    r["respected"] = row.respected;
    if (row.krull_dim)
      r["krull_dim"] = *row.krull_dim;
    else
      r["krull_dim"] = nullptr;
    r["gb_size"] = row.gb_size;
    r["ms"] = row.ms;
    r["resamples"] = row.resamples;
    r["aborted"] = row.aborted;
    r["error"] = row.error;
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  ordered_json cells = ordered_json::array();
  for (const CellSummary& cs : s.cells) {
    ordered_json c;
    c["cell"] = cs.cell;
    c["runs"] = cs.runs;
    c["max_solvdeg"] = cs.max_measured;
    c["bound"] = cs.bound;
    c["violations"] = cs.violations;
    c["aborts"] = cs.aborts;
    c["resamples"] = cs.resamples;
    cells.push_back(std::move(c));
  }
  j["cells"] = std::move(cells);
  j["violations"] = s.violations;
  return j;
}

}  // namespace minrank
