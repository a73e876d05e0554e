#include "minrank/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "minrank/experiment.hpp"
#include "minrank/instance_io.hpp"
#include "minrank/pipeline.hpp"

namespace minrank::cli {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

struct GenArgs {
  std::string kind = "classical";
  int m = 0, n = 0, r = 0, k = 0;
  std::int64_t p = 101;
  std::uint64_t seed = 1;
  std::string degree_grid;
  int degree_const = 0;
  bool homogeneous = false;
  std::string out_path;
};

DegreeMatrix parse_degree_spec(InstanceKind kind, int m, int n,
                               const std::string& grid_text, int degree_const) {
  if (!grid_text.empty() && degree_const > 0)
    throw usage_error("give either --degree-grid or --degree-const, not both");
  if (kind == InstanceKind::classical) {
    if (!grid_text.empty() || degree_const > 1)
      throw usage_error("classical instances have degree 1 entries");
    return DegreeMatrix::constant(m, n, 1);
  }
  if (!grid_text.empty()) {
    json g;
    try {
      g = json::parse(grid_text);
    } catch (const json::exception& e) {
      throw usage_error(std::string("--degree-grid: ") + e.what());
    }
    return DegreeMatrix::validate(g.get<std::vector<std::vector<int>>>());
  }
  return DegreeMatrix::constant(m, n, degree_const > 0 ? degree_const : 1);
}

InstanceParams params_from_gen_args(const GenArgs& a) {
  if (a.p < 2 || a.p >= (1ll << 31)) throw usage_error("-p out of range");
  const InstanceKind kind = kind_from_name(a.kind);
  InstanceParams params{kind,
                        a.m,
                        a.n,
                        a.r,
                        a.k,
                        static_cast<std::uint32_t>(a.p),
                        kind == InstanceKind::classical ? true : a.homogeneous,
                        parse_degree_spec(kind, a.m, a.n, a.degree_grid,
                                          a.degree_const)};
  validate_instance_params(params);
  return params;
}

void print_bound_report(std::ostream& out, const bounds::BoundReport& rep) {
  out << "parameters:      m=" << rep.m << " n=" << rep.n << " r=" << rep.r
      << " k=" << rep.k << "\n";
  out << "degree matrix:   ";
  for (int i = 0; i < rep.m; ++i) {
    if (i > 0) out << "; ";
    for (int j = 0; j < rep.n; ++j)
      out << (j > 0 ? " " : "") << rep.degrees.at(i, j);
  }
  out << "\n";
  out << "classification:  " << bounds::class_name(rep.classification)
      << " (codim (m-r)(n-r) = " << (rep.m - rep.r) * (rep.n - rep.r) << ")\n";
  out << "applicable:      " << (rep.applicable ? "yes" : "no (bound not proven)")
      << "\n";
  out << "solvdeg bound:   " << rep.bound_main << "\n";
  if (rep.bound_square) out << "  square case:   " << *rep.bound_square << "\n";
  if (rep.bound_linear) out << "  linear case:   " << *rep.bound_linear << "\n";
  if (rep.bound_degd) out << "  constant d:    " << *rep.bound_degd << "\n";
  if (rep.krull_dim)
    out << "krull dim:       " << *rep.krull_dim << "\n";
  else
    out << "krull dim:       n/a (k < (m-r)(n-r))\n";
  out << "a-invariant:     " << rep.a_invariant << "\n";
  out << "regularity:      " << rep.regularity << "\n";
}

ordered_json solve_outcome_json(const MinRankInstance& inst,
                                const SolveOutcome& o) {
  ordered_json j;
  j["instance"] = {{"kind", kind_name(inst.kind())},
                   {"m", inst.m()},
                   {"n", inst.n()},
                   {"r", inst.r()},
                   {"k", inst.k()},
                   {"p", inst.field().modulus()},
                   {"seed", inst.seed()},
                   {"homogeneous", inst.homogeneous()}};
  j["bounds"] = bound_report_to_json(o.bounds);
  j["measured_solvdeg"] = o.report.measured_solvdeg;
  j["method"] = o.report.method;
  j["bound"] = o.report.bound;
  j["bound_respected"] = o.report.bound_respected;
  j["buchberger_max_degree"] = o.report.buchberger_max_degree;
  j["lt_ideal_agrees"] = o.report.lt_ideal_agrees;
  j["gb_size"] = o.report.oracle.generators.size();
  j["ideal_is_unit"] = o.report.oracle.ideal_is_unit;
  j["zero_dimensional"] = o.zero_dimensional;
  j["homogenized"] = o.homogenized;
  j["minor_count"] = o.minor_count;
  j["degeneracy_signals"] = o.degeneracy_signals;
  ordered_json per = ordered_json::array();
  for (const DegreeStepRecord& rec : o.report.per_degree) {
    ordered_json d;
    d["degree"] = rec.degree;
    d["rows"] = rec.rows;
    d["cols"] = rec.cols;
    d["rank"] = rec.rank;
    ordered_json lts = ordered_json::array();
    for (const Monomial& m : rec.new_leading_terms) lts.push_back(m.str());
    d["new_leading_terms"] = std::move(lts);
    per.push_back(std::move(d));
  }
  j["per_degree"] = std::move(per);
  j["wall_ms"] = o.wall_ms;
  return j;
}

void print_solve_outcome(std::ostream& out, const MinRankInstance& inst,
                         const SolveOutcome& o) {
  out << "instance:        " << kind_name(inst.kind()) << " m=" << inst.m()
      << " n=" << inst.n() << " r=" << inst.r() << " k=" << inst.k()
      << " p=" << inst.field().modulus() << " seed=" << inst.seed()
      << (inst.homogeneous() ? " homogeneous" : " affine") << "\n";
  out << "classification:  " << bounds::class_name(o.bounds.classification)
      << (o.bounds.applicable ? "" : " (bound not proven)") << "\n";
  out << "minors:          " << o.minor_count << " generators of size "
      << inst.r() + 1 << (o.homogenized ? ", homogenized before solving" : "")
      << "\n";
  out << "bound:           " << o.bounds.bound_main << "\n";
  out << "measured:        " << o.report.measured_solvdeg << " ("
      << o.report.method << "), bound "
      << (o.report.bound_respected ? "respected" : "VIOLATED") << "\n";
  out << "oracle:          buchberger max degree "
      << o.report.buchberger_max_degree << ", leading-term ideals "
      << (o.report.lt_ideal_agrees ? "agree" : "DISAGREE") << ", GB size "
      << o.report.oracle.generators.size() << "\n";
  out << "zero-dim:        " << (o.zero_dimensional ? "yes" : "no") << "\n";
  if (!o.degeneracy_signals.empty()) {
    out << "degeneracy:      ";
    for (std::size_t i = 0; i < o.degeneracy_signals.size(); ++i)
      out << (i > 0 ? ", " : "") << o.degeneracy_signals[i];
    out << "\n";
  }
  out << "per-degree:\n";
  out << "  D     rows   cols   rank   new LTs\n";
  for (const DegreeStepRecord& rec : o.report.per_degree)
    out << "  " << std::left << std::setw(6) << rec.degree << std::setw(7)
        << rec.rows << std::setw(7) << rec.cols << std::setw(7) << rec.rank
        << rec.new_leading_terms.size() << "\n";
  out << "wall:            " << std::fixed << std::setprecision(1) << o.wall_ms
      << " ms\n";
}

int cmd_gen(const GenArgs& args, std::ostream& out) {
  if (args.out_path.empty()) throw usage_error("gen: --out is required");
  const InstanceParams params = params_from_gen_args(args);
  const MinRankInstance inst = MinRankInstance::random(params, args.seed);
  write_instance(inst, args.out_path);
  out << "wrote " << kind_name(inst.kind()) << " instance (m=" << inst.m()
      << " n=" << inst.n() << " r=" << inst.r() << " k=" << inst.k()
      << " p=" << inst.field().modulus() << " seed=" << inst.seed() << ") to "
      << args.out_path << "\n";
  return 0;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{
      "minrank — minors modeling of the MinRank problem over prime fields:\n"
      "instance generation, solving-degree measurement, closed-form bounds,\n"
      "and brute-force verification"};
  app.require_subcommand(1);

  GenArgs gen_args;
  CLI::App* gen = app.add_subcommand("gen", "generate a random instance file");
  gen->add_option("--kind", gen_args.kind, "classical | generalized")
      ->check(CLI::IsMember({"classical", "generalized"}));
  gen->add_option("-m", gen_args.m, "matrix rows")->required();
  gen->add_option("-n", gen_args.n, "matrix columns")->required();
  gen->add_option("-r", gen_args.r, "target rank")->required();
  gen->add_option("-k", gen_args.k, "number of variables")->required();
  gen->add_option("-p", gen_args.p, "prime modulus (default 101)");
  gen->add_option("--seed", gen_args.seed, "generator seed");
  gen->add_option("--degree-grid", gen_args.degree_grid,
                  "entry degrees as a JSON grid, e.g. [[1,2],[2,3]]");
  gen->add_option("--degree-const", gen_args.degree_const,
                  "constant entry degree d");
  gen->add_flag("--homogeneous", gen_args.homogeneous,
                "homogeneous entries (generalized kind)");
  gen->add_option("--out", gen_args.out_path, "output instance path");

  std::string bound_file;
  GenArgs bound_args;
  bool bound_json = false;
  CLI::App* bound =
      app.add_subcommand("bound", "closed-form solving-degree bound report");
  bound->add_option("instance", bound_file, "instance file (JSON)");
  bound->add_option("-m", bound_args.m, "matrix rows");
  bound->add_option("-n", bound_args.n, "matrix columns");
  bound->add_option("-r", bound_args.r, "target rank");
  bound->add_option("-k", bound_args.k, "number of variables");
  bound->add_option("--degree-grid", bound_args.degree_grid,
                    "entry degrees as a JSON grid");
  bound->add_option("--degree-const", bound_args.degree_const,
                    "constant entry degree d");
  bound->add_flag("--json", bound_json, "emit JSON instead of the table");

  std::string solve_file;
  int solve_cap = -1;
  bool solve_force = false, solve_json = false, solve_stability = false;
  CLI::App* solve =
      app.add_subcommand("solve", "measure the solving degree of an instance");
  solve->add_option("instance", solve_file, "instance file (JSON)")
      ->required();
  solve->add_option("--cap", solve_cap,
                    "hard degree cap (default: bound + 3)");
  solve->add_flag("--force", solve_force,
                  "solve over-determined instances too");
  solve->add_flag("--stability", solve_stability,
                  "run one extra degree past the answer");
  solve->add_flag("--json", solve_json, "emit the full JSON report");

  std::string brute_file;
  bool brute_json = false;
  CLI::App* brute = app.add_subcommand(
      "bruteforce", "enumerate F_p^k and cross-check the minors equivalence");
  brute->add_option("instance", brute_file, "instance file (JSON)")
      ->required();
  brute->add_flag("--json", brute_json, "emit JSON");

  std::string exp_file, exp_csv, exp_json_path;
  int exp_jobs = -1;
  CLI::App* exp = app.add_subcommand(
      "experiment", "run a batch of cells x trials and write CSV/JSON");
  exp->add_option("config", exp_file, "experiment config (JSON)")->required();
  exp->add_option("--out", exp_csv, "CSV output path (default: config value "
                                    "or stdout)");
  exp->add_option("--json-out", exp_json_path, "JSON summary output path");
  exp->add_option("--jobs", exp_jobs, "worker threads (default: config/all)");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (gen->parsed()) return cmd_gen(gen_args, out);

    if (bound->parsed()) {
      bounds::BoundReport rep = [&] {
        if (!bound_file.empty())
          return bounds::bound_report(read_instance(bound_file));
        if (bound_args.m == 0)
          throw usage_error(
              "bound: give an instance file or -m -n -r -k (plus "
              "--degree-grid/--degree-const)");
        const DegreeMatrix D = parse_degree_spec(
            InstanceKind::generalized, bound_args.m, bound_args.n,
            bound_args.degree_grid, bound_args.degree_const);
        return bounds::bound_report(bound_args.m, bound_args.n, bound_args.r,
                                    bound_args.k, D);
      }();
      if (bound_json)
        out << bound_report_to_json(rep).dump(2) << "\n";
      else
        print_bound_report(out, rep);
      return 0;
    }

    if (solve->parsed()) {
      const MinRankInstance inst = read_instance(solve_file);
      SolveOptions opts;
      opts.degree_cap = solve_cap;
      opts.force = solve_force;
      opts.stability_step = solve_stability;
      const SolveOutcome outcome = solve_instance(inst, opts);
      if (solve_json)
        out << solve_outcome_json(inst, outcome).dump(2) << "\n";
      else
        print_solve_outcome(out, inst, outcome);
      return 0;
    }

    if (brute->parsed()) {
      const MinRankInstance inst = read_instance(brute_file);
      const BruteForceResult res = brute_force(inst);
      if (brute_json) {
        ordered_json j;
        j["searched"] = res.searched;
        j["equivalence_holds"] = res.equivalence_holds;
        j["solutions"] = res.solutions;
        out << j.dump(2) << "\n";
      } else {
        out << "searched " << res.searched << " points of F_"
            << inst.field().modulus() << "^" << inst.k() << "; rank <= "
            << inst.r() << " at " << res.solutions.size()
            << " point(s); minors equivalence holds\n";
        for (const auto& pt : res.solutions) {
          out << "  (";
          for (std::size_t i = 0; i < pt.size(); ++i)
            out << (i > 0 ? "," : "") << pt[i];
          out << ")\n";
        }
      }
      return 0;
    }

    if (exp->parsed()) {
      ExperimentConfig config = read_experiment_config(exp_file);
      if (!exp_csv.empty()) config.csv_out = exp_csv;
      if (!exp_json_path.empty()) config.json_out = exp_json_path;
      if (exp_jobs >= 0) config.jobs = exp_jobs;
      const ExperimentSummary summary = run_experiment(config);

      if (config.csv_out.empty()) {
        write_experiment_csv(out, summary.rows);
      } else {
        std::ofstream csv(config.csv_out, std::ios::binary);
        if (!csv)
          throw usage_error("cannot open CSV output: " + config.csv_out);
        write_experiment_csv(csv, summary.rows);
      }
      if (!config.json_out.empty()) {
        std::ofstream js(config.json_out, std::ios::binary);
        if (!js)
          throw usage_error("cannot open JSON output: " + config.json_out);
        js << experiment_summary_json(config, summary).dump(2) << "\n";
      }
      for (const CellSummary& cs : summary.cells) {
        err << "cell " << cs.cell << ": " << cs.runs
            << " runs, max solvdeg = " << cs.max_measured << ", bound = "
            << cs.bound << ", violations = " << cs.violations << ", aborts = "
            << cs.aborts << ", resamples = " << cs.resamples << "\n";
      }
      if (summary.violations > 0) {
        // dump the violating instances for inspection; they are replayable
        // from the recorded seeds
        for (const ExperimentRow& row : summary.rows) {
          if (row.aborted || !row.applicable || row.respected) continue;
          const std::string path = "violation_cell" +
                                   std::to_string(row.cell) + "_trial" +
                                   std::to_string(row.trial) + ".json";
          write_instance(MinRankInstance::random(row.params, row.seed), path);
          err << "bound violation dumped to " << path << "\n";
        }
        err << "experiment: " << summary.violations
            << " bound violation(s) detected\n";
        return 3;
      }
      return 0;
    }
  } catch (const invariant_violation& e) {
    err << "invariant violation: " << e.what() << "\n";
    return 3;
  } catch (const engine_abort& e) {
    err << "engine abort: " << e.what() << "\n";
    return 2;
  } catch (const usage_error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace minrank::cli
