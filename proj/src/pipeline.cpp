#include "minrank/pipeline.hpp"

#include <chrono>

namespace minrank {

SolveOutcome solve_instance(const MinRankInstance& instance,
                            const SolveOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  SolveOutcome outcome{bounds::bound_report(instance), {}, false, false, 0,
                       {}, 0.0};
  if (!outcome.bounds.applicable && !options.force)
    throw usage_error(
        "instance is over-determined (k < (m-r)(n-r)); the bound is not "
        "proven there — pass the override flag to solve anyway");

  const PolyMatrix& M = instance.matrix();
  const int r = instance.r();

  std::vector<Polynomial> system;
  if (instance.homogeneous()) {
    system = minors(M, r + 1).generators();
  } else {
    std::string offending;
    if (!check_homogenization_commutes(M, r, &offending))
      throw invariant_violation(
          "homogenization does not commute with minors at minor " + offending);
    outcome.homogenized = true;
    system = minors(M.homogenized(), r + 1).generators();
  }
  outcome.minor_count = system.size();

  std::vector<Polynomial> gens;
  for (const Polynomial& f : system)
    if (!f.is_zero()) gens.push_back(f);
  if (gens.size() != system.size())
    outcome.degeneracy_signals.push_back("zero-minor");
  if (gens.empty())
    throw engine_abort(
        "all (r+1)-minors vanish identically; degenerate instance");

  SolvingDegreeOptions sopts;
  sopts.bound = outcome.bounds.bound_main;
  sopts.degree_cap = options.degree_cap >= 0
                         ? options.degree_cap
                         : static_cast<int>(outcome.bounds.bound_main) + 3;
  sopts.stability_step = options.stability_step;
  outcome.report = solving_degree(gens, sopts);

  outcome.zero_dimensional = is_zero_dimensional(outcome.report.oracle);
  if (outcome.report.oracle.ideal_is_unit)
    outcome.degeneracy_signals.push_back("unit-ideal");
  // for homogeneous well-defined instances the quotient has Krull dimension
  // k - (m-r)(n-r) = 0, so the zero-dimensionality certificate must fire
  if (instance.homogeneous() && !outcome.homogenized &&
      outcome.bounds.classification == bounds::ProblemClass::well_defined &&
      !outcome.zero_dimensional)
    outcome.degeneracy_signals.push_back("dimension-mismatch");

  outcome.wall_ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
  return outcome;
}

BruteForceResult brute_force(const MinRankInstance& instance) {
  const std::uint32_t p = instance.field().modulus();
  const int k = instance.k();
  double space = 1.0;
  for (int i = 0; i < k; ++i) space *= p;
  if (space > 1e7)
    throw usage_error(
        "brute force search space p^k exceeds 10^7 points; refusing");
  const std::uint64_t total = [&] {
    std::uint64_t t = 1;
    for (int i = 0; i < k; ++i) t *= p;
    return t;
  }();

  const PolyMatrix& M = instance.matrix();
  const MinorsSystem sys = minors(M, instance.r() + 1);
  BruteForceResult res;
  res.searched = total;

  std::vector<std::uint32_t> point(static_cast<std::size_t>(k), 0);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t v = idx;  // x1 varies fastest
    for (int i = 0; i < k; ++i) {
      point[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(v % p);
      v /= p;
    }
    const bool low_rank =
        M.evaluate(point).rank() <= static_cast<std::size_t>(instance.r());
    bool minors_vanish = true;
    for (const Polynomial& f : sys.generators()) {
      if (f.evaluate(point) != 0) {
        minors_vanish = false;
        break;
      }
    }
    if (low_rank != minors_vanish)
      throw invariant_violation(
          "rank locus and minors' zero locus disagree at a point: rank<=" +
          std::to_string(instance.r()) + " is " +
          (low_rank ? "true" : "false") + " but minors vanish is " +
          (minors_vanish ? "true" : "false"));
    if (low_rank) res.solutions.push_back(point);
  }
  res.equivalence_holds = true;
  return res;
}

}  // namespace minrank
