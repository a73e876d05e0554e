#include "minrank/macaulay.hpp"

#include <algorithm>

#include "minrank/fp_matrix.hpp"

namespace minrank {

namespace {

// column index of a monomial in a descending-degrevlex sorted basis
std::size_t column_of(const std::vector<Monomial>& basis, const Monomial& m) {
  const auto it =
      std::lower_bound(basis.begin(), basis.end(), m, DegrevlexGreater{});
  return static_cast<std::size_t>(it - basis.begin());
}

bool divisible_by_any(const Monomial& m, const std::vector<Polynomial>& found) {
  for (const Polynomial& g : found)
    if (g.leading_monomial()->divides(m)) return true;
  return false;
}

}  // namespace

DegreeStepRecord macaulay_step(const std::vector<Polynomial>& F, int D,
                               MacaulayState& state) {
  if (F.empty()) throw usage_error("macaulay_step: empty system");
  const Ambient amb = F.front().ambient();
  for (const Polynomial& f : F) {
    if (f.ambient() != amb)
      throw usage_error("macaulay_step: ambient mismatch");
    if (f.is_zero()) throw usage_error("macaulay_step: zero generator");
    if (!f.is_homogeneous())
      throw usage_error("macaulay_step: input must be homogeneous");
  }

  DegreeStepRecord rec;
  rec.degree = D;
  int dmin = F.front().degree();
  for (const Polynomial& f : F) dmin = std::min(dmin, f.degree());
  if (D < dmin) return rec;

  const std::vector<Monomial> columns = monomials_of_degree(amb.nvars, D);
  rec.cols = columns.size();

  std::vector<Polynomial> row_polys;
  for (const Polynomial& f : F) {
    if (f.degree() > D) continue;
    for (const Monomial& u : monomials_of_degree(amb.nvars, D - f.degree()))
      row_polys.push_back(f.times_term(1, u));
  }
  rec.rows = row_polys.size();
  if (row_polys.empty()) return rec;

  FpMatrix mat(amb.field, row_polys.size(), columns.size());
  for (std::size_t i = 0; i < row_polys.size(); ++i)
    for (const Term& t : row_polys[i].terms())
      mat.at(i, column_of(columns, t.monomial)) = t.coeff;

  const std::vector<std::size_t> pivots = mat.rref();
  rec.rank = pivots.size();

  for (std::size_t pr = 0; pr < pivots.size(); ++pr) {
    const Monomial& pivot_monomial = columns[pivots[pr]];
    if (divisible_by_any(pivot_monomial, state.found)) continue;
    rec.new_leading_terms.push_back(pivot_monomial);
    std::vector<Term> terms;
    for (std::size_t j = pivots[pr]; j < columns.size(); ++j)
      if (mat.at(pr, j) != 0) terms.push_back(Term{mat.at(pr, j), columns[j]});
    state.found.push_back(Polynomial::from_terms(amb, std::move(terms)));
  }
  return rec;
}

SolvingDegreeReport solving_degree(const std::vector<Polynomial>& F,
                                   const SolvingDegreeOptions& options) {
  std::vector<Polynomial> gens;
  for (const Polynomial& f : F)
    if (!f.is_zero()) gens.push_back(f);
  if (gens.empty()) throw usage_error("solving_degree: zero system");
  for (const Polynomial& f : gens) {
    if (!f.is_homogeneous())
      throw usage_error("solving_degree: input must be homogeneous");
    if (f.degree() < 1)
      throw usage_error("solving_degree: constant generator");
  }

  SolvingDegreeReport rep;
  rep.bound = options.bound;

  // independent oracle fixing the target leading-term ideal
  rep.oracle = buchberger(gens, BuchbergerOptions{options.degree_cap});
  rep.buchberger_max_degree = rep.oracle.max_degree_seen;
  std::vector<Monomial> target;
  target.reserve(rep.oracle.generators.size());
  for (const Polynomial& g : rep.oracle.generators)
    target.push_back(*g.leading_monomial());

  int dmin = gens.front().degree();
  for (const Polynomial& f : gens) dmin = std::min(dmin, f.degree());

  MacaulayState state;
  bool done = false;
  for (int D = dmin; !done; ++D) {
    if (D > options.degree_cap)
      throw engine_abort("solving_degree: step degree " + std::to_string(D) +
                         " exceeds the cap of " +
                         std::to_string(options.degree_cap));
    rep.per_degree.push_back(macaulay_step(gens, D, state));
    done = std::all_of(target.begin(), target.end(), [&](const Monomial& l) {
      return divisible_by_any(l, state.found);
    });
    if (done) rep.measured_solvdeg = D;
  }
  if (options.stability_step) {
    MacaulayState copy = state;
    rep.per_degree.push_back(
        macaulay_step(gens, rep.measured_solvdeg + 1, copy));
  }

  // the stepper's minimal leading terms must reproduce the oracle's
  std::vector<Monomial> found;
  found.reserve(state.found.size());
  for (const Polynomial& g : state.found)
    found.push_back(*g.leading_monomial());
  auto sort_monomials = [](std::vector<Monomial>& v) {
    std::sort(v.begin(), v.end(), DegrevlexGreater{});
  };
  sort_monomials(found);
  sort_monomials(target);
  rep.lt_ideal_agrees = found == target;

  rep.bound_respected =
      options.bound < 0 ||
      static_cast<std::int64_t>(rep.measured_solvdeg) <= options.bound;
  return rep;
}

}  // namespace minrank
