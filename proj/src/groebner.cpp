#include "minrank/groebner.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace minrank {

Polynomial reduce_tracked(const Polynomial& f,
                          const std::vector<Polynomial>& G, int& max_degree) {
  const Ambient& amb = f.ambient();
  const FieldPrime& F = amb.field;
  Polynomial h = f;
  std::vector<Term> remainder;
  max_degree = std::max(max_degree, h.degree());
  while (!h.is_zero()) {
    const Term lt = *h.leading_term();
    bool reduced = false;
    for (const Polynomial& g : G) {
      if (g.is_zero()) continue;
      const Term glt = *g.leading_term();
      if (!glt.monomial.divides(lt.monomial)) continue;
      const std::uint32_t c = F.mul(lt.coeff, F.inv(glt.coeff));
      h = h - g.times_term(c, lt.monomial.divided_by(glt.monomial));
      max_degree = std::max(max_degree, h.degree());
      reduced = true;
      break;
    }
    if (!reduced) {
      // the extracted leading terms are strictly decreasing, so appending
      // keeps the remainder canonical
      remainder.push_back(lt);
      h = h - Polynomial::from_terms(amb, {lt});
    }
  }
  return Polynomial::from_terms(amb, std::move(remainder));
}

Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& G) {
  int scratch = 0;
  return reduce_tracked(f, G, scratch);
}

Polynomial spoly(const Polynomial& f, const Polynomial& g) {
  const FieldPrime& F = f.ambient().field;
  const Term ltf = *f.leading_term();
  const Term ltg = *g.leading_term();
  const Monomial u = Monomial::lcm(ltf.monomial, ltg.monomial);
  return f.times_term(F.inv(ltf.coeff), u.divided_by(ltf.monomial)) -
         g.times_term(F.inv(ltg.coeff), u.divided_by(ltg.monomial));
}

namespace {

using Pair = std::pair<int, int>;

struct PairQueue {
  // keyed by (lcm degree, i, j): normal selection, deterministic ties
  std::set<std::tuple<int, int, int>> pending;

  void push(int deg, int i, int j) { pending.emplace(deg, i, j); }
  bool empty() const { return pending.empty(); }
  std::tuple<int, int, int> pop() {
    auto it = pending.begin();
    auto v = *it;
    pending.erase(it);
    return v;
  }
};

std::vector<Polynomial> minimalize(std::vector<Polynomial> G) {
  std::sort(G.begin(), G.end(), [](const Polynomial& a, const Polynomial& b) {
    return degrevlex_cmp(*a.leading_monomial(), *b.leading_monomial()) < 0;
  });
  std::vector<Polynomial> out;
  for (const Polynomial& g : G) {
    const Monomial lm = *g.leading_monomial();
    const bool redundant =
        std::any_of(out.begin(), out.end(), [&](const Polynomial& h) {
          return h.leading_monomial()->divides(lm);
        });
    if (!redundant) out.push_back(g);
  }
  return out;
}

}  // namespace

GroebnerBasis buchberger(const std::vector<Polynomial>& F,
                         const BuchbergerOptions& options) {
  if (F.empty()) throw usage_error("buchberger: empty input");
  const Ambient amb = F.front().ambient();
  GroebnerBasis result;

  std::vector<Polynomial> G;
  PairQueue queue;
  std::set<Pair> treated;
  auto add_pairs_for = [&](int idx) {
    const Monomial lm = *G[static_cast<std::size_t>(idx)].leading_monomial();
    for (int i = 0; i < idx; ++i) {
      const Monomial u =
          Monomial::lcm(*G[static_cast<std::size_t>(i)].leading_monomial(), lm);
      queue.push(u.degree(), i, idx);
    }
  };

  for (const Polynomial& f : F) {
    if (f.ambient() != amb) throw usage_error("buchberger: ambient mismatch");
    result.max_degree_seen = std::max(result.max_degree_seen, f.degree());
    if (f.is_zero()) continue;
    G.push_back(f.monic());
    add_pairs_for(static_cast<int>(G.size()) - 1);
  }
  if (G.empty()) return result;  // zero ideal: empty basis

  while (!queue.empty()) {
    const auto [deg, i, j] = queue.pop();
    treated.insert({i, j});
    const Monomial lmi = *G[static_cast<std::size_t>(i)].leading_monomial();
    const Monomial lmj = *G[static_cast<std::size_t>(j)].leading_monomial();
    const Monomial u = Monomial::lcm(lmi, lmj);
    // product criterion
    if (u.degree() == lmi.degree() + lmj.degree() &&
        u == lmi.times(lmj))
      continue;
    // chain criterion
    bool skipped = false;
    for (int t = 0; t < static_cast<int>(G.size()) && !skipped; ++t) {
      if (t == i || t == j) continue;
      if (!G[static_cast<std::size_t>(t)].leading_monomial()->divides(u))
        continue;
      const Pair a{std::min(i, t), std::max(i, t)};
      const Pair b{std::min(j, t), std::max(j, t)};
      skipped = treated.count(a) > 0 && treated.count(b) > 0;
    }
    if (skipped) continue;

    Polynomial s = spoly(G[static_cast<std::size_t>(i)],
                         G[static_cast<std::size_t>(j)]);
    result.max_degree_seen = std::max(result.max_degree_seen, s.degree());
    Polynomial r = reduce_tracked(s, G, result.max_degree_seen);
    if (r.is_zero()) continue;
    if (r.degree() > options.degree_cap)
      throw engine_abort(
          "buchberger: new basis element of degree " +
          std::to_string(r.degree()) + " exceeds the cap of " +
          std::to_string(options.degree_cap));
    G.push_back(r.monic());
    add_pairs_for(static_cast<int>(G.size()) - 1);
  }

  // reduced basis: minimal leading terms, then tails fully reduced
  G = minimalize(std::move(G));
  std::vector<Polynomial> reduced;
  reduced.reserve(G.size());
  for (std::size_t i = 0; i < G.size(); ++i) {
    std::vector<Polynomial> others;
    others.reserve(G.size() - 1);
    for (std::size_t t = 0; t < G.size(); ++t)
      if (t != i) others.push_back(G[t]);
    reduced.push_back(reduce(G[i], others).monic());
  }
  std::sort(reduced.begin(), reduced.end(),
            [](const Polynomial& a, const Polynomial& b) {
              return degrevlex_cmp(*a.leading_monomial(),
                                   *b.leading_monomial()) < 0;
            });
  result.ideal_is_unit =
      reduced.size() == 1 && reduced.front().leading_monomial()->is_one();
  result.generators = std::move(reduced);
  for (const Polynomial& g : result.generators)
    result.max_degree_seen = std::max(result.max_degree_seen, g.degree());
  return result;
}

bool is_zero_dimensional(const GroebnerBasis& G) {
  if (G.generators.empty()) return false;
  const int k = G.generators.front().ambient().nvars;
  for (int v = 0; v < k; ++v) {
    bool covered = false;
    for (const Polynomial& g : G.generators) {
      const Monomial lm = *g.leading_monomial();
      if (lm.exponent(v) == lm.degree() && lm.degree() > 0) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

}  // namespace minrank
