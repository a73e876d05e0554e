#include "minrank/monomial.hpp"

#include <algorithm>
#include <numeric>

namespace minrank {

Monomial::Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
  for (int e : exps_)
    if (e < 0) throw usage_error("Monomial: negative exponent");
  degree_ = std::accumulate(exps_.begin(), exps_.end(), 0);
}

Monomial Monomial::one(int nvars) {
  return Monomial(std::vector<int>(static_cast<std::size_t>(nvars), 0));
}

Monomial Monomial::variable(int nvars, int index) {
  if (index < 0 || index >= nvars)
    throw usage_error("Monomial::variable: index out of range");
  std::vector<int> e(static_cast<std::size_t>(nvars), 0);
  e[static_cast<std::size_t>(index)] = 1;
  return Monomial(std::move(e));
}

Monomial Monomial::times(const Monomial& o) const {
  if (nvars() != o.nvars()) throw usage_error("Monomial: dimension mismatch");
  std::vector<int> e(exps_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += o.exps_[i];
  return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& o) const {
  if (nvars() != o.nvars()) throw usage_error("Monomial: dimension mismatch");
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > o.exps_[i]) return false;
  return true;
}

Monomial Monomial::divided_by(const Monomial& o) const {
  if (!o.divides(*this))
    throw usage_error("Monomial: quotient is not a monomial");
  std::vector<int> e(exps_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] -= o.exps_[i];
  return Monomial(std::move(e));
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars())
    throw usage_error("Monomial: dimension mismatch");
  std::vector<int> e(a.exps_);
  for (std::size_t i = 0; i < e.size(); ++i)
    e[i] = std::max(e[i], b.exps_[i]);
  return Monomial(std::move(e));
}

Monomial Monomial::drop_last_variable() const {
  if (exps_.empty()) throw usage_error("Monomial: no variable to drop");
  return Monomial(std::vector<int>(exps_.begin(), exps_.end() - 1));
}

Monomial Monomial::append_variable(int exponent) const {
  std::vector<int> e(exps_);
  e.push_back(exponent);
  return Monomial(std::move(e));
}

std::string Monomial::str() const {
  if (is_one()) return "1";
  std::string s;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += 'x';
    s += std::to_string(i + 1);
    s += '^';
    s += std::to_string(exps_[i]);
  }
  return s;
}

int degrevlex_cmp(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars())
    throw usage_error("degrevlex_cmp: dimension mismatch");
  if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
  const auto& ea = a.exponents();
  const auto& eb = b.exponents();
  for (std::size_t i = ea.size(); i-- > 0;) {
    const int d = ea[i] - eb[i];
    if (d != 0) return d < 0 ? 1 : -1;
  }
  return 0;
}

std::uint64_t monomial_count(int nvars, int degree) {
  // C(degree + nvars - 1, nvars - 1)
  if (nvars <= 0) throw usage_error("monomial_count: nvars must be positive");
  std::uint64_t num = 1;
  for (int i = 1; i < nvars; ++i) {
    num = num * static_cast<std::uint64_t>(degree + i) /
          static_cast<std::uint64_t>(i);
    if (num > (1ull << 40))
      throw usage_error("monomial_count: basis too large for desk scale");
  }
  return num;
}

namespace {

void enumerate_exact(int nvars, int degree, std::vector<int>& cur,
                     std::vector<Monomial>& out) {
  const std::size_t pos = cur.size();
  if (pos + 1 == static_cast<std::size_t>(nvars)) {
    cur.push_back(degree);
    out.emplace_back(cur);
    cur.pop_back();
    return;
  }
  for (int e = degree; e >= 0; --e) {
    cur.push_back(e);
    enumerate_exact(nvars, degree - e, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Monomial> monomials_of_degree(int nvars, int degree) {
  if (nvars <= 0 || degree < 0)
    throw usage_error("monomials_of_degree: bad arguments");
  if (monomial_count(nvars, degree) > 5'000'000)
    throw usage_error("monomials_of_degree: basis too large for desk scale");
  std::vector<Monomial> out;
  out.reserve(static_cast<std::size_t>(monomial_count(nvars, degree)));
  std::vector<int> cur;
  enumerate_exact(nvars, degree, cur, out);
  std::sort(out.begin(), out.end(), DegrevlexGreater{});
  return out;
}

std::vector<Monomial> monomials_up_to_degree(int nvars, int degree) {
  std::vector<Monomial> out;
  for (int d = degree; d >= 0; --d) {
    auto block = monomials_of_degree(nvars, d);
    out.insert(out.end(), block.begin(), block.end());
  }
  return out;
}

}  // namespace minrank
