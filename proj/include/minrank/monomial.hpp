#pragma once

#include <string>
#include <vector>

#include "minrank/common.hpp"

namespace minrank {

// Monomial in x_1..x_k as a dense exponent vector with cached total degree.
class Monomial {
 public:
  explicit Monomial(std::vector<int> exponents);
  static Monomial one(int nvars);
  static Monomial variable(int nvars, int index);  // x_{index+1}

  int nvars() const { return static_cast<int>(exps_.size()); }
  int degree() const { return degree_; }
  int exponent(int i) const { return exps_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& exponents() const { return exps_; }
  bool is_one() const { return degree_ == 0; }

  Monomial times(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  // Requires o.divides(*this).
  Monomial divided_by(const Monomial& o) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);

  // Drops the last exponent (used when setting the homogenization variable
  // x_{k+1} to 1).
  Monomial drop_last_variable() const;
  // Appends one variable with the given exponent.
  Monomial append_variable(int exponent) const;

  bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
  bool operator!=(const Monomial& o) const { return exps_ != o.exps_; }

  std::string str() const;  // "x1^2*x3^1", "1" for the trivial monomial

 private:
  std::vector<int> exps_;
  int degree_;
};

// Standard degree-reverse-lexicographic comparison: higher total degree wins;
// on ties a > b iff the last nonzero entry of exponents(a) - exponents(b) is
// negative. Returns +1 (a > b), 0, or -1.
int degrevlex_cmp(const Monomial& a, const Monomial& b);

struct DegrevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return degrevlex_cmp(a, b) > 0;
  }
};

// All monomials of the exact degree (resp. of degree <= bound) in nvars
// variables, sorted descending by degrevlex.
std::vector<Monomial> monomials_of_degree(int nvars, int degree);
std::vector<Monomial> monomials_up_to_degree(int nvars, int degree);

// C(degree + nvars - 1, nvars - 1), guarded against overflow.
std::uint64_t monomial_count(int nvars, int degree);

}  // namespace minrank
