#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "minrank/field.hpp"
#include "minrank/monomial.hpp"

namespace minrank {

// Variable count and coefficient field shared by all terms of a polynomial.
struct Ambient {
  int nvars;
  FieldPrime field;

  bool operator==(const Ambient& o) const {
    return nvars == o.nvars && field == o.field;
  }
  bool operator!=(const Ambient& o) const { return !(*this == o); }
};

struct Term {
  std::uint32_t coeff;  // nonzero canonical residue
  Monomial monomial;
};

// Immutable multivariate polynomial over F_p: term list strictly descending
// by degrevlex, no zero coefficients; the zero polynomial is the empty list.
class Polynomial {
 public:
  static Polynomial zero(const Ambient& a) { return Polynomial(a, {}); }
  static Polynomial constant(const Ambient& a, std::uint32_t c);
  static Polynomial variable(const Ambient& a, int index);  // x_{index+1}
  // Canonicalizes: merges duplicate monomials, drops zeros, sorts descending.
  static Polynomial from_terms(const Ambient& a, std::vector<Term> terms);

  const Ambient& ambient() const { return ambient_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t num_terms() const { return terms_.size(); }
  // Total degree; -1 for the zero polynomial.
  int degree() const {
    return terms_.empty() ? -1 : terms_.front().monomial.degree();
  }

  std::optional<Term> leading_term() const;
  std::optional<Monomial> leading_monomial() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial scalar_mul(std::uint32_t c) const;
  // (c * x^e) * f, order-preserving.
  Polynomial times_term(std::uint32_t c, const Monomial& mono) const;
  Polynomial monic() const;

  bool is_homogeneous() const;  // true for the zero polynomial
  // Lifts every term to target_degree with a fresh last variable x_{k+1}.
  Polynomial homogenize(int target_degree) const;
  // Sets the last variable to 1 (ambient shrinks by one variable).
  Polynomial dehomogenize_last() const;

  std::uint32_t evaluate(const std::vector<std::uint32_t>& point) const;

  bool operator==(const Polynomial& o) const {
    return ambient_ == o.ambient_ && equal_terms(o);
  }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  // Canonical text: terms joined by " + ", each "c*x1^a1*..." with explicit
  // exponents; "0" for the zero polynomial.
  std::string str() const;
  static Polynomial parse(const Ambient& a, std::string_view text);

 private:
  Polynomial(Ambient a, std::vector<Term> sorted_terms)
      : ambient_(std::move(a)), terms_(std::move(sorted_terms)) {}
  bool equal_terms(const Polynomial& o) const;
  const Ambient& same(const Polynomial& o) const;

  Ambient ambient_;
  std::vector<Term> terms_;
};

}  // namespace minrank
