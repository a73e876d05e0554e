#include "minrank/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace minrank {

Polynomial Polynomial::constant(const Ambient& a, std::uint32_t c) {
  c %= a.field.modulus();
  if (c == 0) return zero(a);
  return Polynomial(a, {Term{c, Monomial::one(a.nvars)}});
}

Polynomial Polynomial::variable(const Ambient& a, int index) {
  return Polynomial(a, {Term{1, Monomial::variable(a.nvars, index)}});
}

Polynomial Polynomial::from_terms(const Ambient& a, std::vector<Term> terms) {
  std::map<Monomial, std::uint32_t, DegrevlexGreater> acc;
  for (const Term& t : terms) {
    if (t.monomial.nvars() != a.nvars)
      throw usage_error("Polynomial: term has wrong variable count");
    auto [it, fresh] = acc.emplace(t.monomial, 0);
    it->second = a.field.add(it->second, t.coeff % a.field.modulus());
  }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (const auto& [mono, c] : acc)
    if (c != 0) out.push_back(Term{c, mono});
  return Polynomial(a, std::move(out));
}

std::optional<Term> Polynomial::leading_term() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.front();
}

std::optional<Monomial> Polynomial::leading_monomial() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.front().monomial;
}

const Ambient& Polynomial::same(const Polynomial& o) const {
  if (ambient_ != o.ambient_) throw usage_error("Polynomial: ambient mismatch");
  return ambient_;
}

bool Polynomial::equal_terms(const Polynomial& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].coeff != o.terms_[i].coeff ||
        terms_[i].monomial != o.terms_[i].monomial)
      return false;
  return true;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  same(o);
  const FieldPrime& F = ambient_.field;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    const int c = degrevlex_cmp(terms_[i].monomial, o.terms_[j].monomial);
    if (c > 0) {
      out.push_back(terms_[i++]);
    } else if (c < 0) {
      out.push_back(o.terms_[j++]);
    } else {
      const std::uint32_t s = F.add(terms_[i].coeff, o.terms_[j].coeff);
      if (s != 0) out.push_back(Term{s, terms_[i].monomial});
      ++i;
      ++j;
    }
  }
  out.insert(out.end(), terms_.begin() + static_cast<std::ptrdiff_t>(i),
             terms_.end());
  out.insert(out.end(), o.terms_.begin() + static_cast<std::ptrdiff_t>(j),
             o.terms_.end());
  return Polynomial(ambient_, std::move(out));
}

Polynomial Polynomial::operator-() const {
  const FieldPrime& F = ambient_.field;
  std::vector<Term> out(terms_);
  for (Term& t : out) t.coeff = F.neg(t.coeff);
  return Polynomial(ambient_, std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  return *this + (-o);
}

Polynomial Polynomial::scalar_mul(std::uint32_t c) const {
  const FieldPrime& F = ambient_.field;
  c %= F.modulus();
  if (c == 0) return zero(ambient_);
  std::vector<Term> out(terms_);
  for (Term& t : out) t.coeff = F.mul(t.coeff, c);
  return Polynomial(ambient_, std::move(out));
}

Polynomial Polynomial::times_term(std::uint32_t c, const Monomial& mono) const {
  const FieldPrime& F = ambient_.field;
  c %= F.modulus();
  if (c == 0) return zero(ambient_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  // degrevlex is multiplicative, so order is preserved
  for (const Term& t : terms_)
    out.push_back(Term{F.mul(t.coeff, c), t.monomial.times(mono)});
  return Polynomial(ambient_, std::move(out));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  same(o);
  const FieldPrime& F = ambient_.field;
  std::map<Monomial, std::uint32_t, DegrevlexGreater> acc;
  for (const Term& a : terms_) {
    for (const Term& b : o.terms_) {
      auto [it, fresh] = acc.emplace(a.monomial.times(b.monomial), 0);
      it->second = F.add(it->second, F.mul(a.coeff, b.coeff));
    }
  }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (const auto& [mono, c] : acc)
    if (c != 0) out.push_back(Term{c, mono});
  return Polynomial(ambient_, std::move(out));
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return scalar_mul(ambient_.field.inv(terms_.front().coeff));
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = terms_.front().monomial.degree();
  for (const Term& t : terms_)
    if (t.monomial.degree() != d) return false;
  return true;
}

Polynomial Polynomial::homogenize(int target_degree) const {
  if (target_degree < degree())
    throw usage_error("homogenize: target degree below polynomial degree");
  Ambient lifted{ambient_.nvars + 1, ambient_.field};
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const Term& t : terms_)
    out.push_back(Term{
        t.coeff,
        t.monomial.append_variable(target_degree - t.monomial.degree())});
  // the homogenization variable is last, hence degrevlex-cheapest: the
  // descending order of the original terms is preserved
  return Polynomial(lifted, std::move(out));
}

Polynomial Polynomial::dehomogenize_last() const {
  if (ambient_.nvars < 2)
    throw usage_error("dehomogenize: need at least two variables");
  Ambient shrunk{ambient_.nvars - 1, ambient_.field};
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const Term& t : terms_)
    out.push_back(Term{t.coeff, t.monomial.drop_last_variable()});
  return from_terms(shrunk, std::move(out));
}

std::uint32_t Polynomial::evaluate(
    const std::vector<std::uint32_t>& point) const {
  if (static_cast<int>(point.size()) != ambient_.nvars)
    throw usage_error("evaluate: point has wrong dimension");
  const FieldPrime& F = ambient_.field;
  std::uint32_t acc = 0;
  for (const Term& t : terms_) {
    std::uint32_t v = t.coeff;
    for (int i = 0; i < ambient_.nvars; ++i) {
      const int e = t.monomial.exponent(i);
      if (e > 0)
        v = F.mul(v, F.pow(point[static_cast<std::size_t>(i)],
                           static_cast<std::uint64_t>(e)));
    }
    acc = F.add(acc, v);
  }
  return acc;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i > 0) s += " + ";
    s += std::to_string(terms_[i].coeff);
    if (!terms_[i].monomial.is_one()) {
      s += '*';
      s += terms_[i].monomial.str();
    }
  }
  return s;
}

namespace {

struct Parser {
  std::string_view text;
  std::size_t pos = 0;
  const Ambient& ambient;

  void skip_ws() {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  [[noreturn]] void fail(const std::string& what) {
    throw usage_error("polynomial parse error at position " +
                      std::to_string(pos) + ": " + what);
  }
  std::int64_t integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos == start) fail("expected an integer");
    std::int64_t v = 0;
    for (std::size_t i = start; i < pos; ++i) {
      v = v * 10 + (text[i] - '0');
      if (v > (1ll << 62)) fail("integer too large");
    }
    return v;
  }

  // term := INT ('*' factor)* | factor ('*' factor)*
  Term term() {
    std::uint32_t coeff = 1;
    std::vector<int> exps(static_cast<std::size_t>(ambient.nvars), 0);
    bool saw_factor = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = ambient.field.reduce(integer());
      saw_factor = true;
      if (peek() == '*') {
        ++pos;
        saw_factor = false;
      } else {
        return Term{coeff, Monomial(std::move(exps))};
      }
    }
    for (;;) {
      if (peek() != 'x') fail("expected a variable factor 'x<i>'");
      ++pos;
      const std::int64_t idx = integer();
      if (idx < 1 || idx > ambient.nvars)
        fail("variable index out of range: x" + std::to_string(idx));
      std::int64_t e = 1;
      if (peek() == '^') {
        ++pos;
        e = integer();
        if (e < 0 || e > (1 << 20)) fail("exponent out of range");
      }
      exps[static_cast<std::size_t>(idx - 1)] += static_cast<int>(e);
      saw_factor = true;
      if (peek() == '*') {
        ++pos;
        continue;
      }
      break;
    }
    if (!saw_factor) fail("empty term");
    return Term{coeff, Monomial(std::move(exps))};
  }
};

}  // namespace

Polynomial Polynomial::parse(const Ambient& a, std::string_view text) {
  Parser ps{text, 0, a};
  if (ps.eof()) throw usage_error("polynomial parse error: empty input");
  std::vector<Term> terms;
  bool negate = false;
  if (ps.peek() == '-') {
    ++ps.pos;
    negate = true;
  } else if (ps.peek() == '+') {
    ++ps.pos;
  }
  for (;;) {
    Term t = ps.term();
    if (negate) t.coeff = a.field.neg(t.coeff);
    terms.push_back(std::move(t));
    if (ps.eof()) break;
    const char c = ps.peek();
    if (c == '+') {
      negate = false;
    } else if (c == '-') {
      negate = true;
    } else {
      ps.fail("expected '+' or '-' between terms");
    }
    ++ps.pos;
  }
  return from_terms(a, std::move(terms));
}

}  // namespace minrank
