#pragma once

#include <cstdint>
#include <random>

#include "minrank/common.hpp"

namespace minrank {

class FieldElement;

// Prime modulus of the coefficient field F_p. Word-sized only (2 <= p < 2^31);
// primality is verified at construction by trial division.
class FieldPrime {
 public:
  explicit FieldPrime(std::uint32_t p);

  std::uint32_t modulus() const { return p_; }
  bool operator==(const FieldPrime& o) const { return p_ == o.p_; }
  bool operator!=(const FieldPrime& o) const { return p_ != o.p_; }

  // Arithmetic on canonical residues in [0, p).
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t s = a + b;  // a, b < p < 2^31, no overflow
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    return a >= b ? a - b : a + p_ - b;
  }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(
        (static_cast<std::uint64_t>(a) * b) % p_);
  }
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
  // Inverse by extended Euclid; throws division_by_zero on 0.
  std::uint32_t inv(std::uint32_t a) const;

  // Canonical representative of an arbitrary signed value.
  std::uint32_t reduce(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<std::uint32_t>(r);
  }

  FieldElement operator()(std::int64_t v) const;

 private:
  std::uint32_t p_;
};

// Immutable residue paired with its modulus. Mixed-modulus operations are
// usage errors.
class FieldElement {
 public:
  FieldElement(std::uint32_t value, FieldPrime field)
      : value_(value), field_(field) {
    if (value_ >= field_.modulus())
      throw usage_error("FieldElement: value out of range");
  }

  std::uint32_t value() const { return value_; }
  const FieldPrime& field() const { return field_; }
  bool is_zero() const { return value_ == 0; }

  FieldElement operator+(const FieldElement& o) const {
    return {field_.add(value_, same(o).value_), field_};
  }
  FieldElement operator-(const FieldElement& o) const {
    return {field_.sub(value_, same(o).value_), field_};
  }
  FieldElement operator*(const FieldElement& o) const {
    return {field_.mul(value_, same(o).value_), field_};
  }
  FieldElement operator/(const FieldElement& o) const {
    return {field_.mul(value_, field_.inv(same(o).value_)), field_};
  }
  FieldElement operator-() const { return {field_.neg(value_), field_}; }
  FieldElement inverse() const { return {field_.inv(value_), field_}; }
  FieldElement pow(std::uint64_t e) const {
    return {field_.pow(value_, e), field_};
  }

  bool operator==(const FieldElement& o) const {
    return field_ == o.field_ && value_ == o.value_;
  }

 private:
  const FieldElement& same(const FieldElement& o) const {
    if (field_ != o.field_)
      throw usage_error("FieldElement: modulus mismatch");
    return o;
  }

  std::uint32_t value_;
  FieldPrime field_;
};

inline FieldElement FieldPrime::operator()(std::int64_t v) const {
  return FieldElement(reduce(v), *this);
}

bool is_prime_u32(std::uint32_t n);

// Uniform over F_p.
FieldElement random_element(std::mt19937_64& rng, const FieldPrime& field);
// Uniform over F_p \ {0}.
FieldElement random_nonzero(std::mt19937_64& rng, const FieldPrime& field);

}  // namespace minrank
