#include "minrank/field.hpp"

namespace minrank {

bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint32_t d = 3; static_cast<std::uint64_t>(d) * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

FieldPrime::FieldPrime(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31))
    throw usage_error("FieldPrime: modulus must be < 2^31");
  if (!is_prime_u32(p))
    throw usage_error("FieldPrime: " + std::to_string(p) + " is not prime");
}

std::uint32_t FieldPrime::pow(std::uint32_t a, std::uint64_t e) const {
  std::uint64_t base = a % p_, acc = 1 % p_;
  while (e > 0) {
    if (e & 1) acc = acc * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(acc);
}

std::uint32_t FieldPrime::inv(std::uint32_t a) const {
  if (a == 0) throw division_by_zero();
  // extended Euclid on (a, p); p prime so gcd = 1
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p_;
  return static_cast<std::uint32_t>(t);
}

FieldElement random_element(std::mt19937_64& rng, const FieldPrime& field) {
  return FieldElement(
      static_cast<std::uint32_t>(uniform_below(rng, field.modulus())), field);
}

FieldElement random_nonzero(std::mt19937_64& rng, const FieldPrime& field) {
  return FieldElement(
      static_cast<std::uint32_t>(uniform_below(rng, field.modulus() - 1)) + 1,
      field);
}

}  // namespace minrank
