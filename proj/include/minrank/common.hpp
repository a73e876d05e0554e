#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace minrank {

// Misuse of a public contract: bad parameters, mismatched moduli/ambients,
// malformed input files. CLI maps this to exit code 1.
class usage_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class division_by_zero : public usage_error {
 public:
  division_by_zero() : usage_error("division by zero in F_p") {}
};

// A degree grid violating condition (1) (positivity) or (2) (additivity).
class invalid_degree : public usage_error {
 public:
  using usage_error::usage_error;
};

// An engine exceeded its configured degree cap. CLI exit code 2.
class engine_abort : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A cross-check that must hold for every valid input failed. CLI exit code 3.
class invariant_violation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Uniform draw from [0, bound) by rejection sampling; unbiased and fully
// determined by the mt19937_64 stream, so instances are reproducible from
// their seed across platforms.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw usage_error("uniform_below: bound must be positive");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

}  // namespace minrank
