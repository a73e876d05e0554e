#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

// Row kernels for dense F_p linear algebra (the Gaussian-elimination inner
// loop of the Macaulay stepper and the brute-force rank oracle). A scalar
// reference implementation always exists; an AVX2 variant is selected at
// runtime when the CPU supports it. All variants compute exact canonical
// residues, so their results are bit-identical.

namespace minrank::kernels {

// dst[i] <- (dst[i] + c*src[i]) mod p. Requires dst != src, c < p,
// all entries canonical in [0, p), 2 <= p < 2^31.
using AxpyFn = void (*)(std::uint32_t* dst, const std::uint32_t* src,
                        std::size_t n, std::uint32_t c, std::uint32_t p);
// v[i] <- (c*v[i]) mod p, same preconditions.
using ScaleFn = void (*)(std::uint32_t* v, std::size_t n, std::uint32_t c,
                         std::uint32_t p);

struct FpKernels {
  const char* name;
  AxpyFn axpy;
  ScaleFn scale;
};

const FpKernels& scalar_kernels();

// nullptr when the binary was built without AVX2 support or the CPU lacks it.
const FpKernels* avx2_kernels();

// The variant in use; resolved once ("avx2" when available, else "scalar").
// The MINRANK_KERNELS environment variable ("scalar"/"avx2") overrides.
const FpKernels& active_kernels();

// Force a variant by name ("scalar", "avx2", "auto"); throws on an
// unavailable or unknown name. Intended for tests and benchmarks.
void select_kernels(std::string_view name);

}  // namespace minrank::kernels
