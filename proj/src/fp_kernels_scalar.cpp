#include "minrank/fp_kernels.hpp"

namespace minrank::kernels {

namespace {

void axpy_scalar(std::uint32_t* dst, const std::uint32_t* src, std::size_t n,
                 std::uint32_t c, std::uint32_t p) {
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint32_t t = static_cast<std::uint32_t>(
        static_cast<std::uint64_t>(c) * src[i] % p);
    const std::uint32_t y = dst[i] + t;  // both < p < 2^31
    dst[i] = y >= p ? y - p : y;
  }
}

void scale_scalar(std::uint32_t* v, std::size_t n, std::uint32_t c,
                  std::uint32_t p) {
  for (std::size_t i = 0; i < n; ++i)
    v[i] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(c) * v[i] %
                                      p);
}

}  // namespace

const FpKernels& scalar_kernels() {
  static const FpKernels k{"scalar", &axpy_scalar, &scale_scalar};
  return k;
}

}  // namespace minrank::kernels
