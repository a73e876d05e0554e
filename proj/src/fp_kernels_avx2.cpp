// AVX2 variants of the F_p row kernels. The per-call multiplier c is fixed,
// so modular multiplication uses Shoup's precomputed-quotient trick:
//   c' = floor(c * 2^32 / p),  q = mulhi_32(c', x),  t = c*x - q*p in [0, 2p),
// followed by one conditional subtract. Exact for c, x < p < 2^31, hence
// bit-identical to the scalar reference.

#include "minrank/fp_kernels.hpp"

#include <immintrin.h>

namespace minrank::kernels {
namespace detail {

namespace {

inline __m256i mulhi_epu32(__m256i a, __m256i b) {
  const __m256i even = _mm256_srli_epi64(_mm256_mul_epu32(a, b), 32);
  const __m256i odd = _mm256_mul_epu32(_mm256_srli_epi64(a, 32), b);
  return _mm256_blend_epi32(even, odd, 0xAA);
}

inline __m256i cond_sub(__m256i v, __m256i p) {
  // valid for v < 2p: the wrapped difference exceeds v exactly when v < p
  return _mm256_min_epu32(v, _mm256_sub_epi32(v, p));
}

void axpy_avx2(std::uint32_t* dst, const std::uint32_t* src, std::size_t n,
               std::uint32_t c, std::uint32_t p) {
  const std::uint32_t cs = static_cast<std::uint32_t>(
      (static_cast<std::uint64_t>(c) << 32) / p);
  const __m256i vc = _mm256_set1_epi32(static_cast<int>(c));
  const __m256i vcs = _mm256_set1_epi32(static_cast<int>(cs));
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i x =
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    const __m256i d =
        _mm256_loadu_si256(reinterpret_cast<__m256i const*>(dst + i));
    const __m256i q = mulhi_epu32(x, vcs);
    __m256i t = _mm256_sub_epi32(_mm256_mullo_epi32(x, vc),
                                 _mm256_mullo_epi32(q, vp));
    t = cond_sub(t, vp);
    const __m256i y = cond_sub(_mm256_add_epi32(d, t), vp);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), y);
  }
  for (; i < n; ++i) {
    const std::uint32_t t = static_cast<std::uint32_t>(
        static_cast<std::uint64_t>(c) * src[i] % p);
    const std::uint32_t y = dst[i] + t;
    dst[i] = y >= p ? y - p : y;
  }
}

void scale_avx2(std::uint32_t* v, std::size_t n, std::uint32_t c,
                std::uint32_t p) {
  const std::uint32_t cs = static_cast<std::uint32_t>(
      (static_cast<std::uint64_t>(c) << 32) / p);
  const __m256i vc = _mm256_set1_epi32(static_cast<int>(c));
  const __m256i vcs = _mm256_set1_epi32(static_cast<int>(cs));
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i x =
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + i));
    const __m256i q = mulhi_epu32(x, vcs);
    __m256i t = _mm256_sub_epi32(_mm256_mullo_epi32(x, vc),
                                 _mm256_mullo_epi32(q, vp));
    t = cond_sub(t, vp);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(v + i), t);
  }
  for (; i < n; ++i)
    v[i] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(c) * v[i] %
                                      p);
}

}  // namespace

const FpKernels* avx2_impl() {
  static const FpKernels k{"avx2", &axpy_avx2, &scale_avx2};
  return &k;
}

}  // namespace detail
}  // namespace minrank::kernels
