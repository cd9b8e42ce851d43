// Compiled with -mavx2; only reached through the runtime dispatcher.
#include <immintrin.h>

#include "pbwkit/exactlin/kernels.hpp"

namespace pbwkit::exactlin::kernels::avx2 {

namespace {

// Four lanes of (x mod p) for doubles 0 <= x < 2^53 holding integers.
// The quotient estimate may be off by one either way; one fixup per side
// brings the remainder back into [0, p).
inline __m256d reduce(__m256d x, __m256d pd, __m256d invp) {
  __m256d q = _mm256_floor_pd(_mm256_mul_pd(x, invp));
  __m256d r = _mm256_sub_pd(x, _mm256_mul_pd(q, pd));
  __m256d zero = _mm256_setzero_pd();
  r = _mm256_add_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, zero, _CMP_LT_OQ), pd));
  r = _mm256_sub_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, pd, _CMP_GE_OQ), pd));
  return r;
}

inline __m256d load4(const std::uint32_t* p) {
  return _mm256_cvtepi32_pd(_mm_loadu_si128(reinterpret_cast<const __m128i*>(p)));
}

inline void store4(std::uint32_t* p, __m256d v) {
  _mm_storeu_si128(reinterpret_cast<__m128i*>(p), _mm256_cvttpd_epi32(v));
}

}  // namespace

void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t c, std::uint32_t p, std::size_t n) {
  const __m256d pd = _mm256_set1_pd(static_cast<double>(p));
  const __m256d invp = _mm256_set1_pd(1.0 / static_cast<double>(p));
  const __m256d cd = _mm256_set1_pd(static_cast<double>(c));
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d x = _mm256_add_pd(load4(dst + i), _mm256_mul_pd(cd, load4(src + i)));
    store4(dst + i, reduce(x, pd, invp));
  }
  portable::axpy_mod(dst + i, src + i, c, p, n - i);
}

void scale_mod(std::uint32_t* v, std::uint32_t c, std::uint32_t p, std::size_t n) {
  const __m256d pd = _mm256_set1_pd(static_cast<double>(p));
  const __m256d invp = _mm256_set1_pd(1.0 / static_cast<double>(p));
  const __m256d cd = _mm256_set1_pd(static_cast<double>(c));
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) store4(v + i, reduce(_mm256_mul_pd(cd, load4(v + i)), pd, invp));
  portable::scale_mod(v + i, c, p, n - i);
}

}  // namespace pbwkit::exactlin::kernels::avx2
