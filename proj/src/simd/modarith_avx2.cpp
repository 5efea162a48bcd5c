#include "modarith_avx2.hpp"

#include <immintrin.h>

namespace rbn::simd::avx2 {

namespace {

// Shoup multiplication: with wq = floor(w * 2^32 / p), the quotient estimate
// q = (x * wq) >> 32 leaves x*w - q*p in [0, 2p).
inline __m256i mulmod(__m256i x, __m256i w, __m256i wq, __m256i p) {
  const __m256i even = _mm256_srli_epi64(_mm256_mul_epu32(x, wq), 32);
  const __m256i odd = _mm256_mul_epu32(_mm256_srli_epi64(x, 32), wq);
  const __m256i q = _mm256_blend_epi32(even, odd, 0xAA);
  const __m256i r = _mm256_sub_epi32(_mm256_mullo_epi32(x, w), _mm256_mullo_epi32(q, p));
  return _mm256_min_epu32(r, _mm256_sub_epi32(r, p));
}

inline std::uint32_t shoup(std::uint32_t w, std::uint32_t p) {
  return static_cast<std::uint32_t>((static_cast<std::uint64_t>(w) << 32) / p);
}

}  // namespace

void axpy(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t w, std::uint32_t p) {
  const __m256i vw = _mm256_set1_epi32(static_cast<int>(w));
  const __m256i vwq = _mm256_set1_epi32(static_cast<int>(shoup(w, p)));
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    const __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    const __m256i s = _mm256_add_epi32(d, mulmod(x, vw, vwq, vp));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_min_epu32(s, _mm256_sub_epi32(s, vp)));
  }
  for (; i < n; ++i)
    dst[i] = static_cast<std::uint32_t>((dst[i] + static_cast<std::uint64_t>(w) * src[i]) % p);
}

void scale(std::uint32_t* dst, std::size_t n, std::uint32_t w, std::uint32_t p) {
  const __m256i vw = _mm256_set1_epi32(static_cast<int>(w));
  const __m256i vwq = _mm256_set1_epi32(static_cast<int>(shoup(w, p)));
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), mulmod(x, vw, vwq, vp));
  }
  for (; i < n; ++i) dst[i] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(w) * dst[i] % p);
}

}  // namespace rbn::simd::avx2
