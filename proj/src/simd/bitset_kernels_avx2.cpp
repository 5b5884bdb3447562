#include "pinilot/simd/bitset_kernels.hpp"

#include <immintrin.h>

#include <bit>

namespace pinilot::simd {

namespace {

// Nibble-LUT popcount: per-byte counts via vpshufb, summed with vpsadbw.
inline __m256i popcount_bytes(__m256i v) {
  const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3,
                                       3, 4, 0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3,
                                       2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  __m256i lo = _mm256_and_si256(v, low_mask);
  __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
  __m256i counts =
      _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
  return _mm256_sad_epu8(counts, _mm256_setzero_si256());
}

inline std::size_t horizontal_sum(__m256i acc) {
  __m128i lo = _mm256_castsi256_si128(acc);
  __m128i hi = _mm256_extracti128_si256(acc, 1);
  __m128i s = _mm_add_epi64(lo, hi);
  return static_cast<std::size_t>(_mm_cvtsi128_si64(s) +
                                  _mm_extract_epi64(s, 1));
}

inline __m256i load(const std::uint64_t *p) {
  return _mm256_loadu_si256(reinterpret_cast<const __m256i *>(p));
}

std::size_t avx2_popcount(const std::uint64_t *a, std::size_t words) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4)
    acc = _mm256_add_epi64(acc, popcount_bytes(load(a + i)));
  std::size_t total = horizontal_sum(acc);
  for (; i < words; ++i)
    total += static_cast<std::size_t>(std::popcount(a[i]));
  return total;
}

std::size_t avx2_and_popcount(const std::uint64_t *a, const std::uint64_t *b,
                              std::size_t words) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4)
    acc = _mm256_add_epi64(
        acc, popcount_bytes(_mm256_and_si256(load(a + i), load(b + i))));
  std::size_t total = horizontal_sum(acc);
  for (; i < words; ++i)
    total += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return total;
}

bool avx2_is_subset(const std::uint64_t *a, const std::uint64_t *b,
                    std::size_t words) {
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    // testc(b, a) is 1 iff (~b & a) == 0
    if (!_mm256_testc_si256(load(b + i), load(a + i)))
      return false;
  }
  for (; i < words; ++i)
    if ((a[i] & ~b[i]) != 0)
      return false;
  return true;
}

bool avx2_intersects(const std::uint64_t *a, const std::uint64_t *b,
                     std::size_t words) {
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4)
    if (!_mm256_testz_si256(load(a + i), load(b + i)))
      return true;
  for (; i < words; ++i)
    if ((a[i] & b[i]) != 0)
      return true;
  return false;
}

void avx2_and_into(std::uint64_t *dst, const std::uint64_t *src,
                   std::size_t words) {
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4)
    _mm256_storeu_si256(reinterpret_cast<__m256i *>(dst + i),
                        _mm256_and_si256(load(dst + i), load(src + i)));
  for (; i < words; ++i)
    dst[i] &= src[i];
}

void avx2_or_into(std::uint64_t *dst, const std::uint64_t *src,
                  std::size_t words) {
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4)
    _mm256_storeu_si256(reinterpret_cast<__m256i *>(dst + i),
                        _mm256_or_si256(load(dst + i), load(src + i)));
  for (; i < words; ++i)
    dst[i] |= src[i];
}

const BitsetKernels kAvx2{"avx2",          avx2_popcount,   avx2_and_popcount,
                          avx2_is_subset,  avx2_intersects, avx2_and_into,
                          avx2_or_into};

} // namespace

const BitsetKernels &avx2_kernel_table() { return kAvx2; }

} // namespace pinilot::simd
