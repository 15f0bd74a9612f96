#include <immintrin.h>

#include "variants.hpp"

namespace permroots::kernels::detail {

// vpshufb shuffles within each 128-bit lane, which is exactly two independent rows.
void power_batch_avx2(const std::uint8_t* in, std::uint8_t* out, std::size_t rows, std::uint64_t m) {
  const __m256i identity = _mm256_setr_epi8(0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15,
                                            0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15);
  std::size_t r = 0;
  for (; r + 4 <= rows; r += 4) {
    __m256i base0 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(in + 16 * r));
    __m256i base1 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(in + 16 * r + 32));
    __m256i acc0 = identity;
    __m256i acc1 = identity;
    for (std::uint64_t e = m; e != 0; e >>= 1) {
      if (e & 1) {
        acc0 = _mm256_shuffle_epi8(base0, acc0);
        acc1 = _mm256_shuffle_epi8(base1, acc1);
      }
      if (e > 1) {
        base0 = _mm256_shuffle_epi8(base0, base0);
        base1 = _mm256_shuffle_epi8(base1, base1);
      }
    }
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + 16 * r), acc0);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + 16 * r + 32), acc1);
  }
  for (; r + 2 <= rows; r += 2) {
    __m256i base = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(in + 16 * r));
    __m256i acc = identity;
    for (std::uint64_t e = m; e != 0; e >>= 1) {
      if (e & 1) acc = _mm256_shuffle_epi8(base, acc);
      if (e > 1) base = _mm256_shuffle_epi8(base, base);
    }
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + 16 * r), acc);
  }
  if (r < rows) {
    __m128i base = _mm_loadu_si128(reinterpret_cast<const __m128i*>(in + 16 * r));
    __m128i acc = _mm256_castsi256_si128(identity);
    for (std::uint64_t e = m; e != 0; e >>= 1) {
      if (e & 1) acc = _mm_shuffle_epi8(base, acc);
      if (e > 1) base = _mm_shuffle_epi8(base, base);
    }
    _mm_storeu_si128(reinterpret_cast<__m128i*>(out + 16 * r), acc);
  }
}

}  // namespace permroots::kernels::detail
