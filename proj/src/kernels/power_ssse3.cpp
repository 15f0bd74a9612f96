#include <tmmintrin.h>

#include "variants.hpp"

namespace permroots::kernels::detail {

void power_batch_ssse3(const std::uint8_t* in, std::uint8_t* out, std::size_t rows, std::uint64_t m) {
  const __m128i identity = _mm_setr_epi8(0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15);
  for (std::size_t r = 0; r < rows; ++r) {
    __m128i base = _mm_loadu_si128(reinterpret_cast<const __m128i*>(in + 16 * r));
    __m128i acc = identity;
    for (std::uint64_t e = m; e != 0; e >>= 1) {
      if (e & 1) acc = _mm_shuffle_epi8(base, acc);
      if (e > 1) base = _mm_shuffle_epi8(base, base);
    }
    _mm_storeu_si128(reinterpret_cast<__m128i*>(out + 16 * r), acc);
  }
}

}  // namespace permroots::kernels::detail
