#if defined(__aarch64__)

#include <arm_neon.h>

#include "variants.hpp"

namespace permroots::kernels::detail {

void power_batch_neon(const std::uint8_t* in, std::uint8_t* out, std::size_t rows, std::uint64_t m) {
  static const std::uint8_t kIdentity[16] = {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15};
  const uint8x16_t identity = vld1q_u8(kIdentity);
  for (std::size_t r = 0; r < rows; ++r) {
    uint8x16_t base = vld1q_u8(in + 16 * r);
    uint8x16_t acc = identity;
    for (std::uint64_t e = m; e != 0; e >>= 1) {
      if (e & 1) acc = vqtbl1q_u8(base, acc);
      if (e > 1) base = vqtbl1q_u8(base, base);
    }
    vst1q_u8(out + 16 * r, acc);
  }
}

}  // namespace permroots::kernels::detail

#endif
