#include <array>
#include <cstring>

#include "variants.hpp"

namespace permroots::kernels::detail {

namespace {

using Row = std::array<std::uint8_t, 16>;

inline Row compose(const Row& a, const Row& b) {
  Row r;
  for (std::size_t i = 0; i < 16; ++i) r[i] = a[b[i] & 15];
  return r;
}

}  // namespace

void power_batch_scalar(const std::uint8_t* in, std::uint8_t* out, std::size_t rows, std::uint64_t m) {
  for (std::size_t r = 0; r < rows; ++r) {
    Row base;
    std::memcpy(base.data(), in + 16 * r, 16);
    Row acc;
    for (std::uint8_t i = 0; i < 16; ++i) acc[i] = i;
    for (std::uint64_t e = m; e != 0; e >>= 1) {
      if (e & 1) acc = compose(base, acc);
      if (e > 1) base = compose(base, base);
    }
    std::memcpy(out + 16 * r, acc.data(), 16);
  }
}

}  // namespace permroots::kernels::detail
