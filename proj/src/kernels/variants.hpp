#pragma once

#include <cstddef>
#include <cstdint>

namespace permroots::kernels::detail {

void power_batch_scalar(const std::uint8_t* in, std::uint8_t* out, std::size_t rows, std::uint64_t m);

#if defined(PERMROOTS_HAVE_X86_KERNELS)
void power_batch_ssse3(const std::uint8_t* in, std::uint8_t* out, std::size_t rows, std::uint64_t m);
void power_batch_avx2(const std::uint8_t* in, std::uint8_t* out, std::size_t rows, std::uint64_t m);
#endif

#if defined(__aarch64__)
void power_batch_neon(const std::uint8_t* in, std::uint8_t* out, std::size_t rows, std::uint64_t m);
#endif

}  // namespace permroots::kernels::detail
