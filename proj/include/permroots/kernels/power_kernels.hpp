#pragma once

// Batched powering of small permutations stored as byte tables.
//
// Each permutation occupies one 16-byte row; entry i is the 0-based image of i, and
// rows for n < 16 are padded with fixed points. Composition of byte tables is a
// byte shuffle, so the vector variants reduce to pshufb/tbl per squaring step.
// Every variant must produce output identical to the scalar reference.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace permroots::kernels {

inline constexpr std::size_t kRowBytes = 16;

enum class Isa { scalar, ssse3, avx2, neon };

using PowerBatchFn = void (*)(const std::uint8_t* in, std::uint8_t* out, std::size_t rows,
                              std::uint64_t m);

std::string_view isa_name(Isa isa);

/// Compiled in and supported by the running CPU.
bool is_supported(Isa isa);
std::vector<Isa> supported_isas();

/// Widest supported variant, or the one named by PERMROOTS_FORCE_ISA when set and supported.
Isa selected_isa();

PowerBatchFn power_batch_fn(Isa isa);

/// out[r] = in[r]^m for each 16-byte row. `in` and `out` must have equal size, a multiple of 16.
void power_batch(std::span<const std::uint8_t> in, std::span<std::uint8_t> out, std::uint64_t m,
                 Isa isa = selected_isa());

}  // namespace permroots::kernels
