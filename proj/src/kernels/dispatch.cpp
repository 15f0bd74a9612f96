#include <cstdlib>
#include <stdexcept>
#include <string>

#include "permroots/kernels/power_kernels.hpp"
#include "variants.hpp"

namespace permroots::kernels {

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::ssse3: return "ssse3";
    case Isa::avx2: return "avx2";
    case Isa::neon: return "neon";
  }
  return "unknown";
}

bool is_supported(Isa isa) {
  switch (isa) {
    case Isa::scalar: return true;
#if defined(PERMROOTS_HAVE_X86_KERNELS)
    case Isa::ssse3: return __builtin_cpu_supports("ssse3");
    case Isa::avx2: return __builtin_cpu_supports("avx2");
#endif
#if defined(__aarch64__)
    case Isa::neon: return true;
#endif
    default: return false;
  }
}

std::vector<Isa> supported_isas() {
  std::vector<Isa> out;
  for (Isa isa : {Isa::scalar, Isa::ssse3, Isa::avx2, Isa::neon}) {
    if (is_supported(isa)) out.push_back(isa);
  }
  return out;
}

namespace {

Isa detect() {
  if (const char* forced = std::getenv("PERMROOTS_FORCE_ISA")) {
    for (Isa isa : supported_isas()) {
      if (isa_name(isa) == forced) return isa;
    }
  }
  for (Isa isa : {Isa::avx2, Isa::neon, Isa::ssse3}) {
    if (is_supported(isa)) return isa;
  }
  return Isa::scalar;
}

}  // namespace

Isa selected_isa() {
  static const Isa isa = detect();
  return isa;
}

PowerBatchFn power_batch_fn(Isa isa) {
  if (!is_supported(isa)) {
    throw std::invalid_argument("kernel variant '" + std::string(isa_name(isa)) + "' is not available");
  }
  switch (isa) {
#if defined(PERMROOTS_HAVE_X86_KERNELS)
    case Isa::ssse3: return detail::power_batch_ssse3;
    case Isa::avx2: return detail::power_batch_avx2;
#endif
#if defined(__aarch64__)
    case Isa::neon: return detail::power_batch_neon;
#endif
    default: return detail::power_batch_scalar;
  }
}

void power_batch(std::span<const std::uint8_t> in, std::span<std::uint8_t> out, std::uint64_t m, Isa isa) {
  if (in.size() != out.size() || in.size() % kRowBytes != 0) {
    throw std::invalid_argument("power_batch: buffers must be equal multiples of 16 bytes");
  }
  for (std::uint8_t b : in) {
    if (b >= kRowBytes) throw std::invalid_argument("power_batch: row entry out of range");
  }
  power_batch_fn(isa)(in.data(), out.data(), in.size() / kRowBytes, m);
}

}  // namespace permroots::kernels
