#include "permroots/numtheory.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace permroots {

namespace {

void require_positive(std::uint64_t v, const char* name) {
  if (v == 0) throw std::invalid_argument(std::string(name) + " must be positive");
}

}  // namespace

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer multiplication overflow");
  return r;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer addition overflow");
  return r;
}

std::uint64_t checked_pow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

Factorization factorize(std::uint64_t n) {
  require_positive(n, "n");
  Factorization out;
  for (std::uint64_t d = 2; d <= n / d; d += (d == 2 ? 1 : 2)) {
    if (n % d != 0) continue;
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.push_back({d, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

unsigned nu_p(std::uint64_t n, std::uint64_t p) {
  require_positive(n, "n");
  if (!is_prime(p)) throw std::invalid_argument("nu_p: " + std::to_string(p) + " is not prime");
  unsigned e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  return e;
}

std::uint64_t bracket(std::uint64_t ell, std::uint64_t m) {
  require_positive(ell, "ell");
  require_positive(m, "m");
  std::uint64_t result = 1;
  for (const auto& [p, e] : factorize(ell)) {
    (void)e;
    result = checked_mul(result, checked_pow(p, nu_p(m, p)));
  }
  return result;
}

std::vector<std::uint64_t> divisors(std::uint64_t m) {
  require_positive(m, "m");
  std::vector<std::uint64_t> out{1};
  for (const auto& [p, e] : factorize(m)) {
    const std::size_t base = out.size();
    std::uint64_t pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace permroots
