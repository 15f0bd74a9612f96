#pragma once

#include <cstdint>
#include <vector>

namespace permroots {

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization, primes strictly increasing. Empty for 1.
using Factorization = std::vector<PrimePower>;

// Overflow-checked word arithmetic; throws std::overflow_error.
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_add(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_pow(std::uint64_t base, unsigned exp);

bool is_prime(std::uint64_t n);

/// Trial-division factorization. Rejects n = 0.
Factorization factorize(std::uint64_t n);

/// Exponent of the prime p in n. Rejects n = 0 and non-prime p.
unsigned nu_p(std::uint64_t n, std::uint64_t p);

/// ((ell, m)): product over primes p dividing ell of p^{nu_p(m)}.
/// Always divides m, and equals 1 exactly when gcd(ell, m) = 1.
std::uint64_t bracket(std::uint64_t ell, std::uint64_t m);

/// Positive divisors of m, strictly increasing.
std::vector<std::uint64_t> divisors(std::uint64_t m);

}  // namespace permroots
