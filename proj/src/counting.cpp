#include "permroots/counting.hpp"

#include <stdexcept>
#include <string>

#include "permroots/errors.hpp"
#include "permroots/gsets.hpp"

namespace permroots {

BigInt root_count_for_length(std::uint64_t ell, std::uint64_t a, std::uint64_t m) {
  if (ell == 0 || m == 0) throw std::invalid_argument("root_count: ell and m must be positive");
  if (a == 0) return 1;
  const GSet set = g_set_bounded(m, ell, a);
  Rational sum = 0;
  for_each_solution(set.elements, a, [&](const SolutionVector& eps) {
    Rational term = 1;
    for (std::size_t i = 0; i < eps.size(); ++i) {
      const std::uint64_t g = set.elements[i];
      term *= Rational(ipow(ell, (g - 1) * eps[i]), ipow(g, eps[i]) * factorial(eps[i]));
    }
    sum += term;
    return true;
  });
  return as_integer(sum * factorial(a), "root_count for length " + std::to_string(ell));
}

BigInt root_count(const CycleType& t, std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("m must be positive");
  BigInt total = 1;
  for (const auto& [ell, a] : t.parts()) {
    total *= root_count_for_length(ell, a, m);
    if (total == 0) break;
  }
  return total;
}

BigInt homogeneous_count(std::uint64_t ell, std::uint64_t g, std::uint64_t p, std::uint64_t m) {
  if (ell == 0 || m == 0) throw std::invalid_argument("homogeneous_count: ell and m must be positive");
  if (!in_g_set(m, ell, g)) {
    throw std::invalid_argument("homogeneous_count: " + std::to_string(g) + " is not in G_" +
                                std::to_string(m) + "(" + std::to_string(ell) + ")");
  }
  const Rational value(factorial(g * p) * ipow(ell, p * (g - 1)), ipow(g, p) * factorial(p));
  return as_integer(value, "homogeneous_count");
}

BigInt class_size(const CycleType& t) {
  BigInt den = 1;
  for (const auto& [ell, a] : t.parts()) den *= ipow(ell, a) * factorial(a);
  return as_integer(Rational(factorial(t.n()), den), "class_size");
}

}  // namespace permroots
