#include "permroots/egf.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "permroots/counting.hpp"
#include "permroots/errors.hpp"
#include "permroots/gsets.hpp"
#include "permroots/numtheory.hpp"
#include "permroots/roots.hpp"

namespace permroots {

namespace {

Monomial power_of_variable(std::uint64_t ell, std::uint64_t exponent) {
  Monomial e(ell, 0);
  e[ell - 1] = static_cast<std::uint32_t>(exponent);
  return e;
}

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
}

}  // namespace

MultiSeries root_count_egf(std::uint64_t m, std::uint64_t n) {
  if (m == 0) throw std::invalid_argument("m must be positive");
  MultiSeries arg(n);
  for (std::uint64_t ell = 1; ell <= n; ++ell) {
    for (std::uint64_t g : g_set(m, ell).elements) {
      if (g * ell > n) break;
      arg.add_term(power_of_variable(ell, g), Rational(ipow(ell, g - 1), g));
    }
  }
  return arg.exp();
}

MultiSeries prime_root_count_egf(std::uint64_t p, std::uint64_t n) {
  require_prime(p);
  MultiSeries arg(n);
  for (std::uint64_t i = 1; i * p <= n; ++i) {
    arg.add_term(power_of_variable(i, p), Rational(ipow(i, p - 1), p));
  }
  for (std::uint64_t j = 1; j <= n; ++j) {
    if (std::gcd(j, p) == 1) arg.add_term(power_of_variable(j, 1), 1);
  }
  return arg.exp();
}

BigInt egf_root_count(const MultiSeries& egf, const CycleType& t) {
  if (t.n() > egf.weight_bound()) {
    throw std::invalid_argument("cycle type weight exceeds the expansion's bound");
  }
  Monomial e;
  BigInt scale = 1;
  for (std::uint64_t a : t.counts()) {
    e.push_back(static_cast<std::uint32_t>(a));
    scale *= factorial(a);
  }
  return as_integer(egf.coefficient(e) * scale, "egf_root_count");
}

BigInt egf_root_count(std::uint64_t m, const CycleType& t) {
  return egf_root_count(root_count_egf(m, t.n()), t);
}

UniSeries powers_egf(std::uint64_t m, std::uint64_t order) {
  if (m == 0) throw std::invalid_argument("m must be positive");
  UniSeries product = UniSeries::one(order);
  for (std::uint64_t ell = 1; ell <= order; ++ell) {
    product = product * exp_q(bracket(ell, m), order).substitute(Rational(1, ell), ell);
  }
  return product;
}

std::vector<BigInt> r_totals(std::uint64_t n, std::uint64_t m) {
  const UniSeries egf = powers_egf(m, n);
  std::vector<BigInt> out;
  for (std::uint64_t k = 0; k <= n; ++k) {
    out.push_back(as_integer(egf[k] * factorial(k), "r_total"));
  }
  return out;
}

BigInt r_total(std::uint64_t n, std::uint64_t m) { return r_totals(n, m).back(); }

BigInt r_total_by_classification(std::uint64_t n, std::uint64_t m) {
  BigInt total = 0;
  for (const auto& t : all_cycle_types(n)) {
    if (has_mth_root(t, m)) total += class_size(t);
  }
  return total;
}

std::vector<Rational> p_m_values(std::uint64_t n, std::uint64_t m) {
  // p_m(k) is the x^k coefficient of the exponential generating function itself.
  return powers_egf(m, n).coefficients();
}

Rational p_m(std::uint64_t n, std::uint64_t m) { return p_m_values(n, m).back(); }

bool PrimePowerReport::passed() const {
  for (const auto& b : blocks) {
    if (!b.equal) return false;
  }
  return true;
}

PrimePowerReport check_prime_power_equalities(std::uint64_t q, std::uint64_t r, std::uint64_t max_j) {
  require_prime(q);
  if (r == 0) throw std::invalid_argument("r must be positive");
  PrimePowerReport report{q, r, checked_pow(q, static_cast<unsigned>(r)), {}};
  const std::uint64_t top = checked_add(checked_mul(max_j, q), q - 1);
  const auto values = p_m_values(top, report.m);
  for (std::uint64_t j = 0; j <= max_j; ++j) {
    ProbabilityBlock block{j, {}, true};
    for (std::uint64_t i = 0; i < q; ++i) block.values.push_back(values[j * q + i]);
    for (const auto& v : block.values) block.equal = block.equal && v == block.values.front();
    report.blocks.push_back(std::move(block));
  }
  return report;
}

UniSeries prime_power_reduced_series(std::uint64_t q, std::uint64_t r, std::uint64_t order) {
  require_prime(q);
  if (r == 0) throw std::invalid_argument("r must be positive");
  const std::uint64_t m = checked_pow(q, static_cast<unsigned>(r));
  UniSeries g = UniSeries::binomial(Rational(1, q), Rational(-1), q, order);
  for (std::uint64_t j = 1; j * q <= order; ++j) {
    g = g * exp_q(m, order).substitute(Rational(1, j * q), j * q);
  }
  return g;
}

PrimePowerStructure check_prime_power_structure(std::uint64_t q, std::uint64_t r, std::uint64_t order) {
  PrimePowerStructure s{prime_power_reduced_series(q, r, order), UniSeries(order)};
  s.h = s.g * UniSeries::geometric(order);
  for (std::uint64_t i = 0; i <= order; ++i) {
    if (i % q != 0 && s.g[i] != 0) s.exponents_divisible = false;
  }
  Rational partial = 0;
  for (std::uint64_t k = 0; k * q <= order; ++k) {
    partial += s.g[k * q];
    for (std::uint64_t i = 0; i < q && k * q + i <= order; ++i) {
      if (s.h[k * q + i] != partial) s.partial_sums_match = false;
    }
  }
  s.matches_powers_egf = s.h == powers_egf(checked_pow(q, static_cast<unsigned>(r)), order);
  return s;
}

}  // namespace permroots
