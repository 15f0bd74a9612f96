#pragma once

#include <cstdint>
#include <vector>

#include "permroots/exact.hpp"
#include "permroots/permutation.hpp"
#include "permroots/series.hpp"

namespace permroots {

/// exp( sum_{ell} sum_{g in G_m(ell)} ell^{g-1}/g * t_ell^g ), truncated at weight n.
/// The coefficient of t^a / prod a_ell! is the number of m-th roots of type a.
MultiSeries root_count_egf(std::uint64_t m, std::uint64_t n);

/// Prime-m specialization: exp( sum_i i^{p-1}/p t_i^p + sum_{gcd(j,p)=1} t_j ).
/// Rejects non-prime p.
MultiSeries prime_root_count_egf(std::uint64_t p, std::uint64_t n);

/// Root count read off the generating function: coefficient of t^a times prod a_ell!.
BigInt egf_root_count(std::uint64_t m, const CycleType& t);
/// Same, reusing an expansion whose weight bound is at least t.n().
BigInt egf_root_count(const MultiSeries& egf, const CycleType& t);

/// Exponential generating function sum r(k, m) x^k / k! for k <= order, as the truncated
/// product over ell = 1..order of exp_{bracket(ell, m)}(x^ell / ell). Factors with
/// ell > order are 1 + O(x^{order+1}) and are skipped.
UniSeries powers_egf(std::uint64_t m, std::uint64_t order);

/// r(n, m): how many n-permutations have an m-th root.
BigInt r_total(std::uint64_t n, std::uint64_t m);
/// r(k, m) for k = 0..n from a single series expansion.
std::vector<BigInt> r_totals(std::uint64_t n, std::uint64_t m);
/// Independent route: sum of class sizes over types passing the existence criterion.
BigInt r_total_by_classification(std::uint64_t n, std::uint64_t m);

/// p_m(n) = r(n, m) / n!.
Rational p_m(std::uint64_t n, std::uint64_t m);
std::vector<Rational> p_m_values(std::uint64_t n, std::uint64_t m);

struct ProbabilityBlock {
  std::uint64_t j;                 // values at n = j*q .. j*q + q - 1
  std::vector<Rational> values;
  bool equal;
};

struct PrimePowerReport {
  std::uint64_t q;
  std::uint64_t r;
  std::uint64_t m;
  std::vector<ProbabilityBlock> blocks;

  bool passed() const;
};

/// For m = q^r, checks p_m(jq) = p_m(jq+1) = ... = p_m(jq+q-1) for j = 0..max_j.
PrimePowerReport check_prime_power_equalities(std::uint64_t q, std::uint64_t r, std::uint64_t max_j);

/// G(x) = (1 - x^q)^{1/q} * prod_{j >= 1} exp_m(x^{jq} / (jq)) for m = q^r, truncated.
UniSeries prime_power_reduced_series(std::uint64_t q, std::uint64_t r, std::uint64_t order);

struct PrimePowerStructure {
  UniSeries g;
  UniSeries h;                     // g / (1 - x)
  bool exponents_divisible = true; // g has nonzero terms only at multiples of q
  bool partial_sums_match = true;  // h_{kq+i} = b_0 + ... + b_k for i < q
  bool matches_powers_egf = true;  // h equals powers_egf(m, order)

  bool passed() const { return exponents_divisible && partial_sums_match && matches_powers_egf; }
};

PrimePowerStructure check_prime_power_structure(std::uint64_t q, std::uint64_t r, std::uint64_t order);

}  // namespace permroots
