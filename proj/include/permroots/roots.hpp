#pragma once

#include <cstdint>
#include <vector>

#include "permroots/generator.hpp"
#include "permroots/permutation.hpp"

namespace permroots {

/// Existence criterion: sigma of type t has an m-th root iff bracket(ell, m) divides a_ell
/// for every cycle length ell present.
bool has_mth_root(const CycleType& t, std::uint64_t m);

/// Lazily constructs every tau with tau^m = sigma, each exactly once.
///
/// Cycles of sigma are handled one length at a time. For length ell with a_ell cycles and
/// each eps in E_m(ell, a_ell), the ell-cycles are split into unordered bundles (eps_i
/// bundles of g_i cycles). A bundle X_0, ..., X_{g-1} becomes one (g*ell)-cycle
/// d_0 ... d_{g*ell-1} with d_{(j + k*m) mod g*ell} = X_j[(r_j + k) mod ell]: X_0 is the
/// bundle member holding the smallest point (anchored, r_0 = 0), the remaining members are
/// ordered in all (g-1)! ways and rotated by r_j in [0, ell). Stepping such a cycle by m
/// walks each X_j in sigma's order, because gcd(g*ell, m) = g.
///
/// Every root is re-powered before it is yielded; a mismatch throws InternalError.
/// The yielded reference is valid until the generator is advanced.
Generator<Permutation> enumerate_roots(Permutation sigma, std::uint64_t m);

/// Counts roots by draining enumerate_roots.
std::uint64_t count_enumerated_roots(const Permutation& sigma, std::uint64_t m);

struct OracleConfig {
  static constexpr std::size_t kHardMax = 16;
  std::size_t max_n = 8;
};

/// Exhaustive scan of S_n for tau with tau^m = sigma, in lexicographic one-line order.
/// Throws SizeCapError when n exceeds the configured bound.
std::vector<Permutation> brute_force_roots(const Permutation& sigma, std::uint64_t m,
                                           const OracleConfig& config = {});

}  // namespace permroots
