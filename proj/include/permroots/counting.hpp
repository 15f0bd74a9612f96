#pragma once

#include <cstdint>

#include "permroots/exact.hpp"
#include "permroots/permutation.hpp"

namespace permroots {

/// Number of m-th roots of any permutation of type t:
///   prod over ell with a_ell != 0 of
///     a_ell! * sum over eps in E_m(ell, a_ell) of prod_i ell^{(g_i-1) eps_i} / (g_i^{eps_i} eps_i!).
/// Evaluated in exact rationals; each per-length factor is asserted integral.
BigInt root_count(const CycleType& t, std::uint64_t m);

/// The per-length factor of root_count for a_ell cycles of length ell.
BigInt root_count_for_length(std::uint64_t ell, std::uint64_t a, std::uint64_t m);

/// Roots of type (g*ell)^p of a permutation of type ell^{g*p}: (gp)! ell^{p(g-1)} / (g^p p!).
/// Rejects g outside G_m(ell).
BigInt homogeneous_count(std::uint64_t ell, std::uint64_t g, std::uint64_t p, std::uint64_t m);

/// Size of the conjugacy class of type t: n! / prod ell^{a_ell} a_ell!.
BigInt class_size(const CycleType& t);

}  // namespace permroots
