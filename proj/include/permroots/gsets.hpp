#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace permroots {

/// The fusion multiplicities g with gcd(g * ell, m) = g, optionally capped at `bound`.
/// `elements` is the associate vector: strictly increasing.
struct GSet {
  std::uint64_t m = 1;
  std::uint64_t ell = 1;
  std::optional<std::uint64_t> bound;
  std::vector<std::uint64_t> elements;

  bool contains(std::uint64_t g) const;
  std::size_t size() const { return elements.size(); }
};

/// One non-negative solution eps of g . eps = a, aligned with an associate vector.
using SolutionVector = std::vector<std::uint64_t>;

/// True when gcd(g * ell, m) = g. The defining membership test.
bool in_g_set(std::uint64_t m, std::uint64_t ell, std::uint64_t g);

/// Unbounded set, built as { m/d : d | m, gcd(d, ell) = 1 } and checked against the definition.
GSet g_set(std::uint64_t m, std::uint64_t ell);

/// Elements of g_set(m, ell) that are <= a. Empty for a = 0.
GSet g_set_bounded(std::uint64_t m, std::uint64_t ell, std::uint64_t a);

/// Visits every eps in N_0^k with g . eps = a in lexicographic order. The visitor returns
/// false to stop early. `g` must be strictly increasing and positive.
void for_each_solution(std::span<const std::uint64_t> g, std::uint64_t a,
                       const std::function<bool(const SolutionVector&)>& visit);

/// All solutions of g . eps = a, lexicographic.
std::vector<SolutionVector> epsilon_set(std::span<const std::uint64_t> g, std::uint64_t a);

/// Whether a ell-cycles can be grouped into m-th-root cycles: bracket(ell, m) divides a.
bool is_solvable(std::uint64_t m, std::uint64_t ell, std::uint64_t a);

}  // namespace permroots
