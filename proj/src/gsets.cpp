#include "permroots/gsets.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "permroots/errors.hpp"
#include "permroots/numtheory.hpp"

namespace permroots {

bool GSet::contains(std::uint64_t g) const {
  return std::binary_search(elements.begin(), elements.end(), g);
}

bool in_g_set(std::uint64_t m, std::uint64_t ell, std::uint64_t g) {
  if (g == 0) return false;
  // gcd(g*ell, m) = g forces g | m, so g*ell only overflows for non-members.
  if (m % g != 0) return false;
  return std::gcd(checked_mul(g, ell), m) == g;
}

GSet g_set(std::uint64_t m, std::uint64_t ell) {
  if (m == 0 || ell == 0) throw std::invalid_argument("g_set: m and ell must be positive");
  GSet set{m, ell, std::nullopt, {}};
  for (std::uint64_t d : divisors(m)) {
    if (std::gcd(d, ell) == 1) set.elements.push_back(m / d);
  }
  std::sort(set.elements.begin(), set.elements.end());
  for (std::uint64_t g : set.elements) {
    check_internal(in_g_set(m, ell, g), "g_set: divisor construction produced a non-member");
  }
  return set;
}

GSet g_set_bounded(std::uint64_t m, std::uint64_t ell, std::uint64_t a) {
  GSet set = g_set(m, ell);
  set.bound = a;
  std::erase_if(set.elements, [a](std::uint64_t g) { return g > a; });
  return set;
}

namespace {

void check_associate_vector(std::span<const std::uint64_t> g) {
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i] == 0) throw std::invalid_argument("associate vector entries must be positive");
    if (i > 0 && g[i] <= g[i - 1]) {
      throw std::invalid_argument("associate vector must be strictly increasing");
    }
  }
}

}  // namespace

void for_each_solution(std::span<const std::uint64_t> g, std::uint64_t a,
                       const std::function<bool(const SolutionVector&)>& visit) {
  check_associate_vector(g);
  const std::size_t k = g.size();
  if (k == 0) {
    if (a == 0) visit({});
    return;
  }
  // reachable[i][b]: g[i..k) can represent b exactly. Keeps the search output-sensitive.
  std::vector<std::vector<char>> reachable(k + 1, std::vector<char>(a + 1, 0));
  reachable[k][0] = 1;
  for (std::size_t i = k; i-- > 0;) {
    for (std::uint64_t b = 0; b <= a; ++b) {
      reachable[i][b] = reachable[i + 1][b] || (b >= g[i] && reachable[i][b - g[i]]);
    }
  }
  if (!reachable[0][a]) return;

  SolutionVector eps(k, 0);
  bool stop = false;
  std::function<void(std::size_t, std::uint64_t)> descend = [&](std::size_t i, std::uint64_t rest) {
    if (i + 1 == k) {
      eps[i] = rest / g[i];
      if (!visit(eps)) stop = true;
      eps[i] = 0;
      return;
    }
    for (std::uint64_t e = 0; e * g[i] <= rest && !stop; ++e) {
      if (reachable[i + 1][rest - e * g[i]]) {
        eps[i] = e;
        descend(i + 1, rest - e * g[i]);
      }
    }
    eps[i] = 0;
  };
  descend(0, a);
}

std::vector<SolutionVector> epsilon_set(std::span<const std::uint64_t> g, std::uint64_t a) {
  std::vector<SolutionVector> out;
  for_each_solution(g, a, [&](const SolutionVector& eps) {
    out.push_back(eps);
    return true;
  });
  return out;
}

bool is_solvable(std::uint64_t m, std::uint64_t ell, std::uint64_t a) {
  const bool divisible = a % bracket(ell, m) == 0;
  if (a >= 1) {
    const GSet set = g_set_bounded(m, ell, a);
    bool any = false;
    for_each_solution(set.elements, a, [&](const SolutionVector&) {
      any = true;
      return false;
    });
    check_internal(any == divisible, "is_solvable: divisibility and enumeration disagree");
  }
  return divisible;
}

}  // namespace permroots
