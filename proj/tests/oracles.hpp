#pragma once

// Independent reference implementations used only by tests. Nothing here calls the
// library routines it is meant to check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <vector>

namespace oracle {

using Vec = std::vector<std::uint64_t>;
using Perm = std::vector<std::uint32_t>;  // 0-based one-line

inline std::vector<std::pair<std::uint64_t, unsigned>> trial_division(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t d = 2; d <= n; ++d) {
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e) out.emplace_back(d, e);
  }
  return out;
}

inline unsigned repeated_division(std::uint64_t n, std::uint64_t p) {
  unsigned e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  return e;
}

inline bool naive_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d < n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// ((ell, m)) straight from its definition.
inline std::uint64_t bracket_by_definition(std::uint64_t ell, std::uint64_t m) {
  std::uint64_t r = 1;
  for (std::uint64_t p = 2; p <= ell; ++p) {
    if (ell % p != 0 || !naive_prime(p)) continue;
    for (unsigned i = 0; i < repeated_division(m, p); ++i) r *= p;
  }
  return r;
}

inline Vec divisor_scan(std::uint64_t m) {
  Vec out;
  for (std::uint64_t d = 1; d <= m; ++d)
    if (m % d == 0) out.push_back(d);
  return out;
}

/// { g <= limit : gcd(g*ell, m) = g } by scanning.
inline Vec g_set_scan(std::uint64_t m, std::uint64_t ell, std::uint64_t limit) {
  Vec out;
  for (std::uint64_t g = 1; g <= limit; ++g)
    if (std::gcd(g * ell, m) == g) out.push_back(g);
  return out;
}

/// Every eps in the box eps_i <= a / g_i, filtered by g . eps = a; lexicographic.
inline std::vector<Vec> box_solutions(const Vec& g, std::uint64_t a) {
  std::vector<Vec> out;
  Vec eps(g.size(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == g.size()) {
      std::uint64_t s = 0;
      for (std::size_t k = 0; k < g.size(); ++k) s += g[k] * eps[k];
      if (s == a) out.push_back(eps);
      return;
    }
    for (std::uint64_t e = 0; e <= a / g[i]; ++e) {
      eps[i] = e;
      rec(i + 1);
    }
    eps[i] = 0;
  };
  rec(0);
  return out;
}

/// Number of solutions by memoized recursion on (index, remaining).
inline std::uint64_t count_solutions(const Vec& g, std::uint64_t a) {
  std::map<std::pair<std::size_t, std::uint64_t>, std::uint64_t> memo;
  std::function<std::uint64_t(std::size_t, std::uint64_t)> f = [&](std::size_t i, std::uint64_t rest) {
    if (i == g.size()) return std::uint64_t{rest == 0};
    auto key = std::make_pair(i, rest);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::uint64_t total = 0;
    for (std::uint64_t used = 0; used <= rest; used += g[i]) total += f(i + 1, rest - used);
    return memo[key] = total;
  };
  return f(0, a);
}

inline Perm identity(std::size_t n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0u);
  return p;
}

/// tau applied m times, one composition at a time.
inline Perm naive_power(const Perm& tau, std::uint64_t m) {
  Perm r = identity(tau.size());
  for (std::uint64_t k = 0; k < m; ++k) {
    Perm next(tau.size());
    for (std::size_t i = 0; i < tau.size(); ++i) next[i] = tau[r[i]];
    r = next;
  }
  return r;
}

inline Vec cycle_counts(const Perm& p) {
  Vec counts(p.size(), 0);
  std::vector<char> seen(p.size(), 0);
  for (std::size_t s = 0; s < p.size(); ++s) {
    if (seen[s]) continue;
    std::size_t len = 0;
    for (std::size_t x = s; !seen[x]; x = p[x]) {
      seen[x] = 1;
      ++len;
    }
    ++counts[len - 1];
  }
  return counts;
}

/// All tau in S_n with tau^m = sigma, scanning S_n with naive powering; lexicographic.
inline std::vector<Perm> naive_roots(const Perm& sigma, std::uint64_t m) {
  std::vector<Perm> out;
  Perm tau = identity(sigma.size());
  do {
    if (naive_power(tau, m) == sigma) out.push_back(tau);
  } while (std::next_permutation(tau.begin(), tau.end()));
  return out;
}

/// Involutions plus identity: t(n) = t(n-1) + (n-1) t(n-2).
inline std::vector<std::uint64_t> telephone(std::size_t upto) {
  std::vector<std::uint64_t> t{1, 1};
  for (std::size_t n = 2; n <= upto; ++n) t.push_back(t[n - 1] + (n - 1) * t[n - 2]);
  t.resize(upto + 1);
  return t;
}

}  // namespace oracle

namespace oracle {

/// Whether some non-negative combination of g hits a exactly (boolean coin-change table).
inline bool representable(const Vec& g, std::uint64_t a) {
  std::vector<char> can(a + 1, 0);
  can[0] = 1;
  for (std::uint64_t coin : g) {
    for (std::uint64_t b = coin; b <= a; ++b) can[b] = can[b] || can[b - coin];
  }
  return can[a];
}

}  // namespace oracle
