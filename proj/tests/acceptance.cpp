// Acceptance suite: one PASS/FAIL line per criterion, exact comparisons throughout.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "permroots/counting.hpp"
#include "permroots/egf.hpp"
#include "permroots/gsets.hpp"
#include "permroots/numtheory.hpp"
#include "permroots/roots.hpp"

using namespace permroots;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& what) {
    if (ok) detail = what;
    ok = false;
  }
};

template <typename F>
void for_each_permutation(std::size_t n, F&& f) {
  std::vector<Permutation::value_type> image(n);
  std::iota(image.begin(), image.end(), 0u);
  do {
    f(Permutation::from_zero_based(image));
  } while (std::next_permutation(image.begin(), image.end()));
}

Outcome oracle_equivalence() {
  Outcome o;
  std::uint64_t cases = 0;
  for (std::size_t n = 0; n <= 6; ++n) {
    for_each_permutation(n, [&](const Permutation& sigma) {
      const CycleType t = CycleType::of(sigma);
      for (std::uint64_t m : {2u, 3u, 4u, 5u, 6u, 8u, 9u, 12u}) {
        ++cases;
        const auto brute = brute_force_roots(sigma, m);
        std::vector<Permutation> built;
        for (const auto& tau : enumerate_roots(sigma, m)) built.push_back(tau);
        std::sort(built.begin(), built.end());
        if (root_count(t, m) != brute.size() || built != brute) {
          o.fail("sigma=" + sigma.to_string() + " m=" + std::to_string(m));
        }
      }
    });
  }
  if (o.ok) o.detail = std::to_string(cases) + " (sigma, m) cases";
  return o;
}

Outcome egf_vs_closed_form() {
  Outcome o;
  std::uint64_t cases = 0;
  for (std::uint64_t m : {2u, 3u, 4u, 6u, 8u}) {
    const auto egf = root_count_egf(m, 12);
    for (std::uint64_t n = 0; n <= 12; ++n) {
      for (const auto& t : all_cycle_types(n)) {
        ++cases;
        if (egf_root_count(egf, t) != root_count(t, m)) o.fail("type " + t.to_string() + " m=" + std::to_string(m));
      }
    }
  }
  if (o.ok) o.detail = std::to_string(cases) + " (type, m) cases";
  return o;
}

Outcome prime_specialization() {
  Outcome o;
  for (std::uint64_t p : {2u, 3u, 5u}) {
    const auto general = root_count_egf(p, 12);
    const auto special = prime_root_count_egf(p, 12);
    if (!(general == special)) o.fail("p=" + std::to_string(p));
    if (o.ok) o.detail += "p=" + std::to_string(p) + ": " + std::to_string(general.size()) + " monomials; ";
  }
  return o;
}

Outcome product_egf() {
  Outcome o;
  if (r_totals(5, 2) != std::vector<BigInt>{1, 1, 1, 3, 12, 60}) o.fail("anchor r(n,2), n=0..5");
  for (std::uint64_t m : {2u, 3u, 4u, 6u, 8u, 9u}) {
    const auto series = r_totals(20, m);
    for (std::uint64_t n = 0; n <= 20; ++n) {
      if (series[n] != r_total_by_classification(n, m)) {
        o.fail("classification n=" + std::to_string(n) + " m=" + std::to_string(m));
      }
    }
    for (std::size_t n = 0; n <= 6; ++n) {
      std::uint64_t scanned = 0;
      for_each_permutation(n, [&](const Permutation& sigma) { scanned += !brute_force_roots(sigma, m).empty(); });
      if (series[n] != scanned) o.fail("oracle n=" + std::to_string(n) + " m=" + std::to_string(m));
    }
  }
  if (o.ok) o.detail = "n<=20 series=classification, n<=6 series=scan, anchors 1,1,1,3,12,60";
  return o;
}

Outcome prime_power_probabilities() {
  Outcome o;
  for (auto [q, r] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{
           {2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {5, 1}}) {
    const std::string tag = "q=" + std::to_string(q) + " r=" + std::to_string(r);
    const auto report = check_prime_power_equalities(q, r, 30 / q);
    if (!report.passed()) o.fail("equalities " + tag);
    if (report.blocks.back().j * q + q - 1 < 30) o.fail("coverage " + tag);
    const auto s = check_prime_power_structure(q, r, 24);
    if (!s.exponents_divisible) o.fail("G exponents " + tag);
    if (!s.partial_sums_match) o.fail("partial sums " + tag);
    if (!s.matches_powers_egf) o.fail("G/(1-x) vs product EGF " + tag);
  }
  if (o.ok) o.detail = "6 (q,r) pairs, n<=30, structure at order 24";
  return o;
}

Outcome global_identity() {
  Outcome o;
  for (std::uint64_t m : {2u, 3u, 4u, 6u}) {
    for (std::uint64_t n = 0; n <= 12; ++n) {
      BigInt sum = 0;
      for (const auto& t : all_cycle_types(n)) sum += root_count(t, m) * class_size(t);
      if (sum != factorial(n)) o.fail("n=" + std::to_string(n) + " m=" + std::to_string(m));
    }
  }
  if (o.ok) o.detail = "sum of root counts over S_n equals n!";
  return o;
}

Outcome g_set_laws() {
  Outcome o;
  for (std::uint64_t m = 1; m <= 60; ++m) {
    for (std::uint64_t ell = 1; ell <= 60; ++ell) {
      const std::string tag = "m=" + std::to_string(m) + " ell=" + std::to_string(ell);
      const GSet set = g_set(m, ell);
      const auto b = bracket(ell, m);
      const bool coprime = std::gcd(ell, m) == 1;
      if (set.elements != oracle::g_set_scan(m, ell, m)) o.fail("construction " + tag);
      if (set.elements.front() != b) o.fail("minimum " + tag);
      const auto g = std::accumulate(set.elements.begin(), set.elements.end(), std::uint64_t{0},
                                     [](auto x, auto y) { return std::gcd(x, y); });
      if (g != b) o.fail("gcd " + tag);
      if (coprime && set.elements != divisors(m)) o.fail("divisor set " + tag);
      for (std::uint64_t a = 0; a <= 60; ++a) {
        const GSet bounded = g_set_bounded(m, ell, a);
        if (bounded.elements != oracle::g_set_scan(m, ell, std::min(a, m))) o.fail("bounded " + tag);
        const bool enumerable = oracle::representable(bounded.elements, a);
        if (is_solvable(m, ell, a) != (a % b == 0) || enumerable != (a % b == 0)) {
          o.fail("solvability " + tag + " a=" + std::to_string(a));
        }
        if (a >= 1 && bounded.contains(1) != coprime) o.fail("1-membership " + tag);
      }
    }
  }
  if (o.ok) o.detail = "m, ell, a <= 60";
  return o;
}

Outcome telephone_numbers() {
  Outcome o;
  const auto t = oracle::telephone(25);
  for (std::uint64_t n = 0; n <= 25; ++n) {
    const BigInt expected = t[n];
    std::vector<std::uint64_t> counts{n};
    if (root_count(CycleType::from_counts(counts), 2) != expected) o.fail("n=" + std::to_string(n));
  }
  if (o.ok) o.detail = "t(n) for n<=25";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double budget_seconds;
    std::function<Outcome()> check;
  };
  const std::vector<Criterion> criteria{
      {"1 oracle equivalence (S_n, n<=6)", 120, oracle_equivalence},
      {"2 generating function = closed form (weight<=12)", 60, egf_vs_closed_form},
      {"3 prime specialization", 30, prime_specialization},
      {"4 product EGF r(n,m)", 60, product_egf},
      {"5 prime-power probability blocks", 60, prime_power_probabilities},
      {"6 global identity", 60, global_identity},
      {"7 G-set laws", 30, g_set_laws},
      {"8 telephone numbers", 30, telephone_numbers},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.budget_seconds) o.fail("exceeded " + std::to_string(c.budget_seconds) + "s budget");
    failures += !o.ok;
    std::printf("%s  criterion %s  [%.2fs]  %s\n", o.ok ? "PASS" : "FAIL", c.name, secs, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
