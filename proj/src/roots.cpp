#include "permroots/roots.hpp"

#include <algorithm>
#include <array>
#include <cstring>
#include <map>
#include <numeric>
#include <string>

#include "permroots/errors.hpp"
#include "permroots/gsets.hpp"
#include "permroots/kernels/power_kernels.hpp"
#include "permroots/numtheory.hpp"

namespace permroots {

bool has_mth_root(const CycleType& t, std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("m must be positive");
  for (const auto& [ell, a] : t.parts()) {
    if (a % bracket(ell, m) != 0) return false;
  }
  return true;
}

namespace {

using Point = Permutation::value_type;
using Cycle = std::vector<Point>;

struct LengthGroup {
  std::uint64_t ell;
  std::vector<Cycle> cycles;  // ordered by smallest point
  std::vector<std::uint64_t> g;
};

struct RootState {
  std::uint64_t m;
  std::vector<LengthGroup> groups;
  std::vector<Point> tau;
  std::vector<char> used;  // per cycle of the current group
  std::vector<std::uint64_t> remaining;  // bundles still to form, per associate-vector slot
};

struct Done {};

Generator<Done> fill_group(RootState& st, std::size_t gi);

// Writes the (g*ell)-cycle built from `members` (anchor first) with the given rotations.
void place_bundle(RootState& st, const LengthGroup& group, const std::vector<std::size_t>& members,
                  const std::vector<std::uint64_t>& offsets) {
  const std::uint64_t ell = group.ell;
  const std::uint64_t g = members.size();
  const std::uint64_t len = g * ell;
  const std::uint64_t step = st.m % len;
  std::vector<Point> d(len);
  for (std::uint64_t j = 0; j < g; ++j) {
    const Cycle& x = group.cycles[members[j]];
    std::uint64_t pos = j;
    for (std::uint64_t k = 0; k < ell; ++k) {
      d[pos] = x[(offsets[j] + k) % ell];
      pos = (pos + step) % len;
    }
  }
  for (std::uint64_t i = 0; i < len; ++i) st.tau[d[i]] = d[(i + 1) % len];
}

// Forms the next bundle around the smallest unused cycle, then recurses.
Generator<Done> fill_bundles(RootState& st, std::size_t gi) {
  const LengthGroup& group = st.groups[gi];
  const auto anchor_it = std::find(st.used.begin(), st.used.end(), 0);
  if (anchor_it == st.used.end()) {
    std::vector<char> saved_used;
    std::vector<std::uint64_t> saved_remaining;
    saved_used.swap(st.used);
    saved_remaining.swap(st.remaining);
    for (const auto& done : fill_group(st, gi + 1)) co_yield done;
    st.used.swap(saved_used);
    st.remaining.swap(saved_remaining);
    co_return;
  }
  const std::size_t anchor = static_cast<std::size_t>(anchor_it - st.used.begin());
  std::vector<std::size_t> free;
  for (std::size_t c = anchor + 1; c < st.used.size(); ++c) {
    if (!st.used[c]) free.push_back(c);
  }

  for (std::size_t slot = 0; slot < group.g.size(); ++slot) {
    if (st.remaining[slot] == 0) continue;
    const std::size_t partners = group.g[slot] - 1;
    if (partners > free.size()) continue;
    --st.remaining[slot];
    st.used[anchor] = 1;

    // Lexicographic combinations of `partners` cycles out of `free`.
    std::vector<std::size_t> pick(partners);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      std::vector<std::size_t> chosen;
      for (std::size_t p : pick) chosen.push_back(free[p]);
      for (std::size_t c : chosen) st.used[c] = 1;

      std::vector<std::size_t> order = chosen;  // sorted; next_permutation walks all orders
      do {
        std::vector<std::size_t> members{anchor};
        members.insert(members.end(), order.begin(), order.end());
        std::vector<std::uint64_t> offsets(members.size(), 0);
        while (true) {
          place_bundle(st, group, members, offsets);
          for (const auto& done : fill_bundles(st, gi)) co_yield done;
          // Odometer over rotations of the non-anchor members.
          std::size_t j = offsets.size();
          while (j > 1 && ++offsets[j - 1] == group.ell) offsets[--j] = 0;
          if (j <= 1) break;
        }
      } while (std::next_permutation(order.begin(), order.end()));

      for (std::size_t c : chosen) st.used[c] = 0;
      // Advance the combination.
      std::size_t i = partners;
      while (i > 0 && pick[i - 1] == free.size() - partners + (i - 1)) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t t = i; t < partners; ++t) pick[t] = pick[t - 1] + 1;
    }

    st.used[anchor] = 0;
    ++st.remaining[slot];
  }
}

Generator<Done> fill_group(RootState& st, std::size_t gi) {
  if (gi == st.groups.size()) {
    co_yield Done{};
    co_return;
  }
  const LengthGroup& group = st.groups[gi];
  for (const auto& eps : epsilon_set(group.g, group.cycles.size())) {
    st.used.assign(group.cycles.size(), 0);
    st.remaining = eps;
    for (const auto& done : fill_bundles(st, gi)) co_yield done;
  }
}

}  // namespace

Generator<Permutation> enumerate_roots(Permutation sigma, std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("m must be positive");
  if (!has_mth_root(CycleType::of(sigma), m)) co_return;

  RootState st;
  st.m = m;
  st.tau.assign(sigma.size(), 0);
  std::map<std::uint64_t, std::vector<Cycle>> by_length;
  for (auto& cycle : sigma.cycles()) by_length[cycle.size()].push_back(std::move(cycle));
  for (auto& [ell, cycles] : by_length) {
    auto g = g_set_bounded(m, ell, cycles.size()).elements;
    st.groups.push_back({ell, std::move(cycles), std::move(g)});
  }

  for (const auto& done : fill_group(st, 0)) {
    (void)done;
    Permutation tau = Permutation::from_zero_based(st.tau);
    check_internal(tau.power(m) == sigma,
                   "enumerate_roots: constructed " + tau.to_string() + " is not an m-th root");
    co_yield tau;
  }
}

std::uint64_t count_enumerated_roots(const Permutation& sigma, std::uint64_t m) {
  std::uint64_t count = 0;
  for (const auto& tau : enumerate_roots(sigma, m)) {
    (void)tau;
    ++count;
  }
  return count;
}

std::vector<Permutation> brute_force_roots(const Permutation& sigma, std::uint64_t m,
                                           const OracleConfig& config) {
  if (m == 0) throw std::invalid_argument("m must be positive");
  const std::size_t bound = std::min(config.max_n, OracleConfig::kHardMax);
  const std::size_t n = sigma.size();
  if (n > bound) {
    throw SizeCapError("brute-force oracle refuses n = " + std::to_string(n) + " (bound " +
                       std::to_string(bound) + ")");
  }

  constexpr std::size_t kBatch = 256;
  using Row = std::array<std::uint8_t, kernels::kRowBytes>;
  Row target;
  for (std::size_t i = 0; i < target.size(); ++i) {
    target[i] = static_cast<std::uint8_t>(i < n ? sigma[i] : i);
  }
  const auto kernel = kernels::power_batch_fn(kernels::selected_isa());

  std::vector<Row> in(kBatch), out(kBatch);
  std::vector<Permutation> roots;
  auto flush = [&](std::size_t rows) {
    kernel(in.front().data(), out.front().data(), rows, m);
    for (std::size_t r = 0; r < rows; ++r) {
      if (out[r] == target) {
        std::vector<Point> image(in[r].begin(), in[r].begin() + n);
        roots.push_back(Permutation::from_zero_based(std::move(image)));
      }
    }
  };

  Row candidate;
  for (std::size_t i = 0; i < candidate.size(); ++i) candidate[i] = static_cast<std::uint8_t>(i);
  std::size_t rows = 0;
  do {
    in[rows++] = candidate;
    if (rows == kBatch) {
      flush(rows);
      rows = 0;
    }
  } while (std::next_permutation(candidate.begin(), candidate.begin() + n));
  if (rows) flush(rows);
  return roots;
}

}  // namespace permroots
