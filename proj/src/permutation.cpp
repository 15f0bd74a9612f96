#include "permroots/permutation.hpp"

#include <cctype>
#include <charconv>
#include <sstream>
#include <string>

#include "permroots/errors.hpp"
#include "permroots/numtheory.hpp"

namespace permroots {

namespace {

std::vector<std::string_view> split_ws(std::string_view text) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    if (j > i) tokens.push_back(text.substr(i, j - i));
    i = j;
  }
  return tokens;
}

std::uint64_t parse_uint(std::string_view token, std::string_view what) {
  std::uint64_t v = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, v);
  if (ec != std::errc{} || ptr != end || token.empty()) {
    throw FormatError("invalid " + std::string(what) + " '" + std::string(token) + "'");
  }
  return v;
}

}  // namespace

Permutation Permutation::identity(std::size_t n) {
  std::vector<value_type> image(n);
  for (std::size_t i = 0; i < n; ++i) image[i] = static_cast<value_type>(i);
  return Permutation(std::move(image));
}

Permutation Permutation::from_zero_based(std::vector<value_type> image) {
  std::vector<char> seen(image.size(), 0);
  for (value_type v : image) {
    if (v >= image.size() || seen[v]) throw FormatError("not a bijection of [n]");
    seen[v] = 1;
  }
  return Permutation(std::move(image));
}

Permutation Permutation::from_one_line(std::span<const value_type> one_based) {
  std::vector<value_type> image;
  image.reserve(one_based.size());
  for (value_type v : one_based) {
    if (v == 0) throw FormatError("one-line images are 1-based");
    image.push_back(v - 1);
  }
  return from_zero_based(std::move(image));
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<value_type> one_based;
  for (auto token : split_ws(text)) {
    const std::uint64_t v = parse_uint(token, "permutation image");
    if (v > UINT32_MAX) throw FormatError("permutation image out of range");
    one_based.push_back(static_cast<value_type>(v));
  }
  return from_one_line(one_based);
}

Permutation Permutation::compose(const Permutation& other) const {
  if (other.size() != size()) throw std::invalid_argument("compose: size mismatch");
  std::vector<value_type> out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = image_[other.image_[i]];
  return Permutation(std::move(out));
}

Permutation Permutation::inverse() const {
  std::vector<value_type> out(size());
  for (std::size_t i = 0; i < size(); ++i) out[image_[i]] = static_cast<value_type>(i);
  return Permutation(std::move(out));
}

Permutation Permutation::power(std::uint64_t m) const {
  // Walk each cycle once: x at position j maps to the element at j + m (mod length).
  std::vector<value_type> out(size());
  for (const auto& cycle : cycles()) {
    const std::size_t len = cycle.size();
    const std::size_t shift = static_cast<std::size_t>(m % len);
    for (std::size_t j = 0; j < len; ++j) out[cycle[j]] = cycle[(j + shift) % len];
  }
  return Permutation(std::move(out));
}

Permutation Permutation::conjugate_by(const Permutation& rho) const {
  return rho.compose(*this).compose(rho.inverse());
}

std::vector<std::vector<Permutation::value_type>> Permutation::cycles() const {
  std::vector<std::vector<value_type>> out;
  std::vector<char> seen(size(), 0);
  for (std::size_t start = 0; start < size(); ++start) {
    if (seen[start]) continue;
    std::vector<value_type> cycle;
    for (value_type x = static_cast<value_type>(start); !seen[x]; x = image_[x]) {
      seen[x] = 1;
      cycle.push_back(x);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::string Permutation::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(image_[i] + 1);
  }
  return s;
}

std::string Permutation::to_cycle_string() const {
  if (size() == 0) return "()";
  std::string s;
  for (const auto& cycle : cycles()) {
    s += '(';
    for (std::size_t j = 0; j < cycle.size(); ++j) {
      if (j) s += ' ';
      s += std::to_string(cycle[j] + 1);
    }
    s += ')';
  }
  return s;
}

CycleType CycleType::from_counts(std::vector<std::uint64_t> counts) {
  std::uint64_t n = 0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    n = checked_add(n, checked_mul(i + 1, counts[i]));
  }
  // Every nonzero a_i has i <= n, so only zeros are dropped here.
  counts.resize(n, 0);
  CycleType t;
  t.n_ = n;
  t.counts_ = std::move(counts);
  return t;
}

CycleType CycleType::parse(std::string_view text) {
  std::vector<std::uint64_t> counts;
  std::uint64_t last = 0;
  for (auto token : split_ws(text)) {
    const auto caret = token.find('^');
    const std::uint64_t ell = parse_uint(token.substr(0, caret), "cycle length");
    const std::uint64_t a =
        caret == std::string_view::npos ? 1 : parse_uint(token.substr(caret + 1), "cycle multiplicity");
    if (ell == 0) throw FormatError("cycle lengths must be positive");
    if (a == 0) throw FormatError("cycle multiplicities must be at least 1");
    if (ell == last) throw FormatError("duplicate cycle length " + std::to_string(ell));
    if (ell < last) throw FormatError("cycle lengths must be strictly increasing");
    if (ell > (1u << 20)) throw FormatError("cycle length too large");
    last = ell;
    counts.resize(ell, 0);
    counts[ell - 1] = a;
  }
  return from_counts(std::move(counts));
}

CycleType CycleType::of(const Permutation& sigma) {
  std::vector<std::uint64_t> counts(sigma.size(), 0);
  for (const auto& cycle : sigma.cycles()) ++counts[cycle.size() - 1];
  return from_counts(std::move(counts));
}

std::uint64_t CycleType::count(std::uint64_t ell) const {
  if (ell == 0 || ell > counts_.size()) return 0;
  return counts_[ell - 1];
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> CycleType::parts() const {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (counts_[i] != 0) out.emplace_back(i + 1, counts_[i]);
  }
  return out;
}

Permutation CycleType::representative() const {
  std::vector<Permutation::value_type> image(n_);
  Permutation::value_type next = 0;
  for (const auto& [ell, a] : parts()) {
    for (std::uint64_t c = 0; c < a; ++c) {
      for (std::uint64_t j = 0; j < ell; ++j) {
        image[next + j] = static_cast<Permutation::value_type>(next + (j + 1) % ell);
      }
      next += static_cast<Permutation::value_type>(ell);
    }
  }
  return Permutation::from_zero_based(std::move(image));
}

std::string CycleType::to_string() const {
  std::string s;
  for (const auto& [ell, a] : parts()) {
    if (!s.empty()) s += ' ';
    s += std::to_string(ell) + '^' + std::to_string(a);
  }
  return s;
}

std::vector<CycleType> all_cycle_types(std::uint64_t n) {
  std::vector<CycleType> out;
  std::vector<std::uint64_t> counts(n, 0);
  // Distribute the remaining weight over lengths <= max_len, largest length first.
  auto rec = [&](auto&& self, std::uint64_t remaining, std::uint64_t max_len) -> void {
    if (remaining == 0) {
      out.push_back(CycleType::from_counts(counts));
      return;
    }
    for (std::uint64_t ell = std::min(remaining, max_len); ell >= 1; --ell) {
      for (std::uint64_t a = remaining / ell; a >= 1; --a) {
        counts[ell - 1] = a;
        self(self, remaining - a * ell, ell - 1);
        counts[ell - 1] = 0;
      }
    }
  };
  rec(rec, n, n);
  return out;
}

}  // namespace permroots
