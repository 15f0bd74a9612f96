#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace permroots {

/// A bijection of [n] in one-line notation. Stored 0-based; text I/O is 1-based.
class Permutation {
 public:
  using value_type = std::uint32_t;

  Permutation() = default;

  static Permutation identity(std::size_t n);
  /// Validates that `image` (0-based) is a bijection of [0, n).
  static Permutation from_zero_based(std::vector<value_type> image);
  /// 1-based images as written in one-line notation.
  static Permutation from_one_line(std::span<const value_type> one_based);
  /// Parses "2 3 1". Throws FormatError.
  static Permutation parse(std::string_view text);

  std::size_t size() const { return image_.size(); }
  value_type operator[](std::size_t i) const { return image_[i]; }
  std::span<const value_type> image() const { return image_; }

  /// (this * other)(x) = this(other(x)).
  Permutation compose(const Permutation& other) const;
  Permutation inverse() const;
  Permutation power(std::uint64_t m) const;
  /// rho * this * rho^{-1}.
  Permutation conjugate_by(const Permutation& rho) const;

  /// Cycles, each starting at its smallest element, ordered by that element.
  std::vector<std::vector<value_type>> cycles() const;

  /// "2 3 1"
  std::string to_string() const;
  /// "(1 2 3)(4)" with fixed points included.
  std::string to_cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  explicit Permutation(std::vector<value_type> image) : image_(std::move(image)) {}
  std::vector<value_type> image_;
};

/// Cycle multiplicities (a_1, ..., a_n) of an n-permutation.
class CycleType {
 public:
  CycleType() = default;

  /// `counts[i]` is the number of (i+1)-cycles. Shorter vectors are allowed; n is
  /// the total weight and the stored vector is padded to length n.
  static CycleType from_counts(std::vector<std::uint64_t> counts);
  /// Parses "1^2 3", lengths strictly increasing, multiplicities >= 1. Throws FormatError.
  static CycleType parse(std::string_view text);
  static CycleType of(const Permutation& sigma);

  std::uint64_t n() const { return n_; }
  /// a_ell for ell >= 1; zero beyond n.
  std::uint64_t count(std::uint64_t ell) const;
  std::span<const std::uint64_t> counts() const { return counts_; }

  /// Nonzero (ell, a_ell) pairs, ell increasing.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> parts() const;

  /// A permutation of this type with cycles on consecutive points.
  Permutation representative() const;

  /// "1^2 3^1"; zero-multiplicity terms omitted, empty for n = 0.
  std::string to_string() const;

  friend bool operator==(const CycleType&, const CycleType&) = default;

 private:
  std::uint64_t n_ = 0;
  std::vector<std::uint64_t> counts_;
};

inline CycleType cycle_type(const Permutation& sigma) { return CycleType::of(sigma); }

/// All cycle types of weight n (integer partitions), in reverse-lexicographic partition order.
std::vector<CycleType> all_cycle_types(std::uint64_t n);

}  // namespace permroots
