#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "permroots/exact.hpp"

namespace permroots {

/// Dense univariate power series c_0 + c_1 x + ... + c_N x^N over exact rationals.
/// All arithmetic truncates at the order N; operands must share N.
class UniSeries {
 public:
  explicit UniSeries(std::uint64_t order);
  UniSeries(std::uint64_t order, std::vector<Rational> coefficients);

  static UniSeries one(std::uint64_t order);
  /// 1 / (1 - x) = sum x^i.
  static UniSeries geometric(std::uint64_t order);
  /// (1 + c x^step)^alpha via the generalized binomial series.
  static UniSeries binomial(const Rational& alpha, const Rational& c, std::uint64_t step,
                            std::uint64_t order);

  std::uint64_t order() const { return order_; }
  const Rational& operator[](std::uint64_t i) const { return coeffs_.at(i); }
  Rational& operator[](std::uint64_t i) { return coeffs_.at(i); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  UniSeries operator+(const UniSeries& other) const;
  UniSeries operator-(const UniSeries& other) const;
  UniSeries operator*(const UniSeries& other) const;
  UniSeries scaled(const Rational& s) const;

  /// exp of a series with zero constant term (throws std::domain_error otherwise).
  UniSeries exp() const;
  /// f(c x^step), truncated.
  UniSeries substitute(const Rational& c, std::uint64_t step) const;

  friend bool operator==(const UniSeries&, const UniSeries&) = default;

 private:
  void require_same_order(const UniSeries& other) const;

  std::uint64_t order_;
  std::vector<Rational> coeffs_;
};

/// exp_q(x) = sum_i x^{iq} / (iq)!, truncated at `order`.
UniSeries exp_q(std::uint64_t q, std::uint64_t order);

/// Exponent vector over t_1..t_k; trailing zeros are stripped so each monomial has one key.
using Monomial = std::vector<std::uint32_t>;

/// Weight sum ell * e_ell of a monomial.
std::uint64_t weight(const Monomial& e);
Monomial normalize(Monomial e);

/// Sparse multivariate series in t_1, t_2, ... graded by weight; only monomials of weight
/// <= bound are stored, and zero coefficients are never stored.
class MultiSeries {
 public:
  explicit MultiSeries(std::uint64_t weight_bound);

  static MultiSeries one(std::uint64_t weight_bound);

  std::uint64_t weight_bound() const { return bound_; }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  Rational coefficient(const Monomial& e) const;
  /// Adds c * t^e; silently drops monomials above the weight bound.
  void add_term(const Monomial& e, const Rational& c);

  MultiSeries operator+(const MultiSeries& other) const;
  MultiSeries operator*(const MultiSeries& other) const;
  MultiSeries scaled(const Rational& s) const;

  /// exp of a series with zero constant term: sum_k A^k / k!, stopping once A^k is empty.
  MultiSeries exp() const;

  friend bool operator==(const MultiSeries&, const MultiSeries&) = default;

 private:
  std::uint64_t bound_;
  std::map<Monomial, Rational> terms_;
};

// JSON forms: univariate is a dense array of "num/den"; multivariate maps "e1,...,ek"
// (k = weight bound, one exponent per variable) to "num/den".
nlohmann::json to_json(const UniSeries& s);
nlohmann::json to_json(const MultiSeries& s);
UniSeries uni_series_from_json(const nlohmann::json& j);
MultiSeries multi_series_from_json(const nlohmann::json& j, std::uint64_t weight_bound);

}  // namespace permroots
