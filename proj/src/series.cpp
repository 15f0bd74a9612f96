#include "permroots/series.hpp"

#include <sstream>
#include <stdexcept>
#include <string>

#include "permroots/errors.hpp"

namespace permroots {

UniSeries::UniSeries(std::uint64_t order) : order_(order), coeffs_(order + 1, Rational(0)) {}

UniSeries::UniSeries(std::uint64_t order, std::vector<Rational> coefficients)
    : order_(order), coeffs_(std::move(coefficients)) {
  coeffs_.resize(order + 1, Rational(0));
}

UniSeries UniSeries::one(std::uint64_t order) {
  UniSeries s(order);
  s.coeffs_[0] = 1;
  return s;
}

UniSeries UniSeries::geometric(std::uint64_t order) {
  return UniSeries(order, std::vector<Rational>(order + 1, Rational(1)));
}

UniSeries UniSeries::binomial(const Rational& alpha, const Rational& c, std::uint64_t step,
                              std::uint64_t order) {
  if (step == 0) throw std::invalid_argument("binomial series step must be positive");
  UniSeries s(order);
  // binom(alpha, i) c^i, built incrementally: ratio (alpha - i + 1) / i.
  Rational coeff = 1;
  for (std::uint64_t i = 0; i * step <= order; ++i) {
    if (i > 0) coeff *= (alpha - Rational(i - 1)) * c / Rational(i);
    s.coeffs_[i * step] = coeff;
  }
  return s;
}

void UniSeries::require_same_order(const UniSeries& other) const {
  if (other.order_ != order_) throw std::invalid_argument("series truncation orders differ");
}

UniSeries UniSeries::operator+(const UniSeries& other) const {
  require_same_order(other);
  UniSeries r = *this;
  for (std::uint64_t i = 0; i <= order_; ++i) r.coeffs_[i] += other.coeffs_[i];
  return r;
}

UniSeries UniSeries::operator-(const UniSeries& other) const {
  require_same_order(other);
  UniSeries r = *this;
  for (std::uint64_t i = 0; i <= order_; ++i) r.coeffs_[i] -= other.coeffs_[i];
  return r;
}

UniSeries UniSeries::operator*(const UniSeries& other) const {
  require_same_order(other);
  UniSeries r(order_);
  for (std::uint64_t i = 0; i <= order_; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::uint64_t j = 0; i + j <= order_; ++j) {
      if (other.coeffs_[j] != 0) r.coeffs_[i + j] += coeffs_[i] * other.coeffs_[j];
    }
  }
  return r;
}

UniSeries UniSeries::scaled(const Rational& s) const {
  UniSeries r = *this;
  for (auto& c : r.coeffs_) c *= s;
  return r;
}

UniSeries UniSeries::exp() const {
  if (coeffs_[0] != 0) throw std::domain_error("exp needs a zero constant term");
  // B = exp(A) satisfies B' = A' B: n b_n = sum_{k=1..n} k a_k b_{n-k}.
  UniSeries b(order_);
  b.coeffs_[0] = 1;
  for (std::uint64_t n = 1; n <= order_; ++n) {
    Rational acc = 0;
    for (std::uint64_t k = 1; k <= n; ++k) {
      if (coeffs_[k] != 0) acc += Rational(k) * coeffs_[k] * b.coeffs_[n - k];
    }
    b.coeffs_[n] = acc / Rational(n);
  }
  return b;
}

UniSeries UniSeries::substitute(const Rational& c, std::uint64_t step) const {
  if (step == 0) throw std::invalid_argument("substitution step must be positive");
  UniSeries r(order_);
  Rational cpow = 1;
  for (std::uint64_t i = 0; i * step <= order_; ++i) {
    r.coeffs_[i * step] = coeffs_[i] * cpow;
    cpow *= c;
  }
  return r;
}

UniSeries exp_q(std::uint64_t q, std::uint64_t order) {
  if (q == 0) throw std::invalid_argument("exp_q: q must be positive");
  UniSeries s(order);
  for (std::uint64_t j = 0; j <= order; j += q) s[j] = Rational(1, factorial(j));
  return s;
}

std::uint64_t weight(const Monomial& e) {
  std::uint64_t w = 0;
  for (std::size_t i = 0; i < e.size(); ++i) w += (i + 1) * static_cast<std::uint64_t>(e[i]);
  return w;
}

Monomial normalize(Monomial e) {
  while (!e.empty() && e.back() == 0) e.pop_back();
  return e;
}

MultiSeries::MultiSeries(std::uint64_t weight_bound) : bound_(weight_bound) {}

MultiSeries MultiSeries::one(std::uint64_t weight_bound) {
  MultiSeries s(weight_bound);
  s.terms_[{}] = 1;
  return s;
}

Rational MultiSeries::coefficient(const Monomial& e) const {
  auto it = terms_.find(normalize(e));
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiSeries::add_term(const Monomial& e, const Rational& c) {
  if (c == 0) return;
  Monomial key = normalize(e);
  if (weight(key) > bound_) return;
  auto [it, inserted] = terms_.try_emplace(std::move(key), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiSeries MultiSeries::operator+(const MultiSeries& other) const {
  MultiSeries r(std::min(bound_, other.bound_));
  for (const auto& [e, c] : terms_) r.add_term(e, c);
  for (const auto& [e, c] : other.terms_) r.add_term(e, c);
  return r;
}

MultiSeries MultiSeries::operator*(const MultiSeries& other) const {
  MultiSeries r(std::min(bound_, other.bound_));
  for (const auto& [e1, c1] : terms_) {
    const std::uint64_t w1 = weight(e1);
    for (const auto& [e2, c2] : other.terms_) {
      if (w1 + weight(e2) > r.bound_) continue;
      Monomial e(std::max(e1.size(), e2.size()), 0);
      for (std::size_t i = 0; i < e1.size(); ++i) e[i] += e1[i];
      for (std::size_t i = 0; i < e2.size(); ++i) e[i] += e2[i];
      r.add_term(e, c1 * c2);
    }
  }
  return r;
}

MultiSeries MultiSeries::scaled(const Rational& s) const {
  MultiSeries r(bound_);
  for (const auto& [e, c] : terms_) r.add_term(e, c * s);
  return r;
}

MultiSeries MultiSeries::exp() const {
  if (coefficient({}) != 0) throw std::domain_error("exp needs a zero constant term");
  MultiSeries result = one(bound_);
  MultiSeries power = one(bound_);
  // Every term of A has weight >= 1, so A^k vanishes once k exceeds the bound.
  for (std::uint64_t k = 1; k <= bound_; ++k) {
    power = (power * *this).scaled(Rational(1, k));
    if (power.terms_.empty()) break;
    result = result + power;
  }
  return result;
}

nlohmann::json to_json(const UniSeries& s) {
  auto arr = nlohmann::json::array();
  for (const auto& c : s.coefficients()) arr.push_back(to_fraction_string(c));
  return arr;
}

nlohmann::json to_json(const MultiSeries& s) {
  auto obj = nlohmann::json::object();
  for (const auto& [e, c] : s.terms()) {
    std::string key;
    for (std::uint64_t i = 0; i < s.weight_bound(); ++i) {
      if (i) key += ',';
      key += std::to_string(i < e.size() ? e[i] : 0);
    }
    obj[key] = to_fraction_string(c);
  }
  return obj;
}

UniSeries uni_series_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty()) throw FormatError("univariate series JSON must be a non-empty array");
  std::vector<Rational> coeffs;
  for (const auto& v : j) {
    if (!v.is_string()) throw FormatError("series coefficients must be \"num/den\" strings");
    coeffs.push_back(parse_fraction(v.get<std::string>()));
  }
  const std::uint64_t order = coeffs.size() - 1;
  return UniSeries(order, std::move(coeffs));
}

MultiSeries multi_series_from_json(const nlohmann::json& j, std::uint64_t weight_bound) {
  if (!j.is_object()) throw FormatError("multivariate series JSON must be an object");
  MultiSeries s(weight_bound);
  for (const auto& [key, v] : j.items()) {
    if (!v.is_string()) throw FormatError("series coefficients must be \"num/den\" strings");
    Monomial e;
    std::stringstream ss(key);
    std::string part;
    while (std::getline(ss, part, ',')) {
      try {
        std::size_t used = 0;
        const unsigned long x = std::stoul(part, &used);
        if (used != part.size()) throw FormatError("bad exponent key '" + key + "'");
        e.push_back(static_cast<std::uint32_t>(x));
      } catch (const std::logic_error&) {
        throw FormatError("bad exponent key '" + key + "'");
      }
    }
    if (weight(e) > weight_bound) throw FormatError("monomial '" + key + "' exceeds the weight bound");
    s.add_term(e, parse_fraction(v.get<std::string>()));
  }
  return s;
}

}  // namespace permroots
