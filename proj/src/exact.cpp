#include "permroots/exact.hpp"

#include <string>

#include "permroots/errors.hpp"

namespace permroots {

BigInt factorial(std::uint64_t n) {
  BigInt r = 1;
  for (std::uint64_t i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt ipow(const BigInt& base, std::uint64_t exp) {
  BigInt result = 1;
  BigInt b = base;
  for (; exp != 0; exp >>= 1) {
    if (exp & 1) result *= b;
    if (exp > 1) b *= b;
  }
  return result;
}

std::string to_fraction_string(const Rational& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

namespace {

BigInt parse_integer(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty()) throw FormatError("empty integer in fraction");
  for (char c : digits) {
    if (c < '0' || c > '9') throw FormatError("invalid fraction '" + std::string(text) + "'");
  }
  return BigInt(std::string(text));
}

}  // namespace

Rational parse_fraction(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const BigInt num = parse_integer(text.substr(0, slash));
  const BigInt den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw FormatError("zero denominator in '" + std::string(text) + "'");
  // The two-argument constructor rejects negative denominators.
  return Rational(num) / Rational(den);
}

std::string to_decimal_string(const Rational& q, unsigned places) {
  const bool negative = q < 0;
  const BigInt num = abs(numerator(q));
  const BigInt den = denominator(q);
  const BigInt scale = ipow(10, places);
  const BigInt scaled = (num * scale * 2 + den) / (den * 2);
  const BigInt whole = scaled / scale;
  std::string frac = BigInt(scaled % scale).str();
  std::string out = (negative && scaled != 0 ? "-" : "") + whole.str();
  if (places > 0) out += "." + std::string(places - frac.size(), '0') + frac;
  return out;
}

bool is_integral(const Rational& q) { return denominator(q) == 1; }

BigInt as_integer(const Rational& q, std::string_view context) {
  check_internal(is_integral(q), std::string(context) + ": expected an integer, got " + to_fraction_string(q));
  return numerator(q);
}

}  // namespace permroots
