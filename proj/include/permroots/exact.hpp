#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace permroots {

using BigInt = boost::multiprecision::cpp_int;
/// Always in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

BigInt factorial(std::uint64_t n);
BigInt ipow(const BigInt& base, std::uint64_t exp);

/// Exact "num/den" form; integers render as "k/1".
std::string to_fraction_string(const Rational& q);
/// Accepts "num/den" or a bare integer. Throws FormatError.
Rational parse_fraction(std::string_view text);

/// Decimal with exactly `places` digits after the point, rounded half away from zero.
std::string to_decimal_string(const Rational& q, unsigned places);

bool is_integral(const Rational& q);
/// Numerator of an integral rational; throws InternalError otherwise.
BigInt as_integer(const Rational& q, std::string_view context);

}  // namespace permroots
