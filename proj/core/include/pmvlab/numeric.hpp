#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace pmvlab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p", "-p" or "p/q" with q > 0 (q may be negative on input; the sign moves to p).
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form with q >= 1 and gcd(p, q) = 1.
std::string format_rational(const Rational& r);

BigInt parse_bigint(std::string_view text);

inline bool is_integral(const Rational& r) {
  return boost::multiprecision::denominator(r) == 1;
}

}  // namespace pmvlab
