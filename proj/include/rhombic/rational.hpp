#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace rhombic {

// Exact arithmetic substrate.  Rationals are kept in canonical form by the
// backing type: reduced, denominator > 0, zero stored as 0/1.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

inline BigInt binomial(int n, int k) {
  if (k < 0 || k > n || n < 0) return 0;
  BigInt b = 1;
  for (int i = 0; i < k; ++i) {
    b *= n - i;
    b /= i + 1;
  }
  return b;
}

// Parses "p/q" or a plain integer literal (optional leading '-').
inline Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(text));
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a rational literal: '" + text + "'");
  }
}

// "p/q" when the denominator is not 1, plain integer otherwise.
inline std::string rational_to_string(const Rational& value) {
  BigInt den = boost::multiprecision::denominator(value);
  std::string s = boost::multiprecision::numerator(value).str();
  if (den != 1) s += "/" + den.str();
  return s;
}

inline double rational_to_double(const Rational& value) {
  return value.template convert_to<double>();
}

}  // namespace rhombic
