#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace sgt {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// base^exp for exp >= 0; pow_int(0, 0) == 1.
inline BigInt pow_int(const BigInt& base, long exp) {
  if (exp < 0) throw std::domain_error("pow_int: negative exponent");
  BigInt result = 1;
  BigInt b = base;
  for (long n = exp; n > 0; n >>= 1) {
    if (n & 1) result *= b;
    if (n > 1) b *= b;
  }
  return result;
}

// base^exp; negative exponents invert, which requires base != 0.  0^0 == 1.
inline BigRat pow_rat(const BigRat& base, long exp) {
  if (exp == 0) return BigRat(1);
  if (exp < 0) {
    if (base == 0) throw std::domain_error("pow_rat: zero base with negative exponent");
    const BigRat inv = BigRat(1) / base;
    BigRat result = 1;
    BigRat b = inv;
    for (long n = -exp; n > 0; n >>= 1) {
      if (n & 1) result *= b;
      if (n > 1) b *= b;
    }
    return result;
  }
  BigRat result = 1;
  BigRat b = base;
  for (long n = exp; n > 0; n >>= 1) {
    if (n & 1) result *= b;
    if (n > 1) b *= b;
  }
  return result;
}

inline bool is_integral(const BigRat& r) { return boost::multiprecision::denominator(r) == 1; }

// Exact conversion; throws std::domain_error if r has a non-trivial denominator.
inline BigInt to_integer(const BigRat& r) {
  if (!is_integral(r))
    throw std::domain_error("expected an integer, got " + r.str());
  return boost::multiprecision::numerator(r);
}

// Accepts "p" or "p/q" with optional signs and surrounding whitespace.
inline BigRat parse_rational(const std::string& s) {
  auto first = s.find_first_not_of(" \t\r\n");
  auto last = s.find_last_not_of(" \t\r\n");
  if (first == std::string::npos) throw std::invalid_argument("empty rational literal");
  const std::string body = s.substr(first, last - first + 1);
  const auto slash = body.find('/');
  try {
    if (slash == std::string::npos) return BigRat(BigInt(body));
    const BigInt num(body.substr(0, slash));
    const BigInt den(body.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return BigRat(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("malformed rational literal: " + body);
  }
}

inline std::string to_string(const BigInt& v) { return v.str(); }
inline std::string to_string(const BigRat& r) { return r.str(); }

}  // namespace sgt
