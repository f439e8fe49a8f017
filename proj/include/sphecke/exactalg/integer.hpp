#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace sphecke {

// Expression templates are off so that auto and braced initialization
// always yield concrete values.
using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

inline std::string to_string(const Integer& x) { return x.str(); }
inline std::string to_string(const Rational& x) { return x.str(); }

// Exact power p^e for e >= 0.
inline Integer ipow(const Integer& base, unsigned e) {
  Integer r = 1;
  Integer b = base;
  while (e) {
    if (e & 1u) r *= b;
    b *= b;
    e >>= 1u;
  }
  return r;
}

// p^e for any integer e, as a rational.
inline Rational rpow(const Rational& base, int e) {
  Rational r = 1;
  Rational b = e >= 0 ? base : Rational(1) / base;
  unsigned k = e >= 0 ? static_cast<unsigned>(e) : static_cast<unsigned>(-e);
  while (k) {
    if (k & 1u) r *= b;
    b *= b;
    k >>= 1u;
  }
  return r;
}

inline bool fits_int64(const Integer& x) {
  return x >= Integer(INT64_MIN) && x <= Integer(INT64_MAX);
}

}  // namespace sphecke
