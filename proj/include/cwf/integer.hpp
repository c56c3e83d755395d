#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace cwf {

/// Arbitrary-precision signed integer used for every coefficient in the library.
using Integer = boost::multiprecision::cpp_int;

inline Integer abs_value(const Integer& x) { return x < 0 ? Integer(-x) : x; }

inline Integer gcd(const Integer& x, const Integer& y) {
  return boost::multiprecision::gcd(abs_value(x), abs_value(y));
}

/// Floor division for a positive divisor (cpp_int division truncates toward zero).
inline Integer floor_div(const Integer& n, const Integer& d) {
  Integer q = n / d;
  if (n % d != 0 && n < 0) --q;
  return q;
}

}  // namespace cwf
