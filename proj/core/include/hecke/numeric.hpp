#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace hecke {

// Exact arithmetic for enumeration and exact distributions.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

inline BigInt power(unsigned base, unsigned exp) {
  return boost::multiprecision::pow(BigInt(base), exp);
}

}  // namespace hecke
