#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "peakset/errors.hpp"

namespace peakset {

// Counts grow like n!, so all counting APIs use arbitrary precision integers.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt factorial(int n) {
  if (n < 0) throw InputError("factorial of negative argument");
  BigInt out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

inline BigInt pow2(int e) {
  if (e < 0) throw InputError("negative power of two");
  return BigInt(1) << e;
}

}  // namespace peakset
