#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace distint {

// All math-core arithmetic is arbitrary precision. Fixed-width integers
// appear only at I/O boundaries and inside the modular charpoly kernel.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using boost::multiprecision::abs;
using boost::multiprecision::gcd;
using boost::multiprecision::lcm;
using boost::multiprecision::numerator;
using boost::multiprecision::denominator;

// gcd of a list; empty list yields 0.
inline BigInt gcd_all(const std::vector<BigInt>& xs) {
  BigInt g = 0;
  for (const auto& x : xs) {
    g = gcd(g, x);
    if (g == 1) break;
  }
  return g;
}

// lcm of a list; empty list yields 1.
inline BigInt lcm_all(const std::vector<BigInt>& xs) {
  BigInt m = 1;
  for (const auto& x : xs) m = lcm(m, x);
  return m;
}

inline bool fits_int64(const BigInt& v) {
  return v >= std::numeric_limits<std::int64_t>::min() &&
         v <= std::numeric_limits<std::int64_t>::max();
}

inline std::string to_string(const BigInt& v) { return v.str(); }

}  // namespace distint
