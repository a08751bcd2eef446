#pragma once

#include "distint/bigint.hpp"

#include <cstddef>
#include <vector>

namespace distint {

// Dense integer polynomial, coefficients ascending: c[0] + c[1] x + ...
// Invariant: empty vector means the zero polynomial; otherwise the leading
// coefficient is nonzero.
using IntPoly = std::vector<BigInt>;

inline IntPoly poly_trim(IntPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

inline IntPoly poly_one() { return IntPoly{1}; }

// (x + c)
inline IntPoly poly_linear(const BigInt& c) { return IntPoly{c, 1}; }

inline IntPoly poly_add(const IntPoly& a, const IntPoly& b) {
  IntPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return poly_trim(std::move(r));
}

inline IntPoly poly_sub(const IntPoly& a, const IntPoly& b) {
  IntPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return poly_trim(std::move(r));
}

inline IntPoly poly_scale(IntPoly p, const BigInt& k) {
  if (k == 0) return {};
  for (auto& c : p) c *= k;
  return p;
}

inline IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

// p * (x + c), in place.
inline void poly_mul_linear(IntPoly& p, const BigInt& c) {
  if (p.empty()) return;
  p.push_back(0);
  for (std::size_t i = p.size() - 1; i > 0; --i) {
    p[i] = p[i - 1] + c * p[i];
  }
  p[0] *= c;
}

// Product of (x + c) over all c in cs.
inline IntPoly poly_from_linears(const std::vector<BigInt>& cs) {
  IntPoly p = poly_one();
  for (const auto& c : cs) poly_mul_linear(p, c);
  return p;
}

inline BigInt poly_eval(const IntPoly& p, const BigInt& x) {
  BigInt v = 0;
  for (std::size_t i = p.size(); i > 0; --i) v = v * x + p[i - 1];
  return v;
}

inline Rational poly_eval(const IntPoly& p, const Rational& x) {
  Rational v = 0;
  for (std::size_t i = p.size(); i > 0; --i) v = v * x + p[i - 1];
  return v;
}

inline std::size_t poly_degree(const IntPoly& p) {
  // Degree of the zero polynomial is not meaningful; callers guard.
  return p.empty() ? 0 : p.size() - 1;
}

}  // namespace distint
