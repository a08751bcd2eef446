#pragma once

#include "distint/bigint.hpp"
#include "distint/integrality.hpp"
#include "distint/model.hpp"

#include <string>
#include <utility>
#include <vector>

namespace distint {

// One-parameter family of distance-integral graphs grown from a base
// solution: sizes p stay fixed, mu_s(t) = mu_s_base + step*t, and the
// counts move along b_k(t) = slope_k*t + intercept_k.
struct FamilyParams {
  std::vector<BigInt> p;
  std::vector<BigInt> mu_head;  // mu_1..mu_{s-1}, fixed across the family
  BigInt mu_s_base;
  BigInt step;
  std::vector<BigInt> d;          // gcd witnesses, one per k
  std::vector<BigInt> r;          // reduced denominators; step = lcm(r)
  std::vector<BigInt> slope;      // all >= 1
  std::vector<BigInt> intercept;  // the base solution's counts
  BigInt n_base;                  // vertex count at t = 0

  std::size_t s() const { return p.size(); }

  friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
};

// Derives the family from a distance-integral base (p, mu). Throws
// NotIntegralBase when (p, mu) does not yield positive integer counts.
FamilyParams family_params(const std::vector<BigInt>& p, const EigenTuple& mu);

// Member t >= 0 of the family, with its expected eigenvalue tuple.
std::pair<PartitionSpec, EigenTuple> instantiate(const FamilyParams& fam,
                                                 const BigInt& t);

// Human-readable affine formulas: step, one b_k(t) line per k, and the
// mu_s(t) and n(t) lines.
std::string format_formulas(const FamilyParams& fam);

}  // namespace distint
