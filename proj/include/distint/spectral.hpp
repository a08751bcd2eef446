#pragma once

#include "distint/bigint.hpp"
#include "distint/model.hpp"
#include "distint/poly.hpp"

#include <vector>

namespace distint {

// Monic integer polynomial of degree s whose roots are the s non-trivial
// distance eigenvalues. Coefficients ascending.
struct ReducedPoly {
  IntPoly coeffs;

  std::size_t degree() const { return coeffs.size() - 1; }
};

// One spectrum entry: either an exact integer eigenvalue or an open
// isolating interval (lo, hi) of width < 1 containing no integer.
struct SpectrumEntry {
  bool exact;
  BigInt value;      // meaningful when exact
  Rational lo, hi;   // meaningful when !exact
  BigInt multiplicity;

  Rational sort_key() const {
    return exact ? Rational(value) : (lo + hi) / 2;
  }
};

// Full distance spectrum, entries sorted by eigenvalue descending.
// Multiplicities sum to n; integral is true iff every entry is exact.
struct DSpectrum {
  std::vector<SpectrumEntry> entries;
  bool integral;
};

// Factored characteristic polynomial of the distance matrix:
// (x+2)^{exp_minus2} * prod (x - root_i)^{exp_i} * reduced(x).
struct FactoredDPoly {
  BigInt exp_minus2;  // n - part_count; factor omitted when zero
  std::vector<std::pair<BigInt, BigInt>> repeated;  // (root p_i - 2, a_i - 1), a_i >= 2 only
  ReducedPoly reduced;
};

// Clears denominators in the rational eigenvalue function:
// P(x) = prod_i (x - p_i + 2) - sum_i a_i p_i prod_{j != i} (x - p_j + 2).
ReducedPoly reduced_poly(const PartitionSpec& spec);

// f(x) = 1 - sum_i a_i p_i / (x - p_i + 2); strictly increasing between
// consecutive poles p_i - 2. Throws PoleError at a pole.
Rational eval_f(const PartitionSpec& spec, const Rational& x);

DSpectrum spectrum(const PartitionSpec& spec);

FactoredDPoly d_polynomial_factored(const PartitionSpec& spec);

// Expands the factored form to the dense degree-n polynomial.
IntPoly expand_factored(const FactoredDPoly& f);

// The s roots of the reduced polynomial only, ascending; exact integers or
// isolating intervals. Entries carry multiplicity 1.
std::vector<SpectrumEntry> nontrivial_roots(const PartitionSpec& spec);

}  // namespace distint
