#include "distint/spectral.hpp"

#include "distint/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace distint {

ReducedPoly reduced_poly(const PartitionSpec& spec) {
  const std::size_t s = spec.s();
  // Linear factor for group i is (x - p_i + 2), i.e. constant term 2 - p_i.
  std::vector<BigInt> consts;
  consts.reserve(s);
  for (const auto& g : spec.parts) consts.push_back(2 - g.size);

  IntPoly p = poly_from_linears(consts);
  for (std::size_t i = 0; i < s; ++i) {
    IntPoly partial = poly_one();
    for (std::size_t j = 0; j < s; ++j)
      if (j != i) poly_mul_linear(partial, consts[j]);
    p = poly_sub(p, poly_scale(std::move(partial),
                               spec.parts[i].count * spec.parts[i].size));
  }

  if (p.size() != s + 1 || p.back() != 1)
    throw std::logic_error("reduced polynomial lost its leading term");
  BigInt expected = -spec.n;
  for (const auto& g : spec.parts) expected -= g.size - 2;
  if (p[s - 1] != expected)
    throw std::logic_error("reduced polynomial violates the eigenvalue sum");
  return ReducedPoly{std::move(p)};
}

Rational eval_f(const PartitionSpec& spec, const Rational& x) {
  Rational acc = 1;
  for (const auto& g : spec.parts) {
    const Rational den = x - g.size + 2;
    if (den == 0)
      throw PoleError("f is undefined at x = " + BigInt(g.size - 2).str() +
                      " (pole for part size " + g.size.str() + ")");
    acc -= Rational(g.count * g.size) / den;
  }
  return acc;
}

namespace {

int sign_f(const PartitionSpec& spec, const Rational& x) {
  const Rational v = eval_f(spec, x);
  return v == 0 ? 0 : (v > 0 ? 1 : -1);
}

// Root lies in the open interval (lo, hi) of width <= 1 with no interior
// integer; one midpoint probe shrinks it to width 1/2. The midpoint is a
// half-integer, and rational roots of the monic integer reduced polynomial
// are integers, so the probe cannot hit the root.
SpectrumEntry shrink_bracket(const PartitionSpec& spec, Rational lo,
                             Rational hi) {
  const Rational mid = (lo + hi) / 2;
  if (sign_f(spec, mid) > 0)
    hi = mid;
  else
    lo = mid;
  return SpectrumEntry{false, 0, std::move(lo), std::move(hi), 1};
}

// Isolates the unique root in the gap above the pole at lo_pole. The grid
// [lo_pole+1, grid_hi] holds every integer in the gap's interior; for the
// final gap grid_hi itself is a valid evaluation point with f >= 0.
SpectrumEntry isolate_in_gap(const PartitionSpec& spec, const BigInt& lo_pole,
                             const BigInt& grid_hi, bool final_gap) {
  // Smallest grid point with f >= 0; f is strictly increasing on the gap.
  // hi = grid_hi + 1 is the "no such point" sentinel.
  BigInt lo = lo_pole + 1, hi = grid_hi + 1;
  while (lo < hi) {
    const BigInt mid = lo + (hi - lo) / 2;
    if (sign_f(spec, Rational(mid)) >= 0)
      hi = mid;
    else
      lo = mid + 1;
  }
  if (lo > grid_hi) {
    // Grid empty, or every grid point negative: the root sits between the
    // last candidate and the upper pole at grid_hi + 1. Impossible in the
    // final gap, where f(grid_hi) >= 0 by the row-sum bound.
    if (final_gap)
      throw std::logic_error("largest eigenvalue escaped its bracket");
    return shrink_bracket(spec, Rational(lo - 1), Rational(lo));
  }
  const int sg = sign_f(spec, Rational(lo));
  if (sg == 0) return SpectrumEntry{true, lo, 0, 0, 1};
  return shrink_bracket(spec, Rational(lo - 1), Rational(lo));
}

}  // namespace

std::vector<SpectrumEntry> nontrivial_roots(const PartitionSpec& spec) {
  const std::size_t s = spec.s();
  std::vector<SpectrumEntry> out;
  out.reserve(s);
  for (std::size_t k = 0; k < s; ++k) {
    const BigInt lo_pole = spec.parts[k].size - 2;
    const bool final_gap = (k + 1 == s);
    // Largest root is at most twice the maximum row sum bound 2(n-1).
    const BigInt grid_hi =
        final_gap ? BigInt(2 * (spec.n - 1)) : BigInt(spec.parts[k + 1].size - 3);
    out.push_back(isolate_in_gap(spec, lo_pole, grid_hi, final_gap));
  }
  return out;
}

DSpectrum spectrum(const PartitionSpec& spec) {
  std::vector<SpectrumEntry> entries = nontrivial_roots(spec);
  bool integral = true;
  for (const auto& e : entries) integral = integral && e.exact;

  for (const auto& g : spec.parts)
    if (g.count >= 2)
      entries.push_back(SpectrumEntry{true, g.size - 2, 0, 0, g.count - 1});
  if (spec.n > spec.part_count)
    entries.push_back(
        SpectrumEntry{true, -2, 0, 0, spec.n - spec.part_count});

  std::sort(entries.begin(), entries.end(),
            [](const SpectrumEntry& a, const SpectrumEntry& b) {
              return a.sort_key() > b.sort_key();
            });

  // Self-checks: multiplicities exhaust n and the trace is zero (bracketed
  // through interval endpoints when roots are irrational).
  BigInt total = 0;
  Rational trace_lo = 0, trace_hi = 0;
  for (const auto& e : entries) {
    total += e.multiplicity;
    trace_lo += (e.exact ? Rational(e.value) : e.lo) * Rational(e.multiplicity);
    trace_hi += (e.exact ? Rational(e.value) : e.hi) * Rational(e.multiplicity);
  }
  if (total != spec.n)
    throw std::logic_error("spectrum multiplicities do not sum to n");
  if (integral ? (trace_lo != 0) : !(trace_lo < 0 && 0 < trace_hi))
    throw std::logic_error("spectrum trace is not zero");

  return DSpectrum{std::move(entries), integral};
}

FactoredDPoly d_polynomial_factored(const PartitionSpec& spec) {
  FactoredDPoly out;
  out.exp_minus2 = spec.n - spec.part_count;
  for (const auto& g : spec.parts)
    if (g.count >= 2) out.repeated.push_back({g.size - 2, g.count - 1});
  out.reduced = reduced_poly(spec);
  return out;
}

IntPoly expand_factored(const FactoredDPoly& f) {
  if (f.exp_minus2 > 200000)
    throw TooLarge("refusing to expand a polynomial of degree " +
                   f.exp_minus2.str());
  IntPoly p = f.reduced.coeffs;
  for (BigInt i = 0; i < f.exp_minus2; ++i) poly_mul_linear(p, 2);
  for (const auto& [root, exp] : f.repeated)
    for (BigInt i = 0; i < exp; ++i) poly_mul_linear(p, -root);
  return p;
}

}  // namespace distint
