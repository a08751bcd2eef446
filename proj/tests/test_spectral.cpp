#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "distint/errors.hpp"
#include "distint/model.hpp"
#include "distint/poly.hpp"
#include "distint/spectral.hpp"

#include <map>

using namespace distint;

namespace {

// compares a spectrum against {eigenvalue -> multiplicity}, all exact
void check_exact(const DSpectrum& sp, const std::map<BigInt, BigInt>& want) {
  REQUIRE(sp.integral);
  REQUIRE(sp.entries.size() == want.size());
  auto it = want.rbegin();  // entries are sorted descending
  for (const auto& e : sp.entries) {
    CHECK(e.exact);
    CHECK(e.value == it->first);
    CHECK(e.multiplicity == it->second);
    ++it;
  }
}

}  // namespace

TEST_CASE("reduced polynomial, one part size") {
  // two parts of size 2: P(x) = x - 4
  const ReducedPoly p = reduced_poly(make_spec({{2, 2}}));
  CHECK(p.coeffs == IntPoly{-4, 1});
  CHECK(p.degree() == 1);
}

TEST_CASE("reduced polynomial, two part sizes") {
  // sizes 1 and 7: P(x) = (x+1)(x-5) - [(x-5) + 7(x+1)] = x^2 - 12x - 7
  const ReducedPoly p = reduced_poly(make_spec({{1, 1}, {7, 1}}));
  CHECK(p.coeffs == IntPoly{-7, -12, 1});
}

TEST_CASE("full expansion of a small factored polynomial") {
  // sizes 1 and 2: char poly x^3 - 6x - 4 = (x+2)(x^2 - 2x - 2)
  const FactoredDPoly f = d_polynomial_factored(make_spec({{1, 1}, {2, 1}}));
  CHECK(f.exp_minus2 == 1);
  CHECK(f.repeated.empty());
  CHECK(expand_factored(f) == IntPoly{-4, -6, 0, 1});
}

TEST_CASE("integral spectra come out exact") {
  check_exact(spectrum(make_spec({{2, 2}})), {{4, 1}, {0, 1}, {-2, 2}});
  // complete graph on 5 vertices: all parts singletons, no (x+2) factor
  check_exact(spectrum(make_spec({{1, 5}})), {{4, 1}, {-1, 4}});
  // single vertex
  check_exact(spectrum(make_spec({{1, 1}})), {{0, 1}});
}

TEST_CASE("large integral spectrum with all repeated factors") {
  const PartitionSpec spec =
      make_spec({{1, 1302}, {3, 254}, {5, 185}, {12, 70}, {20, 132}});
  check_exact(spectrum(spec), {{6478, 1},
                               {18, 131},
                               {13, 1},
                               {10, 69},
                               {7, 1},
                               {3, 184},
                               {2, 1},
                               {1, 253},
                               {0, 1},
                               {-1, 1301},
                               {-2, 4526}});
}

TEST_CASE("non-integral roots are isolated in narrow clean intervals") {
  // sizes 1 and 2: non-trivial roots 1 +- sqrt(3)
  const PartitionSpec spec = make_spec({{1, 1}, {2, 1}});
  const DSpectrum sp = spectrum(spec);
  CHECK_FALSE(sp.integral);

  const IntPoly quad{-2, -2, 1};  // x^2 - 2x - 2
  int intervals = 0;
  for (const auto& e : sp.entries) {
    if (e.exact) continue;
    ++intervals;
    CHECK(e.hi - e.lo <= Rational(1, 2));
    // open interval: sign change across it, no integer inside
    CHECK(poly_eval(quad, e.lo) * poly_eval(quad, e.hi) < 0);
    const BigInt floor_lo = numerator(e.lo) / denominator(e.lo);
    for (BigInt i = floor_lo - 1; i <= floor_lo + 2; ++i)
      CHECK_FALSE((Rational(i) > e.lo && Rational(i) < e.hi));
  }
  CHECK(intervals == 2);
}

TEST_CASE("multiplicities always sum to n") {
  for (const auto& spec :
       {make_spec({{1, 1}, {7, 1}}), make_spec({{2, 3}, {5, 2}, {9, 4}}),
        make_spec({{4, 4}}), make_spec({{1, 2}, {2, 2}, {3, 2}, {4, 2}})}) {
    BigInt total = 0;
    for (const auto& e : spectrum(spec).entries) total += e.multiplicity;
    CHECK(total == spec.n);
  }
}

TEST_CASE("non-trivial roots interlace the part sizes") {
  const PartitionSpec spec = make_spec({{2, 3}, {5, 2}, {9, 4}});
  const auto roots = nontrivial_roots(spec);
  REQUIRE(roots.size() == 3);
  const BigInt poles[] = {0, 3, 7};  // p_k - 2
  for (std::size_t k = 0; k < 3; ++k) {
    const Rational lo = roots[k].exact ? Rational(roots[k].value) : roots[k].lo;
    const Rational hi = roots[k].exact ? Rational(roots[k].value) : roots[k].hi;
    CHECK(lo > Rational(poles[k]));
    if (k + 1 < 3) CHECK(hi < Rational(poles[k + 1]));
    CHECK(hi <= Rational(2 * (spec.n - 1)));
  }
}

TEST_CASE("eval_f refuses poles") {
  const PartitionSpec spec = make_spec({{1, 1}, {7, 1}});
  CHECK_THROWS_AS(eval_f(spec, Rational(-1)), PoleError);
  CHECK_THROWS_AS(eval_f(spec, Rational(5)), PoleError);
  CHECK(eval_f(spec, Rational(-3, 4)) < 0);  // below the root in (-1, 0)
  CHECK(eval_f(spec, Rational(0)) > 0);
  CHECK(eval_f(spec, Rational(13)) > 0);
}

TEST_CASE("expansion refuses absurd exponents") {
  PartitionSpec spec = make_spec({{3, 300000}});  // n - r = 600000
  CHECK_THROWS_AS(expand_factored(d_polynomial_factored(spec)), TooLarge);
}
