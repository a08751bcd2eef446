#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "distint/errors.hpp"
#include "distint/integrality.hpp"
#include "distint/model.hpp"

#include <string>
#include <variant>

using namespace distint;

namespace {

const std::vector<BigInt> kP{1, 3, 5, 12, 20};
const std::vector<BigInt> kA{1302, 254, 185, 70, 132};
const EigenTuple kMu{0, 2, 7, 13, 6478};

}  // namespace

TEST_CASE("multiplicity quotients on a known solution") {
  const MultiplicityResult res = multiplicities_from_roots(kP, kMu);
  REQUIRE(std::holds_alternative<std::vector<BigInt>>(res));
  const auto& a = std::get<std::vector<BigInt>>(res);
  CHECK(a == kA);
  // first quotient by hand: 1*3*8*14*6479 / (1*2*4*11*19) = 2176944/1672
  CHECK(BigInt(1) * 3 * 8 * 14 * 6479 == 2176944);
  CHECK(BigInt(1) * 2 * 4 * 11 * 19 == 1672);
  CHECK(a[0] == BigInt(2176944) / 1672);
}

TEST_CASE("interlacing violations are named") {
  // mu_1 collides with p_2 - 2
  CHECK_THROWS_AS(multiplicities_from_roots({1, 3}, {1, 5}),
                  InterlacingViolation);
  // mu_1 below p_1 - 2
  CHECK_THROWS_AS(multiplicities_from_roots({2, 5}, {-1, 9}),
                  InterlacingViolation);
  // out of order
  CHECK_THROWS_AS(multiplicities_from_roots({1, 3, 7}, {0, 9, 6}),
                  InterlacingViolation);
  // wrong arity is a spec problem, not an interlacing one
  CHECK_THROWS_AS(multiplicities_from_roots({1, 3}, {0}), InvalidSpec);
  CHECK_THROWS_AS(multiplicities_from_roots({}, {}), InvalidSpec);
  CHECK_THROWS_AS(multiplicities_from_roots({3, 3}, {2, 9}), InvalidSpec);
}

TEST_CASE("non-integer quotients report the failing index") {
  // p=(1,3), mu=(0,5): a_1 = 1*6/2 = 3 but a_2 = (-1)(4)/(3*(1-3)) = 2/3
  const MultiplicityResult res = multiplicities_from_roots({1, 3}, {0, 5});
  REQUIRE(std::holds_alternative<MultiplicityFailure>(res));
  const auto& f = std::get<MultiplicityFailure>(res);
  CHECK(f.kind == MultiplicityFailure::Kind::NonInteger);
  CHECK(f.k == 2);
}

TEST_CASE("integrality decision with certificates") {
  const IntegralityReport good = is_distance_integral(make_spec(kP, kA));
  CHECK(good.integral);
  CHECK(good.mu == kMu);
  CHECK(good.spectrum.integral);

  const IntegralityReport bad = is_distance_integral(make_spec({{1, 1}, {7, 1}}));
  CHECK_FALSE(bad.integral);
  CHECK(bad.mu.empty());
  bool has_interval = false;
  for (const auto& e : bad.spectrum.entries)
    if (!e.exact) has_interval = true;
  CHECK(has_interval);
}

TEST_CASE("make_row derives the totals") {
  const SolutionRow row = make_row(kP, kA, kMu);
  CHECK(row.n == 6469);
  CHECK(row.part_count == 1943);
  CHECK_THROWS_AS(make_row({1, 3}, {1}, {0, 7}), InvalidSpec);
}

TEST_CASE("verify_row accepts a correct row") {
  const VerificationReport rep = verify_row(make_row(kP, kA, kMu));
  CHECK(rep.all_pass());
  REQUIRE(rep.checks.size() == 6);
  CHECK(rep.checks[0].name == "interlacing");
  CHECK(rep.checks[1].name == "multiplicities");
  CHECK(rep.checks[2].name == "totals");
  CHECK(rep.checks[3].name == "primitivity");
  CHECK(rep.checks[4].name == "eigenvalue-sum");
  CHECK(rep.checks[5].name == "spectrum-roundtrip");
}

TEST_CASE("verify_row carries recomputed values, never fixes the row") {
  SolutionRow row = make_row(kP, kA, kMu);
  row.a[0] = 9999;  // break one count but keep totals consistent with it
  row.n = row.n - 1302 + 9999;
  const VerificationReport rep = verify_row(row);
  CHECK_FALSE(rep.all_pass());
  bool flagged = false;
  for (const auto& c : rep.checks)
    if (c.name == "multiplicities") {
      flagged = !c.pass;
      CHECK(c.detail.find("1302") != std::string::npos);
    }
  CHECK(flagged);
  CHECK(row.a[0] == 9999);  // input untouched
}

TEST_CASE("verify_row flags wrong totals") {
  SolutionRow row = make_row(kP, kA, kMu);
  row.n = 12345;
  const VerificationReport rep = verify_row(row);
  for (const auto& c : rep.checks)
    if (c.name == "totals") {
      CHECK_FALSE(c.pass);
      CHECK(c.detail.find("6469") != std::string::npos);
    }
}

TEST_CASE("verify_row flags non-primitive size vectors") {
  // two parts of size 2: integral but not primitive
  const VerificationReport rep = verify_row(make_row({2}, {2}, {4}));
  CHECK_FALSE(rep.all_pass());
  for (const auto& c : rep.checks) {
    if (c.name == "primitivity")
      CHECK_FALSE(c.pass);
    else
      CHECK(c.pass);
  }
}

TEST_CASE("verify_row flags a wrong eigenvalue sum") {
  SolutionRow row = make_row(kP, kA, kMu);
  row.mu[4] += 1;  // breaks interlacing? no: still above p_5 - 2; breaks Vieta
  const VerificationReport rep = verify_row(row);
  CHECK_FALSE(rep.all_pass());
  bool sum_failed = false;
  for (const auto& c : rep.checks)
    if (c.name == "eigenvalue-sum" && !c.pass) sum_failed = true;
  CHECK(sum_failed);
}

TEST_CASE("malformed rows short-circuit to a shape failure") {
  SolutionRow row = make_row(kP, kA, kMu);
  row.mu.pop_back();
  const VerificationReport rep = verify_row(row);
  CHECK_FALSE(rep.all_pass());
  REQUIRE_FALSE(rep.checks.empty());
  CHECK(rep.checks[0].name == "shape");
  CHECK_FALSE(rep.checks[0].pass);
}

TEST_CASE("report text marks failures") {
  SolutionRow row = make_row(kP, kA, kMu);
  const std::string good = to_text(verify_row(row));
  CHECK(good.find("multiplicities: pass") != std::string::npos);
  CHECK(good.find("FAIL") == std::string::npos);
  row.n = 1;
  const std::string bad = to_text(verify_row(row));
  CHECK(bad.find("FAIL") != std::string::npos);
}

TEST_CASE("no distance-integral graph on sizes 1 and 2 with small counts") {
  for (int a1 = 1; a1 <= 8; ++a1)
    for (int a2 = 1; a2 <= 8; ++a2)
      CHECK_FALSE(
          is_distance_integral(make_spec({{1, a1}, {2, a2}})).integral);
}
