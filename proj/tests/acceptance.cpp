// Acceptance gate: one line per criterion, nonzero exit if any fails.
// Each criterion re-derives its expectations from scratch through the
// public API; runtime ceilings are asserted, not just reported.

#include "distint/corpus.hpp"
#include "distint/errors.hpp"
#include "distint/familygen.hpp"
#include "distint/integrality.hpp"
#include "distint/jsonutil.hpp"
#include "distint/model.hpp"
#include "distint/oracle.hpp"
#include "distint/search.hpp"
#include "distint/spectral.hpp"
#include "support/reference.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

using namespace distint;

namespace {

struct Failure {
  std::string what;
};

void require(bool cond, const std::string& what) {
  if (!cond) throw Failure{what};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(bool(in), "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// ---- criterion 1: corpus verification against the golden report ----

void criterion1() {
  auto entries = load_corpus();
  ErrataReport report = run_errata_report(entries);
  require(report.rows == 57, "expected 57 transcribed rows");
  for (const auto& e : report.entries)
    if (e.source.rfind("Table 1", 0) == 0)
      require(e.status == "verified", e.source + " did not verify");

  // hand-checked anchors
  const auto res1 =
      multiplicities_from_roots({1, 3, 5, 12, 20}, {0, 2, 7, 13, 6478});
  require(std::get<std::vector<BigInt>>(res1) ==
              std::vector<BigInt>({1302, 254, 185, 70, 132}),
          "row 1 multiplicities drifted");
  const auto res5 =
      multiplicities_from_roots({1, 4, 8, 18, 31}, {1, 5, 14, 20, 9298});
  require(std::get<std::vector<BigInt>>(res5) ==
              std::vector<BigInt>({3282, 332, 101, 22, 112}),
          "base row at p=(1,4,8,18,31) drifted");

  const std::string golden =
      read_file(std::string(DISTINT_TEST_DATA_DIR) + "/golden_errata.txt");
  require(to_text(report) == golden, "report differs from the golden file");
}

// ---- criterion 2: five-size family re-derivation ----

void criterion2() {
  const FamilyParams fam =
      family_params({1, 4, 8, 18, 31}, {1, 5, 14, 20, 9298});
  require(fam.step == 13236132, "step");
  require(fam.slope ==
              std::vector<BigInt>({4671576, 472719, 143871, 31372, 159936}),
          "slopes");
  require(fam.n_base == 9286, "n base");

  auto entries = load_corpus();
  const ErrataReport report = run_errata_report(entries);
  bool noted = false;
  for (const auto& e : report.entries)
    if (e.source == "Theorem 3.2") {
      require(e.status == "discrepant", "family claim should be discrepant");
      for (const auto& n : e.notes)
        noted = noted ||
                n == "n(t): printed 324632*t + 2622, derived 13236132*t + 9286";
    }
  require(noted, "derived n(t) discrepancy not reported");
}

// ---- criterion 3: six-size base row and family ----

void criterion3() {
  const std::vector<BigInt> p{2, 5, 11, 18, 21, 23};
  const EigenTuple mu{1, 7, 12, 18, 20, 53979};
  const SolutionRow row =
      make_row(p, {4735, 2941, 514, 593, 213, 391}, mu);
  require(row.n == 53969, "recomputed n");
  require(verify_row(row).all_pass(), "base row verification");

  const FamilyParams fam = family_params(p, mu);
  require(fam.slope[0] * 57 == fam.step * 5, "slope_1 = 5*step/57");
  require(fam.step == 4772040, "derived step");
  require(fam.slope ==
              std::vector<BigInt>({418600, 260015, 45448, 52440, 18837, 34580}),
          "slopes match the printed ones");

  auto entries = load_corpus();
  const ErrataReport report = run_errata_report(entries);
  bool noted = false;
  for (const auto& e : report.entries)
    if (e.source == "Theorem 3.5")
      for (const auto& n : e.notes)
        noted = noted || n == "step: printed 9598038, derived 4772040";
  require(noted, "printed step discrepancy not reported");

  for (int t = 0; t <= 5; ++t) {
    const auto [spec, want_mu] = instantiate(fam, t);
    const IntegralityReport rep = is_distance_integral(spec);
    require(rep.integral, "member t=" + std::to_string(t));
    require(rep.mu == want_mu, "eigenvalues at t=" + std::to_string(t));
  }
}

// ---- criterion 4: factored vs dense charpoly for every n <= 40 ----

void criterion4() {
  std::uint64_t checked = 0;
  refimpl::for_each_partition(40, [&](const PartitionSpec& spec) {
    if (!cross_check(spec, 40))
      throw Failure{"mismatch at " + format_spec(spec)};
    ++checked;
  });
  require(checked == 215267, "partition count: got " + std::to_string(checked));
}

// ---- criterion 5: desk-scale search reproduction ----

void criterion5() {
  SearchBounds fixed;
  fixed.lo = {1, 6, 9, 16, 24};
  fixed.hi = fixed.lo;
  fixed.mu_max = 600;
  std::vector<SolutionRow> rows;
  search(fixed, {}, [&](const SolutionRow& r) { rows.push_back(r); });
  require(rows.size() == 1 &&
              rows[0] == make_row({1, 6, 9, 16, 24}, {245, 19, 9, 2, 4},
                                  {2, 6, 13, 19, 574}),
          "fixed five-size box");

  SearchBounds small;
  small.lo = {1, 1};
  small.hi = {1, 3};
  small.mu_max = 13;
  rows.clear();
  search(small, {}, [&](const SolutionRow& r) { rows.push_back(r); });
  bool found = false;
  for (const auto& r : rows)
    found = found || r == make_row({1, 3}, {7, 2}, {0, 13});
  require(found, "two-size box misses (a=(7,2), mu=(0,13))");

  // byte-identical output across worker counts, through the real binary
  const std::string base = std::string("/tmp/distint_acc5_") +
                           std::to_string(std::random_device{}());
  const std::string f1 = base + "_w1.jsonl", f8 = base + "_w8.jsonl";
  const std::string cli = DISTINT_CLI_PATH;
  const std::string box = " search --pmax 4,9,14 --mumax 400 --format json";
  require(std::system((cli + box + " --workers 1 > " + f1 + " 2>/dev/null")
                          .c_str()) == 0,
          "worker-1 run failed");
  require(std::system((cli + box + " --workers 8 > " + f8 + " 2>/dev/null")
                          .c_str()) == 0,
          "worker-8 run failed");
  const std::string out1 = read_file(f1), out8 = read_file(f8);
  std::remove(f1.c_str());
  std::remove(f8.c_str());
  require(!out1.empty() && out1 == out8,
          "worker counts 1 and 8 produced different bytes");
}

// ---- criterion 6: always-on property suites ----

void criterion6() {
  // trace, Vieta, second moment, interlacing over every partition n <= 18
  refimpl::for_each_partition(18, [&](const PartitionSpec& spec) {
    const DSpectrum sp = spectrum(spec);
    Rational lo_sum = 0, hi_sum = 0;
    BigInt mult_total = 0;
    for (const auto& e : sp.entries) {
      const Rational lo = e.exact ? Rational(e.value) : e.lo;
      const Rational hi = e.exact ? Rational(e.value) : e.hi;
      lo_sum += lo * Rational(e.multiplicity);
      hi_sum += hi * Rational(e.multiplicity);
      mult_total += e.multiplicity;
    }
    require(mult_total == spec.n, "multiplicity total at " + format_spec(spec));
    if (sp.integral)
      require(lo_sum == 0, "trace at " + format_spec(spec));
    else
      require(lo_sum < 0 && hi_sum > 0,
              "trace bracket at " + format_spec(spec));

    // Vieta for the reduced factor, via its own coefficients
    const ReducedPoly red = reduced_poly(spec);
    BigInt pole_sum = 0;
    for (const auto& g : spec.parts) pole_sum += g.size - 2;
    require(red.coeffs[red.degree() - 1] == -(spec.n + pole_sum),
            "Vieta at " + format_spec(spec));

    // second moment: trace(D^2) = n(n-1) + 3 sum a_i p_i (p_i - 1)
    const IntPoly full = expand_factored(d_polynomial_factored(spec));
    BigInt same_part = 0;
    for (const auto& g : spec.parts)
      same_part += g.count * g.size * (g.size - 1);
    require(-2 * full[spec.n.convert_to<std::size_t>() - 2] ==
                spec.n * (spec.n - 1) + 3 * same_part,
            "second moment at " + format_spec(spec));

    // interlacing of the computed non-trivial roots; a bracket may touch a
    // pole at an endpoint, but a non-exact root is strictly inside it
    const auto roots = nontrivial_roots(spec);
    for (std::size_t k = 0; k < roots.size(); ++k) {
      const Rational gap_lo(spec.parts[k].size - 2);
      if (roots[k].exact) {
        require(Rational(roots[k].value) > gap_lo,
                "interlacing low at " + format_spec(spec));
        if (k + 1 < roots.size())
          require(Rational(roots[k].value) <
                      Rational(spec.parts[k + 1].size - 2),
                  "interlacing high at " + format_spec(spec));
      } else {
        require(roots[k].lo >= gap_lo,
                "interlacing low at " + format_spec(spec));
        if (k + 1 < roots.size())
          require(roots[k].hi <= Rational(spec.parts[k + 1].size - 2),
                  "interlacing high at " + format_spec(spec));
      }
      const Rational top =
          roots[k].exact ? Rational(roots[k].value) : roots[k].hi;
      require(top <= Rational(2 * (spec.n - 1)),
              "largest root bound at " + format_spec(spec));
    }
  });

  // scaling equivalence on 50 sampled specs, q in {2, 3, 5}
  std::mt19937 rng(424242);
  for (int i = 0; i < 50; ++i) {
    const std::size_t s = 1 + rng() % 3;
    std::vector<PartGroup> parts;
    BigInt size = 0;
    for (std::size_t k = 0; k < s; ++k) {
      size += 1 + rng() % 4;
      parts.push_back({size, BigInt(1 + rng() % 6)});
    }
    const PartitionSpec spec = make_spec(parts);
    const bool base = is_distance_integral(spec).integral;
    for (const BigInt q : {2, 3, 5})
      require(is_distance_integral(scale(spec, {q})).integral == base,
              "scaling equivalence at " + format_spec(spec));
  }

  // spectrum <-> multiplicities round-trip on every corpus row
  auto entries = load_corpus();
  for (const auto& e : entries) {
    if (e.kind != "row") continue;
    const auto rep = is_distance_integral(make_spec(e.row->p, e.row->a));
    require(rep.integral && rep.mu == e.row->mu, "round-trip at " + e.source);
  }

  // sizes (1,2) admit no distance-integral graph with counts <= 20
  for (int a1 = 1; a1 <= 20; ++a1)
    for (int a2 = 1; a2 <= 20; ++a2)
      require(!is_distance_integral(make_spec({{1, a1}, {2, a2}})).integral,
              "sizes (1,2) should never be integral");
}

// ---- criterion 7: published full bounds are accepted, not run ----

void criterion7() {
  SearchBounds s5;
  s5.lo = {1, 1, 1, 1, 1};
  s5.hi = {7, 15, 20, 24, 50};
  s5.mu_max = 9999;  // printed bound is strict
  validate_bounds(s5);

  SearchBounds s6;
  s6.lo = {1, 2, 3, 4, 5, 6};
  s6.hi = {5, 15, 25, 35, 45, 65};
  s6.mu_max = 199999;
  validate_bounds(s6);

  for (const auto& b : {s5, s6}) {
    require(estimate_candidates(b, kDefaultSearchBudget) >=
                kDefaultSearchBudget,
            "estimate should exceed the default budget");
    bool refused = false;
    try {
      search(b, {}, [](const SolutionRow&) {});
    } catch (const BoundsTooLarge&) {
      refused = true;
    }
    require(refused, "oversized box must be refused without force");
  }
}

struct Criterion {
  int id;
  const char* label;
  void (*fn)();
  double ceiling_s;  // 0: no ceiling
};

}  // namespace

int main() {
  const Criterion table[] = {
      {1, "published table verified against golden report", criterion1, 2.0},
      {2, "five-size family constants re-derived", criterion2, 1.0},
      {3, "six-size base row and family re-derived", criterion3, 5.0},
      {4, "factored charpoly equals dense charpoly for all n <= 40",
       criterion4, 300.0},
      {5, "desk-scale searches reproduce known rows deterministically",
       criterion5, 60.0},
      {6, "exact spectral identities and equivalences", criterion6, 0.0},
      {7, "published full bounds accepted but refused without force",
       criterion7, 0.0},
  };

  bool all_pass = true;
  for (const auto& c : table) {
    const auto start = std::chrono::steady_clock::now();
    std::string failure;
    try {
      c.fn();
    } catch (const Failure& f) {
      failure = f.what;
    } catch (const std::exception& e) {
      failure = std::string("unexpected exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2f s", secs);
    if (failure.empty() && c.ceiling_s > 0 && secs >= c.ceiling_s)
      failure = std::string("runtime ceiling exceeded: ") + timing;
    if (failure.empty()) {
      std::cout << "ACCEPTANCE " << c.id << ": PASS (" << timing << ") "
                << c.label << '\n';
    } else {
      all_pass = false;
      std::cout << "ACCEPTANCE " << c.id << ": FAIL (" << timing << ") "
                << c.label << ": " << failure << '\n';
    }
  }
  return all_pass ? 0 : 1;
}
