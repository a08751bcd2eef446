#pragma once

#include "distint/bigint.hpp"
#include "distint/model.hpp"
#include "distint/spectral.hpp"

#include <string>
#include <variant>
#include <vector>

namespace distint {

// Non-trivial eigenvalues mu_1 < ... < mu_s, interlacing the part sizes:
// -2 < p_1-2 < mu_1 < p_2-2 < ... < p_s-2 < mu_s.
using EigenTuple = std::vector<BigInt>;

struct MultiplicityFailure {
  enum class Kind { NonInteger, NonPositive };
  Kind kind;
  std::size_t k;  // 1-based index of the first failing quotient

  friend bool operator==(const MultiplicityFailure&,
                         const MultiplicityFailure&) = default;
};

using MultiplicityResult =
    std::variant<std::vector<BigInt>, MultiplicityFailure>;

// Evaluates a_k = prod_i (mu_i - p_k + 2) / (p_k prod_{i!=k} (p_i - p_k))
// with exact integers, checking divisibility before dividing and sign
// before accepting. Throws InterlacingViolation when (p, mu) breaks the
// interlacing chain, InvalidSpec when p itself is malformed.
MultiplicityResult multiplicities_from_roots(const std::vector<BigInt>& p,
                                             const EigenTuple& mu);

struct IntegralityReport {
  bool integral;
  EigenTuple mu;      // the s non-trivial eigenvalues, filled when integral
  DSpectrum spectrum; // full spectrum either way, intervals certify failure
};

IntegralityReport is_distance_integral(const PartitionSpec& spec);

// One published or computed solution (p, a, mu) with its derived totals.
struct SolutionRow {
  std::vector<BigInt> p;
  std::vector<BigInt> a;
  EigenTuple mu;
  BigInt n;
  BigInt part_count;

  friend bool operator==(const SolutionRow&, const SolutionRow&) = default;
};

// Builds a row from (p, a, mu), computing n and part_count.
SolutionRow make_row(std::vector<BigInt> p, std::vector<BigInt> a,
                     EigenTuple mu);

struct CheckResult {
  std::string name;
  bool pass;
  std::string detail;  // recomputed values on mismatch, empty on pass
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// Recomputes every a_k, the totals, interlacing, primitivity, the
// eigenvalue sum identity, and the full spectrum round-trip. Mismatches
// become failed checks carrying the recomputed values; nothing throws and
// nothing is silently corrected.
VerificationReport verify_row(const SolutionRow& row);

std::string to_text(const VerificationReport& report);

}  // namespace distint
