#pragma once

#include "distint/bigint.hpp"
#include "distint/integrality.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace distint {

// Box to enumerate: lo_i <= p_i <= hi_i per index (strict increase and
// primitivity are enforced on top), mu_s up to and including mu_max.
struct SearchBounds {
  std::vector<BigInt> lo;
  std::vector<BigInt> hi;
  BigInt mu_max;
  std::optional<BigInt> n_max;
  std::optional<std::uint64_t> row_limit;

  std::size_t s() const { return lo.size(); }

  friend bool operator==(const SearchBounds&, const SearchBounds&) = default;
};

// Throws InvalidSpec when the box is malformed (empty, lo_i < 1, ranges
// that cannot host a strictly increasing vector, mu_max <= hi_s - 2).
void validate_bounds(const SearchBounds& bounds);

inline constexpr std::uint64_t kDefaultSearchBudget = 50'000'000;

struct SearchOptions {
  unsigned workers = 1;
  std::uint64_t budget = kDefaultSearchBudget;
  bool force = false;                   // skip the budget estimate
  std::string checkpoint_path;          // empty: no checkpointing
  std::string resume_path;              // empty: fresh run
  std::uint64_t checkpoint_every = 1024;  // units between checkpoint writes
  // Called from the ordered merge point, roughly every checkpoint_every
  // units; safe place for diagnostics.
  std::function<void(std::uint64_t units_done, std::uint64_t rows)> progress;
};

struct SearchStats {
  std::uint64_t units = 0;  // work units completed (including resumed ones)
  std::uint64_t rows = 0;   // rows emitted across all runs of this search
};

// Exactly the mu_s in (p_s - 2, mu_max] for which every count quotient is
// an integer (positivity is re-checked downstream). Residue classes from
// the divisibility conditions are merged by CRT; a trivial merged modulus
// degenerates into the plain linear scan.
std::vector<BigInt> candidate_mu_s(const std::vector<BigInt>& p,
                                   const std::vector<BigInt>& mu_head,
                                   const BigInt& mu_max);

// Number of (p, mu) candidates the box holds; saturates once it exceeds
// cap, so callers can bound the estimation work itself.
std::uint64_t estimate_candidates(const SearchBounds& bounds,
                                  std::uint64_t cap);

// Enumerates every solution in the box in lexicographic (p, mu) order,
// invoking emit for each row on the caller's thread. The order and the
// emitted bytes are independent of the worker count. Throws BoundsTooLarge
// when the estimate exceeds the budget and force is not set.
SearchStats search(const SearchBounds& bounds, const SearchOptions& options,
                   const std::function<void(const SolutionRow&)>& emit);

}  // namespace distint
