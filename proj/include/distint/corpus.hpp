#pragma once

#include "distint/bigint.hpp"
#include "distint/familygen.hpp"
#include "distint/integrality.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace distint {

// A published family claim, stored exactly as printed: the slope of the
// printed mu_s(t) formula doubles as the printed step constant.
struct FamilyClaim {
  std::vector<BigInt> p;
  EigenTuple mu;  // base eigenvalue tuple
  BigInt printed_step;
  std::vector<BigInt> printed_slopes;
  std::vector<BigInt> printed_intercepts;
  BigInt printed_n_slope;
  BigInt printed_n_intercept;
};

// Verbatim transcription of one published item. The payload is evidence,
// not ground truth: provably wrong values stay as printed and are only
// flagged at verification time.
struct CorpusEntry {
  std::string kind;  // "row" | "family"
  std::string source;
  std::optional<SolutionRow> row;       // when kind == "row"
  std::optional<FamilyClaim> family;    // when kind == "family"
  std::string status = "unchecked";     // set by run_errata_report only
  std::vector<std::string> notes;
};

// Parses the bundled JSONL data after validating its checksum. Throws
// CorpusCorrupt if the data drifted from the committed transcription.
std::vector<CorpusEntry> load_corpus();

struct ErrataReport {
  struct Entry {
    std::string source;
    std::string status;
    std::vector<std::string> notes;
  };
  std::vector<Entry> entries;
  std::size_t rows = 0;
  std::size_t families = 0;
  std::size_t verified = 0;
  std::size_t discrepant = 0;

  bool clean() const { return discrepant == 0; }
};

// Recomputes every row via verify_row and re-derives every family claim,
// assigning entry statuses in place. Deterministic.
ErrataReport run_errata_report(std::vector<CorpusEntry>& entries);

std::string to_text(const ErrataReport& report);

// Bundled data and its integrity hooks, exposed for tests.
std::string_view corpus_raw_data();
std::uint64_t corpus_expected_checksum();
std::uint64_t fnv1a64(std::string_view bytes);

// The solution count stated in the prose accompanying the published table;
// the table itself holds more rows. Both figures appear in the report.
inline constexpr std::size_t kTextClaimedSolutions = 37;

}  // namespace distint
