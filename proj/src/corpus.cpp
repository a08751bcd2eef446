#include "distint/corpus.hpp"

#include "distint/errors.hpp"
#include "distint/jsonutil.hpp"

#include <sstream>

namespace distint {

namespace detail {
// defined in the generated corpus_data.cpp
extern const char* const kCorpusJsonl;
extern const std::uint64_t kCorpusChecksum;
}  // namespace detail

std::string_view corpus_raw_data() { return detail::kCorpusJsonl; }

std::uint64_t corpus_expected_checksum() { return detail::kCorpusChecksum; }

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (const char c : bytes) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return h;
}

std::vector<CorpusEntry> load_corpus() {
  const std::string_view raw = corpus_raw_data();
  if (fnv1a64(raw) != corpus_expected_checksum())
    throw CorpusCorrupt("bundled data does not match its checksum");

  std::vector<CorpusEntry> entries;
  std::istringstream in{std::string(raw)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::exception& e) {
      throw CorpusCorrupt(std::string("bundled data is not valid JSONL: ") +
                          e.what());
    }
    CorpusEntry entry;
    entry.kind = j.at("kind").get<std::string>();
    entry.source = j.at("source").get<std::string>();
    const json& payload = j.at("payload");
    if (entry.kind == "row") {
      entry.row = row_from_json(payload);
    } else if (entry.kind == "family") {
      FamilyClaim claim;
      claim.p = vec_from_json(payload.at("p"));
      claim.mu = vec_from_json(payload.at("mu"));
      claim.printed_step = big_from_json(payload.at("mu_s_slope"));
      claim.printed_slopes = vec_from_json(payload.at("slopes"));
      claim.printed_intercepts = vec_from_json(payload.at("intercepts"));
      claim.printed_n_slope = big_from_json(payload.at("n_slope"));
      claim.printed_n_intercept = big_from_json(payload.at("n_intercept"));
      entry.family = std::move(claim);
    } else {
      throw CorpusCorrupt("unknown entry kind '" + entry.kind + "'");
    }
    entries.push_back(std::move(entry));
  }
  if (entries.empty()) throw CorpusCorrupt("bundled data holds no entries");
  return entries;
}

namespace {

std::string affine(const BigInt& slope, const BigInt& intercept) {
  return slope.str() + "*t + " + intercept.str();
}

void check_family(CorpusEntry& entry) {
  const FamilyClaim& claim = *entry.family;
  FamilyParams derived;
  try {
    derived = family_params(claim.p, claim.mu);
  } catch (const NotIntegralBase& e) {
    entry.notes.push_back(std::string("base solution rejected: ") + e.what());
    entry.status = "discrepant";
    return;
  }

  auto& notes = entry.notes;
  if (derived.step != claim.printed_step)
    notes.push_back("step: printed " + claim.printed_step.str() +
                    ", derived " + derived.step.str());
  if (derived.slope != claim.printed_slopes) {
    std::string d;
    for (const auto& s : derived.slope) d += (d.empty() ? "" : " ") + s.str();
    notes.push_back("count slopes: derived " + d);
  }
  if (derived.intercept != claim.printed_intercepts) {
    std::string d;
    for (const auto& s : derived.intercept)
      d += (d.empty() ? "" : " ") + s.str();
    notes.push_back("count intercepts: derived " + d);
  }
  if (derived.step != claim.printed_n_slope ||
      derived.n_base != claim.printed_n_intercept)
    notes.push_back(
        "n(t): printed " +
        affine(claim.printed_n_slope, claim.printed_n_intercept) +
        ", derived " + affine(derived.step, derived.n_base));
  entry.status = notes.empty() ? "verified" : "discrepant";
}

}  // namespace

ErrataReport run_errata_report(std::vector<CorpusEntry>& entries) {
  ErrataReport report;
  for (auto& entry : entries) {
    entry.notes.clear();
    if (entry.kind == "row") {
      ++report.rows;
      const VerificationReport rep = verify_row(*entry.row);
      for (const auto& c : rep.checks)
        if (!c.pass)
          entry.notes.push_back(c.name +
                                (c.detail.empty() ? "" : ": " + c.detail));
      entry.status = rep.all_pass() ? "verified" : "discrepant";
    } else {
      ++report.families;
      check_family(entry);
    }
    (entry.status == "verified" ? report.verified : report.discrepant)++;
    report.entries.push_back({entry.source, entry.status, entry.notes});
  }
  return report;
}

std::string to_text(const ErrataReport& report) {
  std::ostringstream os;
  std::size_t table_rows = 0;
  for (const auto& e : report.entries) {
    if (e.source.starts_with("Table 1")) ++table_rows;
    os << e.source << ": " << e.status << '\n';
    for (const auto& note : e.notes) os << "  " << note << '\n';
  }
  os << "summary: " << report.rows << " rows and " << report.families
     << " family claims transcribed; " << report.verified << " verified, "
     << report.discrepant << " discrepant\n";
  os << "note: the accompanying text reports " << kTextClaimedSolutions
     << " solutions; the transcribed table holds " << table_rows << " rows\n";
  return os.str();
}

}  // namespace distint
