#pragma once

#include "distint/bigint.hpp"
#include "distint/familygen.hpp"
#include "distint/integrality.hpp"
#include "distint/model.hpp"
#include "distint/spectral.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace distint {

using nlohmann::json;

// Integers ride as JSON numbers while they fit in 64 bits and as decimal
// strings beyond that; the reader accepts both, so values round-trip
// exactly at any size.
inline json big_to_json(const BigInt& v) {
  if (fits_int64(v)) return v.convert_to<std::int64_t>();
  return v.str();
}

BigInt big_from_json(const json& j);

inline json vec_to_json(const std::vector<BigInt>& xs) {
  json arr = json::array();
  for (const auto& x : xs) arr.push_back(big_to_json(x));
  return arr;
}

std::vector<BigInt> vec_from_json(const json& j);

// "num" or "num/den"; exact.
std::string rational_to_string(const Rational& x);

json row_to_json(const SolutionRow& row);
SolutionRow row_from_json(const json& j);

json family_to_json(const FamilyParams& fam);

json spectrum_to_json(const DSpectrum& sp);

json report_to_json(const VerificationReport& rep);

}  // namespace distint
