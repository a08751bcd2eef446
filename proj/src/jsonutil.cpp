#include "distint/jsonutil.hpp"

#include "distint/errors.hpp"

namespace distint {

BigInt big_from_json(const json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    try {
      return BigInt(s);
    } catch (const std::exception&) {
      throw ParseError("not an integer: '" + s + "'");
    }
  }
  throw ParseError("expected an integer (number or decimal string), got " +
                   std::string(j.type_name()));
}

std::vector<BigInt> vec_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("expected an array of integers");
  std::vector<BigInt> out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(big_from_json(e));
  return out;
}

std::string rational_to_string(const Rational& x) {
  const BigInt num = numerator(x), den = denominator(x);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

json row_to_json(const SolutionRow& row) {
  return json{{"p", vec_to_json(row.p)},
              {"a", vec_to_json(row.a)},
              {"mu", vec_to_json(row.mu)},
              {"n", big_to_json(row.n)},
              {"part_count", big_to_json(row.part_count)}};
}

SolutionRow row_from_json(const json& j) {
  SolutionRow row =
      make_row(vec_from_json(j.at("p")), vec_from_json(j.at("a")),
               vec_from_json(j.at("mu")));
  // Stored totals win over recomputed ones so that deliberately wrong rows
  // can round-trip into verify_row.
  if (j.contains("n")) row.n = big_from_json(j.at("n"));
  if (j.contains("part_count"))
    row.part_count = big_from_json(j.at("part_count"));
  return row;
}

json family_to_json(const FamilyParams& fam) {
  return json{{"p", vec_to_json(fam.p)},
              {"mu_head", vec_to_json(fam.mu_head)},
              {"mu_s_base", big_to_json(fam.mu_s_base)},
              {"step", big_to_json(fam.step)},
              {"d", vec_to_json(fam.d)},
              {"r", vec_to_json(fam.r)},
              {"slope", vec_to_json(fam.slope)},
              {"intercept", vec_to_json(fam.intercept)},
              {"n_base", big_to_json(fam.n_base)}};
}

json spectrum_to_json(const DSpectrum& sp) {
  json entries = json::array();
  for (const auto& e : sp.entries) {
    json item;
    if (e.exact)
      item["value"] = big_to_json(e.value);
    else
      item["interval"] = {rational_to_string(e.lo), rational_to_string(e.hi)};
    item["multiplicity"] = big_to_json(e.multiplicity);
    entries.push_back(std::move(item));
  }
  return json{{"entries", std::move(entries)}, {"integral", sp.integral}};
}

json report_to_json(const VerificationReport& rep) {
  json checks = json::array();
  for (const auto& c : rep.checks) {
    json item{{"name", c.name}, {"pass", c.pass}};
    if (!c.detail.empty()) item["detail"] = c.detail;
    checks.push_back(std::move(item));
  }
  return json{{"checks", std::move(checks)}, {"all_pass", rep.all_pass()}};
}

}  // namespace distint
