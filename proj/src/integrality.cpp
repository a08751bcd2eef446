#include "distint/integrality.hpp"

#include "distint/errors.hpp"

#include <sstream>

namespace distint {

namespace {

void require_sizes(const std::vector<BigInt>& p) {
  if (p.empty()) throw InvalidSpec("empty size vector");
  BigInt prev = 0;
  for (const auto& v : p) {
    if (v < 1) throw InvalidSpec("part sizes must be positive");
    if (v <= prev) throw InvalidSpec("part sizes must be strictly increasing");
    prev = v;
  }
}

void require_interlacing(const std::vector<BigInt>& p, const EigenTuple& mu) {
  const std::size_t s = p.size();
  if (mu.size() != s)
    throw InvalidSpec("expected " + std::to_string(s) + " eigenvalues, got " +
                      std::to_string(mu.size()));
  for (std::size_t k = 0; k < s; ++k) {
    if (mu[k] <= p[k] - 2)
      throw InterlacingViolation("mu_" + std::to_string(k + 1) + " = " +
                                 mu[k].str() + " is not above p_" +
                                 std::to_string(k + 1) + " - 2");
    if (k + 1 < s && mu[k] >= p[k + 1] - 2)
      throw InterlacingViolation("mu_" + std::to_string(k + 1) + " = " +
                                 mu[k].str() + " is not below p_" +
                                 std::to_string(k + 2) + " - 2");
  }
}

std::string join(const std::vector<BigInt>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ' ';
    out += xs[i].str();
  }
  return out;
}

}  // namespace

MultiplicityResult multiplicities_from_roots(const std::vector<BigInt>& p,
                                             const EigenTuple& mu) {
  require_sizes(p);
  require_interlacing(p, mu);
  const std::size_t s = p.size();

  std::vector<BigInt> a;
  a.reserve(s);
  for (std::size_t k = 0; k < s; ++k) {
    BigInt num = 1, den = p[k];
    for (std::size_t i = 0; i < s; ++i) {
      num *= mu[i] - p[k] + 2;
      if (i != k) den *= p[i] - p[k];
    }
    if (num % den != 0)
      return MultiplicityFailure{MultiplicityFailure::Kind::NonInteger, k + 1};
    BigInt q = num / den;
    if (q < 1)
      return MultiplicityFailure{MultiplicityFailure::Kind::NonPositive,
                                 k + 1};
    a.push_back(std::move(q));
  }
  return a;
}

IntegralityReport is_distance_integral(const PartitionSpec& spec) {
  IntegralityReport rep;
  rep.spectrum = spectrum(spec);
  rep.integral = rep.spectrum.integral;
  if (rep.integral)
    for (const auto& e : nontrivial_roots(spec)) rep.mu.push_back(e.value);
  return rep;
}

SolutionRow make_row(std::vector<BigInt> p, std::vector<BigInt> a,
                     EigenTuple mu) {
  if (p.size() != a.size() || p.size() != mu.size())
    throw InvalidSpec("row vectors p, a, mu must have equal length");
  BigInt n = 0, r = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    n += a[i] * p[i];
    r += a[i];
  }
  return SolutionRow{std::move(p), std::move(a), std::move(mu), std::move(n),
                     std::move(r)};
}

VerificationReport verify_row(const SolutionRow& row) {
  VerificationReport rep;
  auto add = [&rep](std::string name, bool pass, std::string detail = "") {
    rep.checks.push_back({std::move(name), pass, std::move(detail)});
  };

  const std::size_t s = row.p.size();
  if (s == 0 || row.a.size() != s || row.mu.size() != s) {
    add("shape", false,
        "p, a, mu must be non-empty and of equal length; got " +
            std::to_string(s) + "/" + std::to_string(row.a.size()) + "/" +
            std::to_string(row.mu.size()));
    return rep;
  }

  bool interlacing_ok = true;
  try {
    require_sizes(row.p);
    require_interlacing(row.p, row.mu);
    add("interlacing", true);
  } catch (const std::invalid_argument& e) {
    interlacing_ok = false;
    add("interlacing", false, e.what());
  }

  if (interlacing_ok) {
    const auto res = multiplicities_from_roots(row.p, row.mu);
    if (const auto* a = std::get_if<std::vector<BigInt>>(&res)) {
      if (*a == row.a)
        add("multiplicities", true);
      else
        add("multiplicities", false, "recomputed a = " + join(*a));
    } else {
      const auto& f = std::get<MultiplicityFailure>(res);
      add("multiplicities", false,
          std::string(f.kind == MultiplicityFailure::Kind::NonInteger
                          ? "non-integer"
                          : "non-positive") +
              " quotient at k = " + std::to_string(f.k));
    }
  } else {
    add("multiplicities", false, "skipped: interlacing failed");
  }

  BigInt n = 0, r = 0;
  bool counts_positive = true;
  for (std::size_t i = 0; i < s; ++i) {
    if (row.a[i] < 1) counts_positive = false;
    n += row.a[i] * row.p[i];
    r += row.a[i];
  }
  if (n == row.n && r == row.part_count && counts_positive)
    add("totals", true);
  else
    add("totals", false,
        "recomputed n = " + n.str() + ", part count = " + r.str());

  BigInt g = 0;
  for (const auto& v : row.p) g = gcd(g, v);
  if (g == 1)
    add("primitivity", true);
  else
    add("primitivity", false, "GCD of sizes is " + g.str());

  BigInt mu_sum = 0, expected = n;
  for (const auto& v : row.mu) mu_sum += v;
  for (const auto& v : row.p) expected += v - 2;
  if (mu_sum == expected)
    add("eigenvalue-sum", true);
  else
    add("eigenvalue-sum", false,
        "sum of mu is " + mu_sum.str() + ", n + sum(p_i - 2) is " +
            expected.str());

  if (interlacing_ok && counts_positive) {
    try {
      const auto report = is_distance_integral(make_spec(row.p, row.a));
      if (report.integral && report.mu == row.mu)
        add("spectrum-roundtrip", true);
      else if (report.integral)
        add("spectrum-roundtrip", false,
            "spectrum is integral but mu = " + join(report.mu));
      else
        add("spectrum-roundtrip", false, "spectrum is not integral");
    } catch (const std::invalid_argument& e) {
      add("spectrum-roundtrip", false, e.what());
    }
  } else {
    add("spectrum-roundtrip", false, "skipped: row is malformed");
  }

  return rep;
}

std::string to_text(const VerificationReport& report) {
  std::ostringstream os;
  for (const auto& c : report.checks) {
    os << c.name << ": " << (c.pass ? "pass" : "FAIL");
    if (!c.detail.empty()) os << " (" << c.detail << ")";
    os << '\n';
  }
  return os.str();
}

}  // namespace distint
