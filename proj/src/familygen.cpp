#include "distint/familygen.hpp"

#include "distint/errors.hpp"

#include <sstream>
#include <stdexcept>

namespace distint {

FamilyParams family_params(const std::vector<BigInt>& p,
                           const EigenTuple& mu) {
  const auto base = multiplicities_from_roots(p, mu);
  const auto* a = std::get_if<std::vector<BigInt>>(&base);
  if (!a) {
    const auto& f = std::get<MultiplicityFailure>(base);
    throw NotIntegralBase(
        "base solution has a " +
        std::string(f.kind == MultiplicityFailure::Kind::NonInteger
                        ? "non-integer"
                        : "non-positive") +
        " count at k = " + std::to_string(f.k));
  }

  const std::size_t s = p.size();
  FamilyParams fam;
  fam.p = p;
  fam.mu_head.assign(mu.begin(), mu.end() - 1);
  fam.mu_s_base = mu.back();
  fam.intercept = *a;

  // Signs: the head product and the denominator both alternate as (-1)^k,
  // so the slopes come out positive; gcd/lcm run on absolute values.
  std::vector<BigInt> head_abs(s);
  fam.d.resize(s);
  fam.r.resize(s);
  for (std::size_t k = 0; k < s; ++k) {
    BigInt num = 1, den = p[k];
    for (std::size_t i = 0; i + 1 < s; ++i) num *= mu[i] - p[k] + 2;
    for (std::size_t i = 0; i < s; ++i)
      if (i != k) den *= p[i] - p[k];
    num = abs(num);
    den = abs(den);
    fam.d[k] = gcd(num, den);
    fam.r[k] = den / fam.d[k];
    head_abs[k] = num;
  }
  fam.step = lcm_all(fam.r);

  fam.slope.resize(s);
  BigInt weighted = 0;
  for (std::size_t k = 0; k < s; ++k) {
    fam.slope[k] = head_abs[k] / fam.d[k] * (fam.step / fam.r[k]);
    if (fam.slope[k] < 1)
      throw std::logic_error("family slope must be positive");
    weighted += fam.slope[k] * p[k];
  }
  if (weighted != fam.step)
    throw std::logic_error(
        "family slopes violate the vertex count identity");

  fam.n_base = 0;
  for (std::size_t k = 0; k < s; ++k) fam.n_base += fam.intercept[k] * p[k];
  return fam;
}

std::pair<PartitionSpec, EigenTuple> instantiate(const FamilyParams& fam,
                                                 const BigInt& t) {
  if (t < 0) throw InvalidSpec("family parameter t must be nonnegative");
  const std::size_t s = fam.s();
  std::vector<BigInt> counts(s);
  for (std::size_t k = 0; k < s; ++k)
    counts[k] = fam.slope[k] * t + fam.intercept[k];
  EigenTuple mu = fam.mu_head;
  mu.push_back(fam.mu_s_base + fam.step * t);
  return {make_spec(fam.p, counts), std::move(mu)};
}

std::string format_formulas(const FamilyParams& fam) {
  std::ostringstream os;
  os << "step = " << fam.step.str() << '\n';
  for (std::size_t k = 0; k < fam.s(); ++k)
    os << 'b' << (k + 1) << "(t) = " << fam.slope[k].str() << "*t + "
       << fam.intercept[k].str() << '\n';
  os << "mu" << fam.s() << "(t) = " << fam.step.str() << "*t + "
     << fam.mu_s_base.str() << '\n';
  os << "n(t) = " << fam.step.str() << "*t + " << fam.n_base.str() << '\n';
  return os.str();
}

}  // namespace distint
