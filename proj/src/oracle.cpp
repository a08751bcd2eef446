#include "distint/oracle.hpp"

#include "distint/errors.hpp"
#include "distint/spectral.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace distint {

DenseDistanceMatrix distance_matrix(const PartitionSpec& spec,
                                    std::size_t limit) {
  if (spec.n > BigInt(limit))
    throw TooLarge("matrix oracle limited to n <= " + std::to_string(limit) +
                   ", got n = " + spec.n.str());
  if (spec.part_count == 1 && spec.n >= 2)
    throw InvalidSpec("single-part graph on " + spec.n.str() +
                      " vertices is edgeless; distances are undefined");

  const auto n = static_cast<std::size_t>(spec.n.convert_to<std::int64_t>());
  // part id of each vertex, parts contiguous in spec order
  std::vector<std::size_t> part(n);
  std::size_t v = 0, id = 0;
  for (const auto& g : spec.parts) {
    const auto count = g.count.convert_to<std::int64_t>();
    const auto size = g.size.convert_to<std::int64_t>();
    for (std::int64_t c = 0; c < count; ++c, ++id)
      for (std::int64_t k = 0; k < size; ++k) part[v++] = id;
  }

  DenseDistanceMatrix m;
  m.n = n;
  m.cells.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) m.cells[i * n + j] = part[i] == part[j] ? 2 : 1;
  return m;
}

namespace {

// ---- Montgomery arithmetic modulo an odd prime below 2^62 ----

struct Mont {
  std::uint64_t p;
  std::uint64_t p_neg_inv;  // -p^{-1} mod 2^64
  std::uint64_t one;        // 2^64 mod p, Montgomery form of 1
  std::uint64_t r2;         // 2^128 mod p

  explicit Mont(std::uint64_t prime) : p(prime) {
    // Newton iteration doubles the number of correct low bits per round;
    // p odd makes p itself correct to 3 bits.
    std::uint64_t x = p;
    for (int i = 0; i < 5; ++i) x *= 2 - p * x;
    p_neg_inv = ~x + 1;
    const auto r = static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(1) << 64) % p);
    one = r;
    r2 = static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(r) * r % p);
  }

  std::uint64_t redc(unsigned __int128 t) const {
    const std::uint64_t m = static_cast<std::uint64_t>(t) * p_neg_inv;
    const std::uint64_t res = static_cast<std::uint64_t>(
        (t + static_cast<unsigned __int128>(m) * p) >> 64);
    return res >= p ? res - p : res;
  }

  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return redc(static_cast<unsigned __int128>(a) * b);
  }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    const std::uint64_t s = a + b;
    return s >= p ? s - p : s;
  }

  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
    return a >= b ? a - b : a + p - b;
  }

  std::uint64_t to_mont(std::uint64_t a) const { return mul(a % p, r2); }

  std::uint64_t from_mont(std::uint64_t a) const { return redc(a); }

  std::uint64_t pow(std::uint64_t base, std::uint64_t e) const {
    std::uint64_t acc = one;
    while (e) {
      if (e & 1) acc = mul(acc, base);
      base = mul(base, base);
      e >>= 1;
    }
    return acc;
  }

  std::uint64_t inv(std::uint64_t a) const { return pow(a, p - 2); }
};

bool is_prime_u64(std::uint64_t n) {
  if (n < 2 || n % 2 == 0) return n == 2;
  const Mont m(n);
  std::uint64_t d = n - 1;
  int r = 0;
  while (d % 2 == 0) d /= 2, ++r;
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (a % n == 0) continue;
    std::uint64_t x = m.pow(m.to_mont(a), d);
    const std::uint64_t minus_one = m.sub(0, m.one);
    if (x == m.one || x == minus_one) continue;
    bool witness = true;
    for (int i = 1; i < r; ++i) {
      x = m.mul(x, x);
      if (x == minus_one) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

// Growing list of distinct primes just below 2^62, shared across calls.
std::vector<std::uint64_t> primes_below_2_62(std::size_t count) {
  static std::mutex mtx;
  static std::vector<std::uint64_t> cache;
  static std::uint64_t next_candidate = (std::uint64_t(1) << 62) - 1;
  std::lock_guard<std::mutex> lock(mtx);
  while (cache.size() < count) {
    while (!is_prime_u64(next_candidate)) next_candidate -= 2;
    cache.push_back(next_candidate);
    next_candidate -= 2;
  }
  return {cache.begin(), cache.begin() + count};
}

// How many 62-bit primes cover coefficients of the charpoly of an n x n
// integer matrix with entries of absolute value <= 2: the x^{n-k}
// coefficient is a sum of C(n,k) principal k-minors, each bounded by
// (2 sqrt(k))^k.
std::size_t primes_needed(std::size_t n) {
  static std::mutex mtx;
  static std::map<std::size_t, std::size_t> cache;
  std::lock_guard<std::mutex> lock(mtx);
  if (auto it = cache.find(n); it != cache.end()) return it->second;

  BigInt bound = 1;
  BigInt binom = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    binom = binom * (n - k + 1) / k;
    const BigInt term =
        binom * boost::multiprecision::pow(BigInt(k), unsigned((k + 1) / 2)) *
        boost::multiprecision::pow(BigInt(2), unsigned(k));
    if (term > bound) bound = term;
  }
  bound = 2 * bound + 1;

  std::size_t count = 0;
  BigInt prod = 1;
  // Every cached prime exceeds 2^61.
  while (prod <= bound) {
    prod <<= 61;
    ++count;
  }
  cache[n] = count;
  return count;
}

// In-place similarity reduction to upper Hessenberg form, mod p.
void hessenberg_mod(std::vector<std::uint64_t>& h, std::size_t n,
                    const Mont& m) {
  for (std::size_t k = 0; k + 2 < n; ++k) {
    std::size_t piv = 0;
    for (std::size_t r = k + 1; r < n && !piv; ++r)
      if (h[r * n + k] != 0) piv = r;
    if (!piv) continue;
    if (piv != k + 1) {
      for (std::size_t j = 0; j < n; ++j)
        std::swap(h[piv * n + j], h[(k + 1) * n + j]);
      for (std::size_t i = 0; i < n; ++i)
        std::swap(h[i * n + piv], h[i * n + k + 1]);
    }
    const std::uint64_t inv = m.inv(h[(k + 1) * n + k]);
    for (std::size_t r = k + 2; r < n; ++r) {
      const std::uint64_t f = m.mul(h[r * n + k], inv);
      if (!f) continue;
      // row_r -= f * row_{k+1}; columns below k are already zero in both
      for (std::size_t j = k; j < n; ++j)
        h[r * n + j] = m.sub(h[r * n + j], m.mul(f, h[(k + 1) * n + j]));
      // compensating inverse column operation keeps the spectrum
      for (std::size_t i = 0; i < n; ++i)
        h[i * n + k + 1] = m.add(h[i * n + k + 1], m.mul(f, h[i * n + r]));
    }
  }
}

// Characteristic polynomials of leading principal minors of a Hessenberg
// matrix satisfy
//   p_k = (x - h_kk) p_{k-1} - sum_i h_ik (prod_{j=i+1..k} h_{j,j-1}) p_{i-1}
// (indices 1-based). Returns coefficients ascending, Montgomery form.
std::vector<std::uint64_t> hessenberg_charpoly(
    const std::vector<std::uint64_t>& h, std::size_t n, const Mont& m) {
  std::vector<std::vector<std::uint64_t>> p(n + 1);
  p[0] = {m.one};
  for (std::size_t k = 1; k <= n; ++k) {
    auto& cur = p[k];
    const auto& prev = p[k - 1];
    cur.assign(k + 1, 0);
    const std::uint64_t hkk = h[(k - 1) * n + (k - 1)];
    for (std::size_t t = 0; t < prev.size(); ++t) {
      cur[t + 1] = m.add(cur[t + 1], prev[t]);
      cur[t] = m.sub(cur[t], m.mul(hkk, prev[t]));
    }
    std::uint64_t subdiag = m.one;
    for (std::size_t i = k - 1; i >= 1; --i) {
      subdiag = m.mul(subdiag, h[i * n + (i - 1)]);
      if (!subdiag) break;
      const std::uint64_t w = m.mul(h[(i - 1) * n + (k - 1)], subdiag);
      if (!w) continue;
      const auto& pi = p[i - 1];
      for (std::size_t t = 0; t < pi.size(); ++t)
        cur[t] = m.sub(cur[t], m.mul(w, pi[t]));
    }
  }
  return p[n];
}

}  // namespace

IntPoly charpoly_exact(const DenseDistanceMatrix& mat) {
  const std::size_t n = mat.n;
  if (n == 0) return poly_one();

  const auto primes = primes_below_2_62(primes_needed(n));

  // residues[i] holds the full coefficient vector mod primes[i]
  std::vector<std::vector<std::uint64_t>> residues;
  residues.reserve(primes.size());
  for (const std::uint64_t prime : primes) {
    const Mont m(prime);
    std::vector<std::uint64_t> h(n * n);
    for (std::size_t i = 0; i < n * n; ++i) h[i] = m.to_mont(mat.cells[i]);
    hessenberg_mod(h, n, m);
    auto coeffs = hessenberg_charpoly(h, n, m);
    for (auto& c : coeffs) c = m.from_mont(c);
    residues.push_back(std::move(coeffs));
  }

  IntPoly out(n + 1);
  for (std::size_t t = 0; t <= n; ++t) {
    BigInt x = residues[0][t];
    BigInt modulus = primes[0];
    for (std::size_t i = 1; i < primes.size(); ++i) {
      const std::uint64_t p = primes[i];
      const Mont m(p);
      const auto m_mod_p =
          static_cast<std::uint64_t>(modulus % p);
      const auto x_mod_p = static_cast<std::uint64_t>(x % p);
      const std::uint64_t delta = m.from_mont(
          m.mul(m.to_mont(m.sub(residues[i][t] % p, x_mod_p)),
                m.inv(m.to_mont(m_mod_p))));
      x += modulus * delta;
      modulus *= p;
    }
    if (2 * x > modulus) x -= modulus;
    out[t] = std::move(x);
  }

  BigInt trace = 0;
  for (std::size_t i = 0; i < n; ++i) trace += mat.at(i, i);
  if (out[n] != 1 || (n >= 1 && out[n - 1] != -trace))
    throw std::logic_error("charpoly reconstruction failed its sanity checks");
  return out;
}

bool cross_check(const PartitionSpec& spec, std::size_t limit) {
  const IntPoly dense = charpoly_exact(distance_matrix(spec, limit));
  const IntPoly factored = expand_factored(d_polynomial_factored(spec));
  return dense == factored;
}

std::string dump_matrix(const DenseDistanceMatrix& m) {
  std::ostringstream os;
  os << m.n << '\n';
  for (std::size_t i = 0; i < m.n; ++i) {
    for (std::size_t j = 0; j < m.n; ++j) {
      if (j) os << ' ';
      os << int(m.at(i, j));
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace distint
