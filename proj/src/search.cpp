#include "distint/search.hpp"

#include "distint/errors.hpp"
#include "distint/jsonutil.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <cstdio>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <thread>

namespace distint {

void validate_bounds(const SearchBounds& bounds) {
  const std::size_t s = bounds.s();
  if (s == 0) throw InvalidSpec("search box needs at least one size range");
  if (bounds.hi.size() != s)
    throw InvalidSpec("search box lo/hi ranges differ in length");
  BigInt cur = 0;
  for (std::size_t i = 0; i < s; ++i) {
    if (bounds.lo[i] < 1) throw InvalidSpec("size lower bounds must be >= 1");
    if (bounds.hi[i] < bounds.lo[i])
      throw InvalidSpec("empty size range at index " + std::to_string(i + 1));
    cur = std::max(bounds.lo[i], BigInt(cur + 1));
    if (cur > bounds.hi[i])
      throw InvalidSpec(
          "ranges admit no strictly increasing size vector (stuck at index " +
          std::to_string(i + 1) + ")");
  }
  if (bounds.mu_max <= bounds.hi.back() - 2)
    throw InvalidSpec("mu_max must exceed hi_s - 2");
}

namespace {

BigInt mod_inverse(const BigInt& a, const BigInt& m) {
  BigInt old_r = ((a % m) + m) % m, r = m;
  BigInt old_s = 1, s = 0;
  while (r != 0) {
    const BigInt q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_s -= q * s;
    std::swap(old_s, s);
  }
  return ((old_s % m) + m) % m;
}

// One work unit: a primitive size vector plus the first s-1 eigenvalues.
struct Unit {
  std::uint64_t index = 0;
  std::vector<BigInt> p;
  std::vector<BigInt> mu_head;
};

// Lexicographic lazy enumerator over work units. Not thread-safe; callers
// serialize access.
class UnitEnumerator {
 public:
  explicit UnitEnumerator(const SearchBounds& b) : b_(b), s_(b.s()) {
    p_.resize(s_);
    head_.resize(s_ ? s_ - 1 : 0);
    alive_ = reset_p_from(0);
    if (alive_ && !p_valid()) alive_ = advance_p();
    if (alive_) reset_head();
  }

  std::optional<Unit> next() {
    if (!alive_) return std::nullopt;
    Unit u{index_++, p_, head_};
    if (!bump_head()) {
      alive_ = advance_p();
      if (alive_) reset_head();
    }
    return u;
  }

 private:
  // Fills positions i.. with their minimum legal values.
  bool reset_p_from(std::size_t i) {
    for (; i < s_; ++i) {
      const BigInt min_v =
          i ? std::max(b_.lo[i], BigInt(p_[i - 1] + 1)) : b_.lo[i];
      if (min_v > b_.hi[i]) return false;
      p_[i] = min_v;
    }
    return true;
  }

  // Next raw strictly-increasing in-range vector, lexicographically.
  bool bump_p() {
    std::size_t i = s_;
    while (i-- > 0) {
      if (p_[i] < b_.hi[i]) {
        ++p_[i];
        if (reset_p_from(i + 1)) return true;
        // a larger value here only tightens the suffix; carry instead
      }
    }
    return false;
  }

  bool p_valid() const {
    BigInt g = 0, total = 0;
    for (const auto& v : p_) {
      g = gcd(g, v);
      total += v;
    }
    if (g != 1) return false;
    // counts are at least 1, so n is at least the sum of sizes
    if (b_.n_max && total > *b_.n_max) return false;
    // a gap without interior integers hosts no eigenvalue
    for (std::size_t k = 0; k + 1 < s_; ++k)
      if (p_[k + 1] - p_[k] < 2) return false;
    return true;
  }

  bool advance_p() {
    while (bump_p())
      if (p_valid()) return true;
    return false;
  }

  void reset_head() {
    for (std::size_t k = 0; k + 1 < s_; ++k) head_[k] = p_[k] - 1;
  }

  bool bump_head() {
    std::size_t i = head_.size();
    while (i-- > 0) {
      if (head_[i] < p_[i + 1] - 3) {
        ++head_[i];
        for (std::size_t j = i + 1; j < head_.size(); ++j)
          head_[j] = p_[j] - 1;
        return true;
      }
    }
    return false;
  }

  const SearchBounds& b_;
  std::size_t s_;
  std::vector<BigInt> p_, head_;
  std::uint64_t index_ = 0;
  bool alive_ = false;
};

}  // namespace

std::vector<BigInt> candidate_mu_s(const std::vector<BigInt>& p,
                                   const std::vector<BigInt>& mu_head,
                                   const BigInt& mu_max) {
  const std::size_t s = p.size();
  if (s == 0 || mu_head.size() + 1 != s)
    throw InvalidSpec("mu_head must hold exactly s - 1 values");
  for (std::size_t k = 0; k + 1 < s; ++k)
    if (mu_head[k] <= p[k] - 2 || mu_head[k] >= p[k + 1] - 2)
      throw InterlacingViolation("mu_" + std::to_string(k + 1) +
                                 " breaks the interlacing chain");

  std::vector<BigInt> out;
  const BigInt lo = p.back() - 1;
  if (mu_max < lo) return out;

  // Merge the per-k congruences mu_s == p_k - 2 (mod |den_k| / gcd) by CRT.
  BigInt res = 0, mod = 1;
  for (std::size_t k = 0; k < s; ++k) {
    BigInt num = 1, den = p[k];
    for (std::size_t i = 0; i + 1 < s; ++i) num *= mu_head[i] - p[k] + 2;
    for (std::size_t i = 0; i < s; ++i)
      if (i != k) den *= p[i] - p[k];
    num = abs(num);
    den = abs(den);
    const BigInt m = den / gcd(num, den);
    if (m == 1) continue;
    const BigInt c = ((p[k] - 2) % m + m) % m;
    const BigInt g = gcd(mod, m);
    if ((c - res) % g != 0) return out;  // incompatible: no candidates
    const BigInt mg = m / g;
    if (mg != 1) {
      BigInt t = (c - res) / g % mg * mod_inverse(mod / g % mg, mg) % mg;
      t = (t + mg) % mg;
      res += mod * t;
    }
    mod = mod / g * m;
    res %= mod;
  }

  // Walk the residue class through (p_s - 2, mu_max]. A trivial modulus is
  // exactly the naive linear scan.
  const BigInt r0 = ((lo - res) % mod + mod) % mod;
  for (BigInt x = lo + (mod - r0) % mod; x <= mu_max; x += mod)
    out.push_back(x);
  return out;
}

std::uint64_t estimate_candidates(const SearchBounds& bounds,
                                  std::uint64_t cap) {
  validate_bounds(bounds);
  // Guard the estimation itself against boxes with astronomically many
  // size vectors that each contribute nothing.
  constexpr std::uint64_t kVisitCap = 20'000'000;
  constexpr std::uint64_t kSaturated =
      std::numeric_limits<std::uint64_t>::max();

  // Walk size vectors only; per vector the head tuples and mu_s range
  // contribute a closed-form count. Walking head tuples here would cost
  // what the estimate is supposed to predict.
  const std::size_t s = bounds.s();
  std::vector<BigInt> p(s);

  auto reset_from = [&](std::size_t i) {
    for (; i < s; ++i) {
      const BigInt min_v =
          i ? std::max(bounds.lo[i], BigInt(p[i - 1] + 1)) : bounds.lo[i];
      if (min_v > bounds.hi[i]) return false;
      p[i] = min_v;
    }
    return true;
  };
  auto bump = [&]() {
    std::size_t i = s;
    while (i-- > 0) {
      if (p[i] < bounds.hi[i]) {
        ++p[i];
        if (reset_from(i + 1)) return true;
      }
    }
    return false;
  };

  BigInt total = 0;
  const BigInt cap_big = cap;
  std::uint64_t visited = 0;
  bool have = reset_from(0);
  while (have) {
    if (++visited > kVisitCap) return kSaturated;
    BigInt g = 0, sum = 0;
    for (const auto& v : p) {
      g = gcd(g, v);
      sum += v;
    }
    bool usable = (g == 1) && (!bounds.n_max || sum <= *bounds.n_max);
    if (usable) {
      BigInt per_p = BigInt(bounds.mu_max - p.back() + 2);
      if (per_p < 0) per_p = 0;
      for (std::size_t k = 0; usable && k + 1 < s; ++k) {
        const BigInt gap = p[k + 1] - p[k] - 1;
        if (gap <= 0)
          usable = false;
        else
          per_p *= gap;
      }
      if (usable) {
        total += per_p;
        if (total > cap_big) return kSaturated;
      }
    }
    have = bump();
  }
  return total.convert_to<std::uint64_t>();
}

namespace {

std::vector<SolutionRow> process_unit(const SearchBounds& bounds,
                                      const Unit& unit) {
  std::vector<SolutionRow> rows;
  for (const BigInt& mu_s : candidate_mu_s(unit.p, unit.mu_head, bounds.mu_max)) {
    EigenTuple mu = unit.mu_head;
    mu.push_back(mu_s);
    const auto res = multiplicities_from_roots(unit.p, mu);
    const auto* a = std::get_if<std::vector<BigInt>>(&res);
    if (!a) continue;
    SolutionRow row = make_row(unit.p, *a, std::move(mu));
    if (bounds.n_max && row.n > *bounds.n_max) continue;
    if (!verify_row(row).all_pass())
      throw std::logic_error("search produced a row that fails verification");
    rows.push_back(std::move(row));
  }
  return rows;
}

json bounds_to_json(const SearchBounds& b) {
  json j{{"lo", vec_to_json(b.lo)},
         {"hi", vec_to_json(b.hi)},
         {"mu_max", big_to_json(b.mu_max)}};
  j["n_max"] = b.n_max ? big_to_json(*b.n_max) : json(nullptr);
  j["row_limit"] = b.row_limit ? json(*b.row_limit) : json(nullptr);
  return j;
}

SearchBounds bounds_from_json(const json& j) {
  SearchBounds b;
  b.lo = vec_from_json(j.at("lo"));
  b.hi = vec_from_json(j.at("hi"));
  b.mu_max = big_from_json(j.at("mu_max"));
  if (!j.at("n_max").is_null()) b.n_max = big_from_json(j.at("n_max"));
  if (!j.at("row_limit").is_null())
    b.row_limit = j.at("row_limit").get<std::uint64_t>();
  return b;
}

struct Checkpoint {
  std::optional<std::uint64_t> last_index;  // empty: nothing completed yet
  std::vector<BigInt> p, mu_head;
  std::uint64_t rows_emitted = 0;
  // A row cap can stop emission mid-unit; the watermark then stays on the
  // previous unit and this counts the rows of the next one already delivered.
  std::uint64_t rows_into_next = 0;
};

void write_checkpoint(const std::string& path, const SearchBounds& bounds,
                      const Checkpoint& cp) {
  json j;
  j["bounds"] = bounds_to_json(bounds);
  if (cp.last_index) {
    j["last_completed_prefix"] = json{{"index", *cp.last_index},
                                      {"p", vec_to_json(cp.p)},
                                      {"mu_head", vec_to_json(cp.mu_head)}};
  } else {
    j["last_completed_prefix"] = nullptr;
  }
  j["rows_emitted"] = cp.rows_emitted;
  j["rows_into_next_unit"] = cp.rows_into_next;
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw ParseError("cannot write checkpoint file '" + path + "'");
    out << j.dump() << '\n';
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw ParseError("cannot replace checkpoint file '" + path + "'");
}

std::optional<Checkpoint> read_checkpoint(const std::string& path,
                                          const SearchBounds& bounds) {
  std::ifstream in(path);
  if (!in) return std::nullopt;  // nothing to resume yet
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError("checkpoint file '" + path + "' is not valid JSON: " +
                     e.what());
  }
  // row_limit is a stop knob, not part of the box: a capped run may be
  // resumed with a higher cap or none at all.
  SearchBounds stored = bounds_from_json(j.at("bounds"));
  stored.row_limit = bounds.row_limit;
  if (stored != bounds)
    throw ParseError("checkpoint file '" + path +
                     "' was written for different bounds");
  Checkpoint cp;
  cp.rows_emitted = j.at("rows_emitted").get<std::uint64_t>();
  cp.rows_into_next = j.value("rows_into_next_unit", std::uint64_t{0});
  const json& prefix = j.at("last_completed_prefix");
  if (!prefix.is_null()) {
    cp.last_index = prefix.at("index").get<std::uint64_t>();
    cp.p = vec_from_json(prefix.at("p"));
    cp.mu_head = vec_from_json(prefix.at("mu_head"));
  }
  return cp;
}

}  // namespace

SearchStats search(const SearchBounds& bounds, const SearchOptions& options,
                   const std::function<void(const SolutionRow&)>& emit) {
  validate_bounds(bounds);
  if (!options.force) {
    const std::uint64_t est = estimate_candidates(bounds, options.budget);
    if (est > options.budget)
      throw BoundsTooLarge(
          "estimated " +
          (est == std::numeric_limits<std::uint64_t>::max()
               ? std::string("more than ") + std::to_string(options.budget)
               : std::to_string(est)) +
          " candidates, over the budget of " + std::to_string(options.budget) +
          "; raise the budget or force the run");
  }

  Checkpoint cp;
  if (!options.resume_path.empty()) {
    if (auto loaded = read_checkpoint(options.resume_path, bounds))
      cp = std::move(*loaded);
  }

  const std::uint64_t row_cap =
      bounds.row_limit ? *bounds.row_limit
                       : std::numeric_limits<std::uint64_t>::max();
  std::uint64_t rows_total = cp.rows_emitted;
  if (rows_total > row_cap) rows_total = row_cap;

  UnitEnumerator units(bounds);
  std::uint64_t next_expected = 0;
  if (cp.last_index) {
    // Re-walk the already-finished prefix without processing it.
    for (std::uint64_t i = 0; i <= *cp.last_index; ++i)
      if (!units.next()) break;
    next_expected = *cp.last_index + 1;
  }

  const std::string& cp_path = !options.checkpoint_path.empty()
                                   ? options.checkpoint_path
                                   : options.resume_path;
  // Rows of the first processed unit already delivered by the capped run
  // this one resumes; replayed silently so the joined streams are exact.
  std::uint64_t skip_next = cp.rows_into_next;
  std::uint64_t since_checkpoint = 0;
  auto complete_unit = [&](const Unit& unit,
                           const std::vector<SolutionRow>& rows) {
    std::uint64_t taken = std::min<std::uint64_t>(skip_next, rows.size());
    skip_next = 0;
    for (std::uint64_t i = taken; i < rows.size(); ++i) {
      if (rows_total >= row_cap) break;
      emit(rows[i]);
      ++taken;
      ++rows_total;
    }
    if (taken == rows.size()) {
      cp.last_index = unit.index;
      cp.p = unit.p;
      cp.mu_head = unit.mu_head;
      cp.rows_into_next = 0;
      ++next_expected;
    } else {
      // The cap cut this unit short: keep the previous watermark.
      cp.rows_into_next = taken;
    }
    cp.rows_emitted = rows_total;
    if (++since_checkpoint >= options.checkpoint_every) {
      since_checkpoint = 0;
      if (!cp_path.empty()) write_checkpoint(cp_path, bounds, cp);
      if (options.progress) options.progress(unit.index + 1, rows_total);
    }
    return rows_total >= row_cap;  // true: stop, the limit is reached
  };

  if (options.workers <= 1) {
    while (auto unit = units.next()) {
      if (complete_unit(*unit, process_unit(bounds, *unit))) break;
    }
  } else {
    std::mutex enum_mtx;
    std::mutex res_mtx;
    std::condition_variable res_cv;
    std::map<std::uint64_t, std::pair<Unit, std::vector<SolutionRow>>> done;
    std::atomic<bool> stop{false};
    std::atomic<unsigned> active{options.workers};
    std::exception_ptr failure;  // guarded by res_mtx
    const std::size_t buffer_cap = options.workers * std::size_t(4) + 64;

    auto worker = [&]() {
      try {
        while (!stop.load(std::memory_order_relaxed)) {
          {
            // Bounded reorder buffer: pause before claiming new work while
            // the merger is behind. Completed units are never gated, so the
            // unit the merger waits for always lands.
            std::unique_lock lk(res_mtx);
            res_cv.wait(lk, [&] {
              return done.size() < buffer_cap ||
                     stop.load(std::memory_order_relaxed);
            });
            if (stop.load(std::memory_order_relaxed)) break;
          }
          std::optional<Unit> unit;
          {
            std::lock_guard lk(enum_mtx);
            unit = units.next();
          }
          if (!unit) break;
          auto rows = process_unit(bounds, *unit);
          {
            std::lock_guard lk(res_mtx);
            done[unit->index] = {std::move(*unit), std::move(rows)};
          }
          res_cv.notify_all();
        }
      } catch (...) {
        {
          std::lock_guard lk(res_mtx);
          if (!failure) failure = std::current_exception();
        }
        stop.store(true);
      }
      active.fetch_sub(1);
      res_cv.notify_all();
    };

    std::vector<std::thread> pool;
    pool.reserve(options.workers);
    for (unsigned i = 0; i < options.workers; ++i) pool.emplace_back(worker);

    try {
      while (true) {
        std::pair<Unit, std::vector<SolutionRow>> item;
        {
          std::unique_lock lk(res_mtx);
          res_cv.wait(lk, [&] {
            return done.count(next_expected) || active.load() == 0;
          });
          const auto it = done.find(next_expected);
          if (it == done.end()) break;  // drained: sequence complete or error
          item = std::move(it->second);
          done.erase(it);
        }
        res_cv.notify_all();
        if (complete_unit(item.first, item.second)) break;
      }
    } catch (...) {
      std::lock_guard lk(res_mtx);
      if (!failure) failure = std::current_exception();
    }
    stop.store(true);
    res_cv.notify_all();
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
  }

  if (!cp_path.empty()) write_checkpoint(cp_path, bounds, cp);
  if (options.progress) options.progress(next_expected, rows_total);
  return SearchStats{next_expected, rows_total};
}

}  // namespace distint
