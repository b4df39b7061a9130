#include "hyperarr/finitefield.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "hyperarr/errors.hpp"
#include "hyperarr/parallel.hpp"

namespace hyperarr {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m) {
  a %= m;
  if (a == 0) throw InvalidParams("zero has no inverse");
  return pow_mod(a, m - 2, m);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These twelve bases are a deterministic witness set below 3.3e24.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t next_prime(std::uint64_t n) {
  if (n < 2) return 2;
  std::uint64_t c = n + 1;
  while (!is_prime(c)) ++c;
  return c;
}

BigInt next_prime(const BigInt& n) {
  if (n < 2) return 2;
  BigInt c = n + 1;
  for (;; ++c) {
    if (c.fits_ulong_p()) {
      if (is_prime(c.get_ui())) return c;
      continue;
    }
    // Baillie-PSW plus extra Miller-Rabin rounds; no counterexample is known.
    if (mpz_probab_prime_p(c.get_mpz_t(), 40) > 0) return c;
  }
}

// ---------------------------------------------------------------------------
// Point counting

namespace {

struct ReducedHyperplane {
  std::vector<std::uint64_t> coef;
  std::uint64_t rhs;
  std::uint64_t last_inverse;  // inverse of coef.back(), or 0 when it vanishes
};

std::uint64_t reduce_mod(const BigInt& v, std::uint64_t q) {
  BigInt r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), q);
  return r.get_ui();
}

std::uint64_t reduce_mod(const Rational& v, std::uint64_t q) {
  const auto den = reduce_mod(BigInt(v.get_den()), q);
  if (den == 0) throw DegenerateModQ("denominator " + v.get_den().get_str() + " vanishes mod " + std::to_string(q));
  return mul_mod(reduce_mod(BigInt(v.get_num()), q), inv_mod(den, q), q);
}

std::vector<ReducedHyperplane> reduce_all(const Arrangement& arr, std::uint64_t q) {
  std::vector<ReducedHyperplane> out;
  for (const auto& h : arr.hyperplanes()) {
    ReducedHyperplane r;
    bool nonzero = false;
    for (const auto& c : h.normal) {
      r.coef.push_back(reduce_mod(c, q));
      nonzero |= r.coef.back() != 0;
    }
    if (!nonzero) throw DegenerateModQ("normal of " + to_string(h) + " vanishes mod " + std::to_string(q));
    r.rhs = reduce_mod(h.offset, q);
    r.last_inverse = r.coef.back() ? inv_mod(r.coef.back(), q) : 0;
    out.push_back(std::move(r));
  }
  return out;
}

class OffpointScanner {
 public:
  OffpointScanner(const std::vector<ReducedHyperplane>& hs, std::size_t dim, std::uint64_t q)
      : hs_(hs), dim_(dim), q_(q), stamp_(q, 0) {}

  // Counts completions of a point whose first `depth` coordinates produced
  // the partial sums `partial`.
  std::uint64_t count(std::size_t depth, std::vector<std::uint64_t>& partial) {
    if (depth + 1 == dim_) return count_last(partial);
    std::uint64_t total = 0;
    std::vector<std::uint64_t> next(partial.size());
    for (std::uint64_t x = 0; x < q_; ++x) {
      for (std::size_t h = 0; h < hs_.size(); ++h) next[h] = (partial[h] + mul_mod(hs_[h].coef[depth], x, q_)) % q_;
      total += count(depth + 1, next);
    }
    return total;
  }

 private:
  std::uint64_t count_last(const std::vector<std::uint64_t>& partial) {
    ++epoch_;
    std::uint64_t forbidden = 0;
    for (std::size_t h = 0; h < hs_.size(); ++h) {
      const std::uint64_t need = (hs_[h].rhs + q_ - partial[h]) % q_;
      if (hs_[h].coef.back() == 0) {
        if (need == 0) return 0;
        continue;
      }
      const std::uint64_t x = mul_mod(need, hs_[h].last_inverse, q_);
      if (stamp_[x] != epoch_) {
        stamp_[x] = epoch_;
        ++forbidden;
      }
    }
    return q_ - forbidden;
  }

  const std::vector<ReducedHyperplane>& hs_;
  std::size_t dim_;
  std::uint64_t q_;
  std::vector<std::uint64_t> stamp_;
  std::uint64_t epoch_ = 0;
};

}  // namespace

BigInt count_offpoints(const Arrangement& arr, std::uint64_t q, const RunOptions& opts) {
  if (!is_prime(q)) throw InvalidParams(std::to_string(q) + " is not prime");
  if (!arr.is_rational()) throw InvalidParams("point counting needs a rational arrangement");
  const std::size_t n = arr.dim();
  if (n == 0) return 1;
  BigInt volume;
  mpz_ui_pow_ui(volume.get_mpz_t(), q, n);
  if (volume > BigInt(static_cast<unsigned long>(opts.offpoint_budget)))
    throw BudgetExceeded("q^n = " + volume.get_str() + " exceeds the point-scan budget");

  const auto hs = reduce_all(arr, q);
  if (n == 1) {
    std::vector<std::uint64_t> zero(hs.size(), 0);
    return BigInt(static_cast<unsigned long>(OffpointScanner(hs, n, q).count(0, zero)));
  }
  std::vector<std::uint64_t> per_first(q, 0);
  parallel_for_index(q, opts.threads, [&](std::size_t x) {
    std::vector<std::uint64_t> partial(hs.size());
    for (std::size_t h = 0; h < hs.size(); ++h) partial[h] = mul_mod(hs[h].coef[0], x, q);
    per_first[x] = OffpointScanner(hs, n, q).count(1, partial);
  });
  BigInt total = 0;
  for (auto c : per_first) total += BigInt(static_cast<unsigned long>(c));
  return total;
}

// ---------------------------------------------------------------------------
// Good primes

namespace {

// Row echelon form built by insertion; each row vanishes at the pivots of
// earlier rows, so sequential reduction is enough.
template <class T, class Ops>
class Echelon {
 public:
  explicit Echelon(Ops ops) : ops_(ops) {}
  bool add(std::vector<T> row) {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const T c = row[pivots_[k]];
      if (ops_.is_zero(c)) continue;
      for (std::size_t col = 0; col < row.size(); ++col) row[col] = ops_.sub(row[col], ops_.mul(c, rows_[k][col]));
    }
    std::size_t p = 0;
    while (p < row.size() && ops_.is_zero(row[p])) ++p;
    if (p == row.size()) return false;
    const T inv = ops_.inv(row[p]);
    for (auto& x : row) x = ops_.mul(x, inv);
    rows_.push_back(std::move(row));
    pivots_.push_back(p);
    return true;
  }
  std::size_t rank() const { return rows_.size(); }

 private:
  Ops ops_;
  std::vector<std::vector<T>> rows_;
  std::vector<std::size_t> pivots_;
};

struct RationalOps {
  bool is_zero(const Rational& x) const { return x == 0; }
  Rational sub(const Rational& a, const Rational& b) const { return a - b; }
  Rational mul(const Rational& a, const Rational& b) const { return a * b; }
  Rational inv(const Rational& a) const { return 1 / a; }
};

struct ModOps {
  std::uint64_t q;
  bool is_zero(std::uint64_t x) const { return x == 0; }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + q - b) % q; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return mul_mod(a, b, q); }
  std::uint64_t inv(std::uint64_t a) const { return inv_mod(a, q); }
};

struct RankPair {
  Echelon<Rational, RationalOps> normal_q{RationalOps{}}, augmented_q{RationalOps{}};
  Echelon<std::uint64_t, ModOps> normal_p, augmented_p;
  explicit RankPair(std::uint64_t q) : normal_p(ModOps{q}), augmented_p(ModOps{q}) {}
};

bool walk_subsets(const Arrangement& arr, const std::vector<ReducedHyperplane>& red, std::size_t next,
                  const RankPair& state) {
  for (std::size_t i = next; i < arr.size(); ++i) {
    RankPair child = state;
    const auto& h = arr[i];
    std::vector<Rational> nq(h.normal), aq(h.normal);
    aq.push_back(h.offset);
    std::vector<std::uint64_t> np(red[i].coef), ap(red[i].coef);
    ap.push_back(red[i].rhs);
    child.normal_q.add(std::move(nq));
    child.augmented_q.add(std::move(aq));
    child.normal_p.add(std::move(np));
    child.augmented_p.add(std::move(ap));
    if (child.normal_q.rank() != child.normal_p.rank() || child.augmented_q.rank() != child.augmented_p.rank())
      return false;
    if (!walk_subsets(arr, red, i + 1, child)) return false;
  }
  return true;
}

}  // namespace

bool is_good_prime(const Arrangement& arr, std::uint64_t q, const RunOptions& opts) {
  if (!is_prime(q)) return false;
  if (!arr.is_rational()) throw InvalidParams("good-prime test needs a rational arrangement");
  if (arr.size() > opts.whitney_limit) throw BudgetExceeded("too many hyperplanes for the good-prime test");
  std::vector<ReducedHyperplane> red;
  try {
    red = reduce_all(arr, q);
  } catch (const DegenerateModQ&) {
    return false;
  }
  return walk_subsets(arr, red, 0, RankPair(q));
}

// ---------------------------------------------------------------------------
// Primitive roots and discrete logarithms

std::uint64_t primitive_root(std::uint64_t q) {
  if (!is_prime(q)) throw InvalidParams(std::to_string(q) + " is not prime");
  if (q == 2) return 1;
  const auto factors = factorize_trial(q - 1);
  for (std::uint64_t g = 2; g < q; ++g) {
    bool ok = true;
    for (auto [p, e] : factors)
      if (pow_mod(g, (q - 1) / p, q) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  throw NotPrimitiveRoot("no primitive root found for " + std::to_string(q));
}

std::vector<std::uint64_t> discrete_logs(std::uint64_t q, std::uint64_t g) {
  if (!is_prime(q)) throw InvalidParams(std::to_string(q) + " is not prime");
  std::vector<std::uint64_t> table(q, 0);
  std::vector<bool> seen(q, false);
  std::uint64_t cur = 1;
  const std::uint64_t base = g % q;
  for (std::uint64_t e = 0; e + 1 < q; ++e) {
    if (cur == 0 || seen[cur]) throw NotPrimitiveRoot(std::to_string(g) + " is not a primitive root mod " + std::to_string(q));
    seen[cur] = true;
    table[cur] = e;
    cur = mul_mod(cur, base, q);
  }
  return table;
}

// ---------------------------------------------------------------------------
// Multiplicative independence

ExponentMatrix ExponentMatrix::of(const std::vector<std::int64_t>& a, std::uint64_t prime_limit) {
  std::vector<std::vector<std::pair<std::uint64_t, unsigned>>> factors;
  std::set<std::uint64_t> primes;
  for (auto x : a) {
    if (x < 2) throw InvalidParams("multiplicative independence needs integers >= 2");
    factors.push_back(factorize_trial(static_cast<std::uint64_t>(x), prime_limit));
    for (auto [p, e] : factors.back()) primes.insert(p);
  }
  ExponentMatrix m;
  m.primes.assign(primes.begin(), primes.end());
  for (const auto& f : factors) {
    std::vector<std::int64_t> row(m.primes.size(), 0);
    for (auto [p, e] : f)
      row[static_cast<std::size_t>(std::lower_bound(m.primes.begin(), m.primes.end(), p) - m.primes.begin())] = e;
    m.rows.push_back(std::move(row));
  }
  return m;
}

std::size_t ExponentMatrix::rank() const {
  std::vector<std::vector<Rational>> r;
  for (const auto& row : rows) {
    std::vector<Rational> v;
    for (auto e : row) v.emplace_back(static_cast<long>(e));
    r.push_back(std::move(v));
  }
  return rational_rank(std::move(r));
}

bool mult_independent(const std::vector<std::int64_t>& a, std::uint64_t prime_limit) {
  const auto m = ExponentMatrix::of(a, prime_limit);
  return m.rank() == m.rows.size();
}

}  // namespace hyperarr
