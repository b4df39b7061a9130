#include "hyperarr/arrangement.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "hyperarr/errors.hpp"
#include "hyperarr/parallel.hpp"

namespace hyperarr {

// ---------------------------------------------------------------------------
// Hyperplanes

Hyperplane Hyperplane::make(std::vector<Rational> normal, Rational offset, std::vector<Rational> generic) {
  BigInt den_lcm = 1;
  for (const auto& c : normal) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  BigInt content = 0;
  int sign = 0;
  for (const auto& c : normal) {
    const BigInt v = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    if (sign == 0 && v != 0) sign = v > 0 ? 1 : -1;
  }
  if (sign == 0) throw InvalidParams("hyperplane normal must be nonzero");
  const Rational scale = Rational(den_lcm * sign, content);

  Hyperplane h;
  h.normal.reserve(normal.size());
  for (const auto& c : normal) h.normal.emplace_back(c * scale);
  h.offset = offset * scale;
  for (auto& g : generic) g *= scale;
  while (!generic.empty() && generic.back() == 0) generic.pop_back();
  h.generic = std::move(generic);
  return h;
}

bool Hyperplane::is_rational() const { return generic.empty(); }

std::string to_string(const Hyperplane& h) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < h.normal.size(); ++i) {
    Rational c = h.normal[i];
    if (c == 0) continue;
    const bool neg = c < 0;
    if (neg) c = -c;
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    if (c != 1) os << c.get_str() << "*";
    os << "x" << (i + 1);
    first = false;
  }
  os << " = " << h.offset.get_str();
  for (std::size_t r = 0; r < h.generic.size(); ++r)
    if (h.generic[r] != 0) os << " + " << h.generic[r].get_str() << "*L" << (r + 1);
  return os.str();
}

Arrangement::Arrangement(std::size_t dim, const std::vector<Hyperplane>& hyperplanes) : dim_(dim) {
  for (const auto& h : hyperplanes) add(h);
}

bool Arrangement::add(const Hyperplane& h) {
  if (h.dim() != dim_) throw InvalidParams("hyperplane dimension does not match arrangement");
  if (std::find(hyperplanes_.begin(), hyperplanes_.end(), h) != hyperplanes_.end()) return false;
  hyperplanes_.push_back(h);
  return true;
}

std::size_t Arrangement::generic_width() const {
  std::size_t w = 0;
  for (const auto& h : hyperplanes_) w = std::max(w, h.generic.size());
  return w;
}

bool Arrangement::is_rational() const { return generic_width() == 0; }

// ---------------------------------------------------------------------------
// Families

namespace {

std::vector<Rational> linear(std::size_t n, std::size_t i, const Rational& ci, std::size_t j, const Rational& cj) {
  std::vector<Rational> v(n, Rational(0));
  v[i] += ci;
  v[j] += cj;
  return v;
}

std::vector<Rational> unit(std::size_t n, std::size_t i) {
  std::vector<Rational> v(n, Rational(0));
  v[i] = 1;
  return v;
}

void add_braid(Arrangement& arr) {
  const auto n = arr.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) arr.add(Hyperplane::make(linear(n, i, 1, j, -1)));
}

void add_coordinate(Arrangement& arr) {
  for (std::size_t i = 0; i < arr.dim(); ++i) arr.add(Hyperplane::make(unit(arr.dim(), i)));
}

// x_i - c x_j = offset for all ordered pairs i != j.
void add_ordered(Arrangement& arr, const Rational& c, const Rational& offset) {
  const auto n = arr.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) arr.add(Hyperplane::make(linear(n, i, 1, j, -c), offset));
}

std::string join(const std::vector<std::int64_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

}  // namespace

void ArrangementFamily::validate() const {
  auto need_a = [&] {
    if (a.empty()) throw InvalidParams(to_string(*this) + ": parameter list a must be nonempty");
  };
  auto need_pairs = [&] {
    need_a();
    if (a.size() != b.size()) throw InvalidParams(to_string(*this) + ": a and b must have equal length");
  };
  switch (kind) {
    case FamilyKind::Eq1:
    case FamilyKind::Eq1MinusZero:
    case FamilyKind::LogCatalan:
    case FamilyKind::HalfMult:
      need_a();
      for (auto x : a)
        if (x < 2) throw InvalidParams(to_string(*this) + ": every a_r must be at least 2");
      break;
    case FamilyKind::Difference:
      need_a();
      for (auto x : a)
        if (x < 1) throw InvalidParams(to_string(*this) + ": every a_r must be positive");
      break;
    case FamilyKind::AffineMult:
      need_pairs();
      for (std::size_t r = 0; r < a.size(); ++r)
        if (a[r] == 1 && b[r] == 0) throw InvalidParams(to_string(*this) + ": (a_r, b_r) = (1, 0) repeats the braid");
      break;
    case FamilyKind::Ratio:
      need_pairs();
      for (std::size_t r = 0; r < a.size(); ++r)
        if (a[r] < 1 || b[r] < 1 || a[r] == b[r])
          throw InvalidParams(to_string(*this) + ": need positive a_r != b_r");
      break;
    case FamilyKind::ExtendedCatalan:
      if (a_max < 1) throw InvalidParams("extcatalan: a_max must be positive");
      break;
    case FamilyKind::Braid:
    case FamilyKind::Catalan:
    case FamilyKind::Shi:
      break;
  }
}

std::string to_string(const ArrangementFamily& f) {
  switch (f.kind) {
    case FamilyKind::Braid: return "braid";
    case FamilyKind::Eq1: return "eq1:a=" + join(f.a);
    case FamilyKind::Eq1MinusZero: return "eq1minus0:a=" + join(f.a);
    case FamilyKind::Difference: return "diff:a=" + join(f.a);
    case FamilyKind::AffineMult: return "affine:a=" + join(f.a) + ";b=" + join(f.b);
    case FamilyKind::Ratio: return "ratio:a=" + join(f.a) + ";b=" + join(f.b);
    case FamilyKind::Catalan: return "catalan";
    case FamilyKind::ExtendedCatalan: return "extcatalan:amax=" + std::to_string(f.a_max);
    case FamilyKind::Shi: return "shi";
    case FamilyKind::HalfMult: return "half:a=" + join(f.a);
    case FamilyKind::LogCatalan: return "logcatalan:a=" + join(f.a);
  }
  return "?";
}

Arrangement instantiate(const ArrangementFamily& family, std::size_t n) {
  if (n < 1) throw InvalidParams("dimension must be at least 1");
  family.validate();
  Arrangement arr(n);
  switch (family.kind) {
    case FamilyKind::Braid:
      add_braid(arr);
      break;
    case FamilyKind::Eq1:
    case FamilyKind::Eq1MinusZero:
      add_braid(arr);
      if (family.kind == FamilyKind::Eq1) add_coordinate(arr);
      for (auto x : family.a) add_ordered(arr, Rational(x), 0);
      break;
    case FamilyKind::Difference:
      add_braid(arr);
      for (auto x : family.a) add_ordered(arr, 1, Rational(x));
      break;
    case FamilyKind::AffineMult:
      add_braid(arr);
      for (std::size_t r = 0; r < family.a.size(); ++r)
        add_ordered(arr, Rational(family.a[r]), Rational(family.b[r]));
      break;
    case FamilyKind::Ratio:
      add_braid(arr);
      add_coordinate(arr);
      for (std::size_t r = 0; r < family.a.size(); ++r)
        add_ordered(arr, Rational(Rational(family.b[r]) / Rational(family.a[r])), 0);
      break;
    case FamilyKind::Catalan:
      add_braid(arr);
      add_ordered(arr, 1, 1);
      break;
    case FamilyKind::ExtendedCatalan:
      add_braid(arr);
      for (std::int64_t c = 1; c <= family.a_max; ++c) add_ordered(arr, 1, Rational(c));
      break;
    case FamilyKind::Shi:
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
          arr.add(Hyperplane::make(linear(n, i, 1, j, -1), 0));
          arr.add(Hyperplane::make(linear(n, i, 1, j, -1), 1));
        }
      break;
    case FamilyKind::HalfMult:
      add_coordinate(arr);
      add_braid(arr);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          arr.add(Hyperplane::make(linear(n, i, 1, j, -Rational(family.a[0]))));
      break;
    case FamilyKind::LogCatalan: {
      // log a_r = sum_p e_{r,p} log p with the log p independent over Q, so
      // the exponent vector is an exact formal offset.
      std::vector<std::vector<std::pair<std::uint64_t, unsigned>>> factors;
      std::set<std::uint64_t> primes;
      for (auto x : family.a) {
        factors.push_back(factorize_trial(static_cast<std::uint64_t>(x)));
        for (auto [p, e] : factors.back()) primes.insert(p);
      }
      const std::vector<std::uint64_t> basis(primes.begin(), primes.end());
      add_braid(arr);
      for (const auto& f : factors) {
        std::vector<Rational> g(basis.size(), Rational(0));
        for (auto [p, e] : f)
          g[static_cast<std::size_t>(std::lower_bound(basis.begin(), basis.end(), p) - basis.begin())] = e;
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j)
            if (i != j) arr.add(Hyperplane::make(linear(n, i, 1, j, -1), 0, g));
      }
      break;
    }
  }
  return arr;
}

// ---------------------------------------------------------------------------
// Affine elimination

AffineFlat::AffineFlat(std::size_t dim, std::size_t rhs_width) : ambient_(dim), width_(rhs_width) {}

std::vector<Rational> AffineFlat::row_of(const Hyperplane& h) const {
  if (h.dim() != ambient_) throw InvalidParams("hyperplane dimension mismatch");
  if (h.generic.size() > width_) throw InvalidParams("hyperplane has a wider generic part than the flat");
  std::vector<Rational> row(ambient_ + 1 + width_, Rational(0));
  std::copy(h.normal.begin(), h.normal.end(), row.begin());
  row[ambient_] = h.offset;
  std::copy(h.generic.begin(), h.generic.end(), row.begin() + static_cast<long>(ambient_) + 1);
  return row;
}

void AffineFlat::reduce(std::vector<Rational>& row) const {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Rational c = row[pivots_[k]];
    if (c == 0) continue;
    for (std::size_t col = 0; col < row.size(); ++col)
      if (rows_[k][col] != 0) row[col] -= c * rows_[k][col];
  }
}

AffineFlat::Outcome AffineFlat::outcome_of(const std::vector<Rational>& reduced) const {
  for (std::size_t c = 0; c < ambient_; ++c)
    if (reduced[c] != 0) return Outcome::Independent;
  for (std::size_t c = ambient_; c < reduced.size(); ++c)
    if (reduced[c] != 0) return Outcome::Inconsistent;
  return Outcome::Redundant;
}

AffineFlat::Outcome AffineFlat::classify(const Hyperplane& h) const {
  auto row = row_of(h);
  reduce(row);
  return outcome_of(row);
}

AffineFlat::Outcome AffineFlat::add(const Hyperplane& h) {
  auto row = row_of(h);
  reduce(row);
  const auto outcome = outcome_of(row);
  if (outcome != Outcome::Independent) return outcome;

  std::size_t pivot = 0;
  while (row[pivot] == 0) ++pivot;
  const Rational lead = row[pivot];
  for (auto& x : row) x /= lead;
  for (auto& r : rows_) {
    const Rational c = r[pivot];
    if (c == 0) continue;
    for (std::size_t col = 0; col < r.size(); ++col)
      if (row[col] != 0) r[col] -= c * row[col];
  }
  const auto pos = static_cast<long>(std::lower_bound(pivots_.begin(), pivots_.end(), pivot) - pivots_.begin());
  pivots_.insert(pivots_.begin() + pos, pivot);
  rows_.insert(rows_.begin() + pos, std::move(row));
  return outcome;
}

// ---------------------------------------------------------------------------
// Rank, centrality, essentiality

std::size_t rank(const std::vector<Hyperplane>& hyperplanes) {
  if (hyperplanes.empty()) return 0;
  std::vector<std::vector<Rational>> rows;
  for (const auto& h : hyperplanes) rows.push_back(h.normal);
  return rational_rank(std::move(rows));
}

std::size_t rank(const Arrangement& arr) { return rank(arr.hyperplanes()); }

bool is_central(const std::vector<Hyperplane>& hyperplanes) {
  if (hyperplanes.empty()) return true;
  std::size_t width = 0;
  for (const auto& h : hyperplanes) width = std::max(width, h.generic.size());
  AffineFlat flat(hyperplanes.front().dim(), width);
  for (const auto& h : hyperplanes)
    if (flat.add(h) == AffineFlat::Outcome::Inconsistent) return false;
  return true;
}

bool is_central(const Arrangement& arr) { return is_central(arr.hyperplanes()); }

bool is_essential(const Arrangement& arr) { return rank(arr) == arr.dim(); }

// ---------------------------------------------------------------------------
// Whitney sum over central subsets

namespace {

// Accumulates (-1)^|B| into coeff[dim(B)] for every central B whose elements
// are chosen in increasing index order starting at `next`.
void walk_central(const Arrangement& arr, std::size_t next, const AffineFlat& flat, std::size_t size,
                  std::vector<std::int64_t>& coeff) {
  coeff[flat.dim()] += (size % 2) ? -1 : 1;
  for (std::size_t i = next; i < arr.size(); ++i) {
    AffineFlat child = flat;
    if (child.add(arr[i]) == AffineFlat::Outcome::Inconsistent) continue;
    walk_central(arr, i + 1, child, size + 1, coeff);
  }
}

IntPolynomial from_counts(const std::vector<std::int64_t>& coeff) {
  std::vector<BigInt> c;
  c.reserve(coeff.size());
  for (auto x : coeff) c.emplace_back(static_cast<long>(x));
  return IntPolynomial(std::move(c));
}

}  // namespace

IntPolynomial whitney_charpoly(const Arrangement& arr, const RunOptions& opts) {
  if (arr.size() > opts.whitney_limit)
    throw BudgetExceeded(std::to_string(arr.size()) + " hyperplanes exceed the Whitney limit of " +
                         std::to_string(opts.whitney_limit));
  const std::size_t n = arr.dim();
  const std::size_t width = arr.generic_width();

  // Task i covers the central subsets whose smallest element is i.
  std::vector<std::vector<std::int64_t>> partial(arr.size(), std::vector<std::int64_t>(n + 1, 0));
  parallel_for_index(arr.size(), opts.threads, [&](std::size_t i) {
    AffineFlat flat(n, width);
    if (flat.add(arr[i]) == AffineFlat::Outcome::Inconsistent) return;
    walk_central(arr, i + 1, flat, 1, partial[i]);
  });

  std::vector<std::int64_t> coeff(n + 1, 0);
  coeff[n] = 1;  // empty subset
  for (const auto& p : partial)
    for (std::size_t d = 0; d <= n; ++d) coeff[d] += p[d];
  return from_counts(coeff);
}

// ---------------------------------------------------------------------------
// Intersection poset

std::vector<PosetNode> intersection_poset(const Arrangement& arr, const RunOptions& opts) {
  if (arr.size() > opts.poset_limit)
    throw BudgetExceeded(std::to_string(arr.size()) + " hyperplanes exceed the poset limit of " +
                         std::to_string(opts.poset_limit));
  const std::size_t n = arr.dim();
  const std::size_t width = arr.generic_width();

  std::vector<PosetNode> nodes;
  std::map<std::vector<std::size_t>, std::size_t> index;
  nodes.push_back({AffineFlat(n, width), n, 1, {}});
  index[{}] = 0;

  for (std::size_t cur = 0; cur < nodes.size(); ++cur) {
    for (std::size_t h = 0; h < arr.size(); ++h) {
      const auto& closure = nodes[cur].hyperplanes;
      if (std::binary_search(closure.begin(), closure.end(), h)) continue;
      AffineFlat flat = nodes[cur].subspace;
      if (flat.add(arr[h]) != AffineFlat::Outcome::Independent) continue;
      std::vector<std::size_t> members;
      for (std::size_t g = 0; g < arr.size(); ++g)
        if (flat.classify(arr[g]) == AffineFlat::Outcome::Redundant) members.push_back(g);
      if (index.contains(members)) continue;
      index[members] = nodes.size();
      const auto d = flat.dim();
      nodes.push_back({std::move(flat), d, 0, std::move(members)});
    }
  }

  std::sort(nodes.begin() + 1, nodes.end(), [](const PosetNode& x, const PosetNode& y) {
    if (x.dim != y.dim) return x.dim > y.dim;
    return x.hyperplanes < y.hyperplanes;
  });
  // x < y in L(A) iff the closure of x is a proper subset of the closure of y.
  for (std::size_t y = 1; y < nodes.size(); ++y) {
    BigInt sum = 0;
    for (std::size_t x = 0; x < y; ++x) {
      if (nodes[x].dim <= nodes[y].dim) continue;
      const auto& cx = nodes[x].hyperplanes;
      const auto& cy = nodes[y].hyperplanes;
      if (std::includes(cy.begin(), cy.end(), cx.begin(), cx.end())) sum += nodes[x].mobius;
    }
    nodes[y].mobius = -sum;
  }
  return nodes;
}

IntPolynomial mobius_charpoly(const std::vector<PosetNode>& poset) {
  IntPolynomial out;
  for (const auto& node : poset) out += IntPolynomial::monomial(node.mobius, node.dim);
  return out;
}

// ---------------------------------------------------------------------------
// Generic-offset Whitney sum

namespace {

void walk_independent(const std::vector<Hyperplane>& forms, std::size_t next, const AffineFlat& span,
                      std::vector<std::int64_t>& coeff) {
  const auto size = span.rank();
  coeff[span.dim()] += (size % 2) ? -1 : 1;
  for (std::size_t i = next; i < forms.size(); ++i) {
    if (span.classify(forms[i]) != AffineFlat::Outcome::Independent) continue;
    AffineFlat child = span;
    child.add(forms[i]);
    walk_independent(forms, i + 1, child, coeff);
  }
}

}  // namespace

IntPolynomial generic_charpoly(const std::vector<std::vector<Rational>>& forms, std::size_t n,
                               const RunOptions& opts) {
  // Number of candidate subsets is at most sum_{k<=n} C(m, k).
  BigInt candidates = 0;
  for (std::size_t k = 0; k <= n; ++k) candidates += binomial(static_cast<long>(forms.size()), static_cast<long>(k));
  if (candidates > BigInt(1) << static_cast<unsigned>(opts.whitney_limit))
    throw BudgetExceeded("too many candidate subsets for the generic Whitney sum");

  std::vector<Hyperplane> nonzero;
  for (const auto& f : forms) {
    if (f.size() != n) throw InvalidParams("linear form has the wrong length");
    if (std::any_of(f.begin(), f.end(), [](const Rational& c) { return c != 0; }))
      nonzero.push_back(Hyperplane::make(f));
  }
  std::vector<std::int64_t> coeff(n + 1, 0);
  walk_independent(nonzero, 0, AffineFlat(n, 0), coeff);
  return from_counts(coeff);
}

// ---------------------------------------------------------------------------

BigInt zaslavsky_regions(const IntPolynomial& chi, std::size_t n) {
  const BigInt v = chi(BigInt(-1));
  return n % 2 ? BigInt(-v) : v;
}

BigInt zaslavsky_bounded(const IntPolynomial& chi, std::size_t rank) {
  const BigInt v = chi(BigInt(1));
  return rank % 2 ? BigInt(-v) : v;
}

bool deletion_restriction_check(const std::vector<std::int64_t>& a, std::size_t n, const RunOptions& opts) {
  if (n < 1) throw InvalidParams("deletion-restriction needs n >= 1");
  const auto chi = [&](const ArrangementFamily& f, std::size_t dim) {
    return dim == 0 ? IntPolynomial(BigInt(1)) : whitney_charpoly(instantiate(f, dim), opts);
  };
  const auto lhs = chi(ArrangementFamily::eq1_minus_zero(a), n);
  const auto rhs = chi(ArrangementFamily::eq1(a), n) +
                   IntPolynomial(BigInt(static_cast<unsigned long>(n))) * chi(ArrangementFamily::eq1(a), n - 1);
  return lhs == rhs;
}

}  // namespace hyperarr
