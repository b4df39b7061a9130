#include "hyperarr/charpoly.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "hyperarr/errors.hpp"
#include "hyperarr/finitefield.hpp"
#include "hyperarr/parallel.hpp"

namespace hyperarr {

std::optional<Graph> induced_graph(const ArrangementFamily& family, std::uint64_t q) {
  const auto k = static_cast<std::int64_t>(q);
  switch (family.kind) {
    case FamilyKind::Braid:
      return empty_graph(q);
    case FamilyKind::Eq1:
      return build_G(family.a, k - 1);
    case FamilyKind::Eq1MinusZero: {
      // Without x_i = 0 the residue 0 is a legal coordinate, adjacent to nothing.
      Graph zero(1);
      zero.set_label(0, 0);
      return disjoint_union({zero, build_G(family.a, k - 1)});
    }
    case FamilyKind::Difference:
      return build_F(family.a, k);
    case FamilyKind::Catalan:
      return build_F({1}, k);
    case FamilyKind::ExtendedCatalan: {
      std::vector<std::int64_t> steps(static_cast<std::size_t>(family.a_max));
      std::iota(steps.begin(), steps.end(), 1);
      return build_F(steps, k);
    }
    case FamilyKind::AffineMult:
      return build_F_affine(family.a, family.b, k);
    case FamilyKind::Ratio:
      return build_G_ratio(family.a, family.b, k - 1);
    case FamilyKind::Shi:
    case FamilyKind::HalfMult:
    case FamilyKind::LogCatalan:
      return std::nullopt;
  }
  return std::nullopt;
}

BigInt eval_chi_at_prime(const ArrangementFamily& family, std::size_t n, std::uint64_t q, const RunOptions& opts) {
  family.validate();
  if (!is_prime(q)) throw InvalidParams(std::to_string(q) + " is not prime");
  if (n == 0) return 1;
  if (family.kind == FamilyKind::LogCatalan)
    throw InvalidParams("the logarithmic Catalan arrangement is not rational and has no finite-field count");
  if (auto g = induced_graph(family, q)) return factorial(static_cast<unsigned>(n)) * count_independent_sets(*g, n, opts);
  return count_offpoints(instantiate(family, n), q, opts);
}

namespace {

std::vector<Sample> sample_primes(const ArrangementFamily& family, std::size_t n, std::uint64_t floor,
                                  std::size_t count, const RunOptions& opts) {
  std::vector<Sample> samples(count);
  PrimeSampler sampler(floor);
  for (auto& s : samples) s.q = sampler.next();
  RunOptions inner = opts;
  if (opts.threads > 1 && count > 1) inner.threads = 1;
  parallel_for_index(count, opts.threads, [&](std::size_t i) {
    samples[i].count = eval_chi_at_prime(family, n, samples[i].q, inner);
  });
  return samples;
}

// Families counted through a graph are symmetric under permuting coordinates,
// so their values carry the factor n!. Shi and the half-multiplier family
// only use i < j and have no such factor.
bool graph_backed(FamilyKind kind) {
  return kind != FamilyKind::Shi && kind != FamilyKind::HalfMult && kind != FamilyKind::LogCatalan;
}

bool consistent(const IntPolynomial& poly, const ArrangementFamily& family, std::size_t n,
                const std::vector<Sample>& samples) {
  if (poly.degree() != static_cast<long>(n) || !poly.is_monic()) return false;
  const BigInt nf = graph_backed(family.kind) ? factorial(static_cast<unsigned>(n)) : BigInt(1);
  for (const auto& s : samples) {
    const BigInt value = poly_eval(poly, BigInt(static_cast<unsigned long>(s.q)));
    if (value != s.count || value % nf != 0) return false;
  }
  return true;
}

}  // namespace

CharPolyResult interpolate_charpoly(const ArrangementFamily& family, std::size_t n, const InterpolationConfig& config,
                                    const RunOptions& opts) {
  family.validate();
  CharPolyResult out;
  out.family = family;
  out.n = n;
  out.floor = config.floor;
  if (n == 0) {
    out.poly = IntPolynomial(1L);
    return out;
  }
  std::uint64_t floor = config.floor;
  for (unsigned attempt = 0; attempt <= config.max_retries; ++attempt, floor *= 2) {
    auto samples = sample_primes(family, n, floor, n + 2, opts);
    const Sample check = samples.back();
    samples.pop_back();
    std::vector<std::pair<BigInt, BigInt>> points;
    for (const auto& s : samples) points.emplace_back(BigInt(static_cast<unsigned long>(s.q)), s.count);
    IntPolynomial poly;
    try {
      poly = lagrange_interpolate(points);
    } catch (const NonIntegerCoefficients&) {
      continue;
    }
    if (!consistent(poly, family, n, samples) || !consistent(poly, family, n, {check})) continue;
    out.poly = std::move(poly);
    out.samples = std::move(samples);
    out.validation_prime = check.q;
    out.validation_count = check.count;
    out.floor = floor;
    return out;
  }
  throw ThresholdNotFound("no stable interpolation for " + to_string(family) + " at n = " + std::to_string(n) +
                          " after " + std::to_string(config.max_retries) + " escalations of the prime floor");
}

// ---------------------------------------------------------------------------
// Closed forms

namespace {

void require_positive(std::size_t n) {
  if (n < 1) throw InvalidParams("closed forms need n >= 1");
}

IntPolynomial linear(long root) { return IntPolynomial(std::vector<BigInt>{BigInt(-root), BigInt(1)}); }

IntPolynomial power(const IntPolynomial& p, std::size_t e) {
  IntPolynomial out(1L);
  for (std::size_t i = 0; i < e; ++i) out *= p;
  return out;
}

}  // namespace

IntPolynomial closed_catalan(std::size_t n) {
  require_positive(n);
  return IntPolynomial::variable() * falling_factorial_poly(BigInt(static_cast<unsigned long>(n + 1)), n - 1);
}

IntPolynomial closed_extended_catalan(std::size_t n, std::int64_t a_max) {
  require_positive(n);
  if (a_max < 1) throw InvalidParams("a_max must be at least 1");
  const BigInt shift = BigInt(static_cast<unsigned long>(n)) * BigInt(static_cast<long>(a_max)) + 1;
  return IntPolynomial::variable() * falling_factorial_poly(shift, n - 1);
}

IntPolynomial closed_shi(std::size_t n) {
  require_positive(n);
  return IntPolynomial::variable() * power(linear(static_cast<long>(n)), n - 1);
}

IntPolynomial closed_prop42(std::size_t n, std::size_t m) {
  require_positive(n);
  if (m < 1) throw InvalidParams("m must be at least 1");
  return linear(1) * falling_factorial_poly(BigInt(static_cast<unsigned long>(m * n + 2)), n - 1);
}

IntPolynomial closed_prop43(std::size_t n) {
  require_positive(n);
  return linear(1) * power(linear(static_cast<long>(n + 1)), n - 1);
}

const std::vector<IntPolynomial>& reference_pair_charpolys() {
  static const std::vector<IntPolynomial> table = [] {
    auto poly = [](std::vector<long> c) {
      std::vector<BigInt> v(c.begin(), c.end());
      return linear(1) * IntPolynomial(std::move(v));
    };
    return std::vector<IntPolynomial>{
        IntPolynomial(1L),
        linear(1),
        poly({-6, 1}),
        poly({78, -17, 1}),
        poly({-1608, 386, -33, 1}),
        poly({45840, -11514, 1151, -54, 1}),
        poly({-1675440, 431004, -46840, 2675, -80, 1}),
        poly({74864160, -19515684, 2230264, -142365, 5335, -111, 1}),
    };
  }();
  return table;
}

// ---------------------------------------------------------------------------
// Identities

namespace {

std::vector<IntPolynomial> charpoly_sequence(const ArrangementFamily& family, std::size_t order,
                                             const RunOptions& opts) {
  std::vector<IntPolynomial> chi;
  for (std::size_t n = 0; n <= order; ++n) chi.push_back(interpolate_charpoly(family, n, {}, opts).poly);
  return chi;
}

PolynomialEgfSeries series_of(const std::vector<IntPolynomial>& chi) {
  std::vector<RatPolynomial> c;
  for (const auto& p : chi) c.push_back(to_rational(p));
  return PolynomialEgfSeries(std::move(c));
}

std::vector<std::vector<Rational>> extended_catalan_forms(std::size_t n, std::size_t m) {
  std::vector<std::vector<Rational>> forms;
  auto diff = [n](std::size_t i, std::size_t j) {
    std::vector<Rational> f(n, Rational(0));
    f[i] = 1;
    f[j] = -1;
    return f;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) forms.push_back(diff(i, j));
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) forms.push_back(diff(i, j));
  return forms;
}

}  // namespace

Theorem41Report theorem41_check(const std::vector<std::int64_t>& a, std::size_t n, const RunOptions& opts) {
  if (!mult_independent(a)) throw NotMultIndependent("the multipliers admit a nontrivial product relation");
  Theorem41Report out;
  out.a = a;
  out.n = n;
  out.interpolated = interpolate_charpoly(ArrangementFamily::eq1(a), n, {}, opts).poly;
  out.log_catalan = whitney_charpoly(instantiate(ArrangementFamily::log_catalan(a), n), opts);
  out.shifted = out.log_catalan.shifted(BigInt(-1));
  out.generic_matroid = generic_charpoly(extended_catalan_forms(n, a.size()), n, opts);
  out.pass = out.interpolated == out.shifted;
  return out;
}

EgfCoefficients extract_egf_coefficients(const ArrangementFamily& family, std::size_t order, const RunOptions& opts) {
  EgfCoefficients out;
  out.family = family;
  out.chi = charpoly_sequence(family, order, opts);
  const auto logs = polyegf_log(series_of(out.chi));
  for (std::size_t n = 0; n <= order; ++n) {
    const RatPolynomial& f = logs[n];
    if (n >= 2 && f.degree() > 1)
      throw ShapeViolation("f_" + std::to_string(n) + " = " + to_string(f) + " is not linear in t");
    out.f.push_back(f);
    out.slope.push_back(f.coeff(1));
    out.intercept.push_back(f.coeff(0));
  }
  return out;
}

std::vector<Rational> connected_values_at_one(const std::vector<std::int64_t>& a, std::size_t order,
                                              const RunOptions& opts) {
  const auto chi = charpoly_sequence(ArrangementFamily::eq1_minus_zero(a), order, opts);
  const auto logs = polyegf_log(series_of(chi));
  std::vector<Rational> out;
  for (std::size_t n = 0; n <= order; ++n) out.push_back(logs[n](Rational(1)));
  return out;
}

Theorem22Report theorem22_check(const std::vector<std::int64_t>& a, std::size_t order, const RunOptions& opts) {
  Theorem22Report out;
  const auto chi = charpoly_sequence(ArrangementFamily::eq1(a), order, opts);
  out.lhs = series_of(chi);
  std::vector<RatPolynomial> base;
  for (std::size_t n = 0; n <= order; ++n) {
    out.regions.push_back(zaslavsky_regions(chi[n], n));
    const Rational r(out.regions.back());
    base.emplace_back(n % 2 ? Rational(-r) : r);
  }
  const RatPolynomial exponent(std::vector<Rational>{Rational(1, 2), Rational(-1, 2)});
  out.rhs = egf_pow(PolynomialEgfSeries(std::move(base)), exponent);
  out.pass = out.lhs == out.rhs;
  return out;
}

bool deletion_restriction_interpolated(const std::vector<std::int64_t>& a, std::size_t n, const RunOptions& opts) {
  if (n < 1) throw InvalidParams("the recursion needs n >= 1");
  const auto full = interpolate_charpoly(ArrangementFamily::eq1_minus_zero(a), n, {}, opts).poly;
  const auto with_zero = interpolate_charpoly(ArrangementFamily::eq1(a), n, {}, opts).poly;
  const auto lower = interpolate_charpoly(ArrangementFamily::eq1(a), n - 1, {}, opts).poly;
  return full == with_zero + lower * BigInt(static_cast<unsigned long>(n));
}

// ---------------------------------------------------------------------------
// Union invariance

std::string to_string(UnionMode mode) {
  switch (mode) {
    case UnionMode::Thm31: return "thm3.1";
    case UnionMode::Cor32: return "cor3.2";
    case UnionMode::Thm34: return "thm3.4";
    case UnionMode::Cor36: return "cor3.6";
  }
  return "?";
}

Graph union_part_graph(UnionMode mode, const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b,
                       std::int64_t k) {
  switch (mode) {
    case UnionMode::Thm31: return build_G(a, k);
    case UnionMode::Cor32: return build_G_ratio(a, b, k);
    case UnionMode::Thm34: return build_F(a, k);
    case UnionMode::Cor36: return add_pendants(build_F(a, k));
  }
  throw InvalidParams("unknown union mode");
}

namespace {

template <class Build>
InvarianceReport compare_partitions(const std::vector<std::vector<std::int64_t>>& partitions, std::size_t n_max,
                                    Build&& build, const RunOptions& opts) {
  InvarianceReport out;
  out.partitions = partitions;
  std::map<std::int64_t, IndependenceCounts> cache;
  for (const auto& parts : partitions) {
    std::vector<IndependenceCounts> pieces;
    for (auto k : parts) {
      auto it = cache.find(k);
      if (it == cache.end()) it = cache.emplace(k, independence_counts(build(k), n_max, opts)).first;
      pieces.push_back(it->second);
    }
    const auto product = union_counts_by_convolution(pieces);
    std::vector<BigInt> row;
    for (std::size_t n = 0; n <= n_max; ++n) row.push_back(product.at(n));
    out.counts.push_back(std::move(row));
  }
  out.pass = true;
  bool prefix = true;
  for (std::size_t n = 0; n <= n_max; ++n) {
    bool same = true;
    for (const auto& row : out.counts) same = same && row[n] == out.counts.front()[n];
    out.equal.push_back(same);
    prefix = prefix && same;
    if (prefix) out.agree_through = n;
    out.pass = out.pass && same;
  }
  return out;
}

std::int64_t checked_total(const std::vector<std::int64_t>& parts) {
  if (parts.empty()) throw InvalidParams("a partition needs at least one part");
  std::int64_t total = 0;
  for (auto k : parts) {
    if (k < 1) throw InvalidParams("parts must be positive");
    total += k;
  }
  return total;
}

}  // namespace

InvarianceReport verify_union_invariance(UnionMode mode, const std::vector<std::int64_t>& a,
                                         const std::vector<std::int64_t>& b, const std::vector<std::int64_t>& parts,
                                         std::size_t n_max, const RunOptions& opts) {
  const auto total = checked_total(parts);
  if (mode == UnionMode::Thm31 || mode == UnionMode::Cor32) {
    auto std_parts = parts;
    std_parts.push_back(total);
    for (auto k : std_parts)
      if (!is_prime(static_cast<std::uint64_t>(k + 1)))
        throw NonPrimePart("k + 1 = " + std::to_string(k + 1) + " is not prime");
  }
  return compare_partitions({parts, {total}}, n_max,
                            [&](std::int64_t k) { return union_part_graph(mode, a, b, k); }, opts);
}

namespace {

std::vector<bool> essential_flags(const ArrangementFamily& family, std::size_t n_max) {
  std::vector<bool> out(n_max + 1, false);
  for (std::size_t n = 1; n <= n_max; ++n) out[n] = is_essential(instantiate(family, n));
  return out;
}

}  // namespace

EssentialityReport essentiality_invariance_probe(const std::vector<std::int64_t>& a,
                                                 const std::vector<std::int64_t>& b,
                                                 const std::vector<std::vector<std::int64_t>>& partitions,
                                                 std::size_t n_max, std::size_t egf_order, const RunOptions& opts) {
  const auto family = ArrangementFamily::affine_mult(a, b);
  family.validate();
  for (const auto& p : partitions) checked_total(p);
  EssentialityReport out;
  out.observed = compare_partitions(partitions, n_max,
                                    [&](std::int64_t k) { return build_F_affine(a, b, k); }, opts);
  out.essential = essential_flags(family, n_max);
  try {
    out.coefficients = extract_egf_coefficients(family, std::min(n_max, egf_order), opts);
    for (const auto& d : out.coefficients.slope) out.slope_vanishes.push_back(d == 0);
  } catch (const Error& e) {
    out.coefficient_note = e.what();
  }
  return out;
}

ConjectureReport probe_conjecture(Conjecture which, const ConjectureParams& params,
                                  const std::vector<std::vector<std::int64_t>>& partitions, std::size_t n_max,
                                  const RunOptions& opts) {
  for (const auto& p : partitions) checked_total(p);
  ConjectureReport out;
  out.which = which;
  if (which == Conjecture::Pendant51) {
    out.observed = compare_partitions(
        partitions, n_max, [&](std::int64_t k) { return attach_copies(build_F(params.a, k), params.pendant); }, opts);
  } else {
    out.observed = compare_partitions(
        partitions, n_max,
        [&](std::int64_t k) {
          return attach_matching(build_F_affine(params.a, params.b, k), cycle_graph(static_cast<std::size_t>(k)));
        },
        opts);
    out.essential = essential_flags(ArrangementFamily::affine_mult(params.a, params.b), n_max);
  }
  return out;
}

std::vector<std::vector<BigInt>> table1_values(const std::vector<std::pair<std::int64_t, std::int64_t>>& pairs,
                                               const std::vector<std::uint64_t>& primes, const RunOptions& opts) {
  for (auto q : primes)
    if (!is_prime(q)) throw InvalidParams(std::to_string(q) + " is not prime");
  const std::size_t cols = primes.size();
  std::vector<BigInt> cells(pairs.size() * cols);
  RunOptions inner = opts;
  inner.threads = 1;
  parallel_for_index(cells.size(), opts.threads, [&](std::size_t idx) {
    const auto& [a1, a2] = pairs[idx / cols];
    const auto q = primes[idx % cols];
    const Graph g = build_G({a1, a2}, static_cast<std::int64_t>(q) - 1);
    const BigInt scaled = 6 * count_independent_sets(g, 3, inner);
    const BigInt unit(static_cast<unsigned long>(q - 1));
    if (scaled % unit != 0) throw InvalidParams("3! s_3 is not divisible by q - 1");
    cells[idx] = scaled / unit;
  });
  std::vector<std::vector<BigInt>> out(pairs.size());
  for (std::size_t r = 0; r < pairs.size(); ++r) out[r].assign(cells.begin() + r * cols, cells.begin() + (r + 1) * cols);
  return out;
}

}  // namespace hyperarr
