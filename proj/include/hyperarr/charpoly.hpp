#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyperarr/arrangement.hpp"
#include "hyperarr/egf.hpp"
#include "hyperarr/exactmath.hpp"
#include "hyperarr/graph.hpp"
#include "hyperarr/options.hpp"

namespace hyperarr {

struct Sample {
  std::uint64_t q = 0;
  BigInt count;
  friend bool operator==(const Sample&, const Sample&) = default;
};

struct CharPolyResult {
  ArrangementFamily family;
  std::size_t n = 0;
  IntPolynomial poly;
  std::vector<Sample> samples;
  /// Extra prime where the interpolated polynomial was confirmed; 0 for n = 0.
  std::uint64_t validation_prime = 0;
  BigInt validation_count;
  /// Sampling floor that finally succeeded.
  std::uint64_t floor = 0;
};

/// The graph whose n-element independent sets correspond to off-points of
/// instantiate(family, n) over F_q, up to the factor n!. Empty for families
/// that are counted directly on the arrangement.
std::optional<Graph> induced_graph(const ArrangementFamily& family, std::uint64_t q);

/// chi(q) for the family at dimension n, as n! s_n on the induced graph or
/// by scanning F_q^n for families without one.
BigInt eval_chi_at_prime(const ArrangementFamily& family, std::size_t n, std::uint64_t q,
                         const RunOptions& opts = {});

struct InterpolationConfig {
  std::uint64_t floor = 100;
  unsigned max_retries = 6;
};

/// Samples n + 1 consecutive primes above the floor, interpolates and checks
/// the result at the next prime; on any mismatch the floor is doubled.
/// Throws ThresholdNotFound once max_retries escalations have failed.
CharPolyResult interpolate_charpoly(const ArrangementFamily& family, std::size_t n,
                                    const InterpolationConfig& config = {}, const RunOptions& opts = {});

IntPolynomial closed_catalan(std::size_t n);
IntPolynomial closed_extended_catalan(std::size_t n, std::int64_t a_max);
IntPolynomial closed_shi(std::size_t n);
IntPolynomial closed_prop42(std::size_t n, std::size_t m);
IntPolynomial closed_prop43(std::size_t n);

/// Reference polynomials chi(A_n) for a multiplicatively independent pair,
/// n = 0..7.
const std::vector<IntPolynomial>& reference_pair_charpolys();

struct Theorem41Report {
  std::vector<std::int64_t> a;
  std::size_t n = 0;
  IntPolynomial interpolated;      // chi(A_n)(t)
  IntPolynomial log_catalan;       // chi of the extended Catalan arrangement with offsets log a_r
  IntPolynomial shifted;           // log_catalan(t - 1)
  IntPolynomial generic_matroid;   // same forms with every offset independent
  bool pass = false;
};

/// Compares chi(A_n)(t) with chi(C~_n)(t - 1). Throws NotMultIndependent.
Theorem41Report theorem41_check(const std::vector<std::int64_t>& a, std::size_t n,
                                const RunOptions& opts = {});

/// f_n of log(sum chi_n x^n / n!), split as f_n = slope * t + intercept.
struct EgfCoefficients {
  ArrangementFamily family;
  std::vector<IntPolynomial> chi;    // chi_0..chi_N
  std::vector<RatPolynomial> f;      // f_0 = 0, f_1..f_N
  std::vector<Rational> slope;       // b_n (eq1) or d_n (affine)
  std::vector<Rational> intercept;   // c_n
};

/// Throws ShapeViolation when some f_n with n >= 2 is not linear in t.
EgfCoefficients extract_egf_coefficients(const ArrangementFamily& family, std::size_t order,
                                         const RunOptions& opts = {});

/// f_n(1) for log(sum chi(A'_n) x^n / n!), A'_n the eq1 family without
/// coordinate hyperplanes; expected (-1)^(n-1) (n-1)!.
std::vector<Rational> connected_values_at_one(const std::vector<std::int64_t>& a, std::size_t order,
                                              const RunOptions& opts = {});

struct Theorem22Report {
  PolynomialEgfSeries lhs;
  PolynomialEgfSeries rhs;
  std::vector<BigInt> regions;
  bool pass = false;
};

/// sum chi(A_n) x^n/n! against (sum (-1)^n r(A_n) x^n/n!)^(-(t-1)/2).
Theorem22Report theorem22_check(const std::vector<std::int64_t>& a, std::size_t order,
                                const RunOptions& opts = {});

/// chi(A'_n) = chi(A_n) + n chi(A_{n-1}) with all three polynomials interpolated.
bool deletion_restriction_interpolated(const std::vector<std::int64_t>& a, std::size_t n,
                                       const RunOptions& opts = {});

enum class UnionMode { Thm31, Cor32, Thm34, Cor36 };

std::string to_string(UnionMode mode);

/// Side-by-side independence counts of several graphs, compared per size.
struct InvarianceReport {
  std::vector<std::vector<std::int64_t>> partitions;
  std::vector<std::vector<BigInt>> counts;  // per partition, s_0..s_nmax
  std::vector<bool> equal;                  // per n, all partitions agree
  std::size_t agree_through = 0;            // largest n with equality at 0..n
  bool pass = false;
};

/// Compares the disjoint union over `parts` with the single graph on their sum.
/// Throws NonPrimePart in the G-based modes when some k + 1 is not prime.
InvarianceReport verify_union_invariance(UnionMode mode, const std::vector<std::int64_t>& a,
                                         const std::vector<std::int64_t>& b,
                                         const std::vector<std::int64_t>& parts, std::size_t n_max,
                                         const RunOptions& opts = {});

struct EssentialityReport {
  InvarianceReport observed;
  std::vector<bool> essential;  // is_essential(A_n) for n = 1..n_max, index n
  EgfCoefficients coefficients;
  /// Per n: d_n == 0 means the shifted-argument formula is not evaluated.
  std::vector<bool> slope_vanishes;
  /// Set when the coefficients could not be extracted (for example a
  /// ShapeViolation); the observed counts are still reported.
  std::string coefficient_note;
};

/// Unions of F(a, b, k) across the given partitions, alongside whether A_n is
/// essential. EGF coefficients are extracted up to min(n_max, egf_order).
EssentialityReport essentiality_invariance_probe(const std::vector<std::int64_t>& a,
                                                 const std::vector<std::int64_t>& b,
                                                 const std::vector<std::vector<std::int64_t>>& partitions,
                                                 std::size_t n_max, std::size_t egf_order = 3,
                                                 const RunOptions& opts = {});

enum class Conjecture { Pendant51, Cycle52 };

struct ConjectureParams {
  std::vector<std::int64_t> a;
  std::vector<std::int64_t> b;
  /// Subgraph hung from every vertex for the pendant conjecture.
  Graph pendant = Graph(1);
};

struct ConjectureReport {
  Conjecture which = Conjecture::Pendant51;
  InvarianceReport observed;
  std::vector<bool> essential;  // cycle conjecture only
};

/// Experimental: never asserts, only reports what the counts show.
ConjectureReport probe_conjecture(Conjecture which, const ConjectureParams& params,
                                  const std::vector<std::vector<std::int64_t>>& partitions, std::size_t n_max,
                                  const RunOptions& opts = {});

/// Graph builder used for one part in each union mode.
Graph union_part_graph(UnionMode mode, const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b,
                       std::int64_t k);

/// (3!/(q-1)) s_3 of build_G({a1, a2}, q - 1) for every pair and prime.
std::vector<std::vector<BigInt>> table1_values(const std::vector<std::pair<std::int64_t, std::int64_t>>& pairs,
                                               const std::vector<std::uint64_t>& primes,
                                               const RunOptions& opts = {});

}  // namespace hyperarr
