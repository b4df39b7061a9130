#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyperarr/exactmath.hpp"
#include "hyperarr/options.hpp"

namespace hyperarr {

/// Affine hyperplane normal . x = offset + sum_r generic[r] * lambda_r, where
/// the lambda_r are formal reals, linearly independent over Q together with 1.
/// Purely rational hyperplanes have an empty `generic` part.
///
/// Canonical form: the normal is a primitive integer vector whose first
/// nonzero entry is positive; offset and generic parts are scaled with it.
struct Hyperplane {
  std::vector<Rational> normal;
  Rational offset;
  std::vector<Rational> generic;

  static Hyperplane make(std::vector<Rational> normal, Rational offset = 0, std::vector<Rational> generic = {});

  std::size_t dim() const { return normal.size(); }
  bool is_rational() const;
  friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
};

std::string to_string(const Hyperplane& h);

/// Duplicate-free list of hyperplanes in Q^dim (or R^dim).
class Arrangement {
 public:
  explicit Arrangement(std::size_t dim) : dim_(dim) {}
  Arrangement(std::size_t dim, const std::vector<Hyperplane>& hyperplanes);

  /// Appends h unless an equal hyperplane is present; returns whether it was added.
  bool add(const Hyperplane& h);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return hyperplanes_.size(); }
  const std::vector<Hyperplane>& hyperplanes() const { return hyperplanes_; }
  const Hyperplane& operator[](std::size_t i) const { return hyperplanes_[i]; }
  /// Width of the formal generic part shared by all hyperplanes.
  std::size_t generic_width() const;
  bool is_rational() const;

 private:
  std::size_t dim_;
  std::vector<Hyperplane> hyperplanes_;
};

enum class FamilyKind {
  Braid,         // x_i = x_j
  Eq1,           // braid, x_i = 0, x_i = a_r x_j (i != j)
  Eq1MinusZero,  // Eq1 without the coordinate hyperplanes
  Difference,    // braid, x_i - x_j = a_r (i != j)
  AffineMult,    // braid, x_i - a_r x_j = b_r (i != j)
  Ratio,         // braid, x_i = 0, a_r x_i = b_r x_j (i != j)
  Catalan,       // x_i - x_j in {0, +-1}
  ExtendedCatalan,  // x_i - x_j in {0, +-1, ..., +-a_max}
  Shi,           // x_i - x_j in {0, 1}, i < j
  HalfMult,      // x_i = 0, x_i = x_j and x_i = a x_j, all for i < j
  LogCatalan,    // x_i - x_j = 0 (i < j), x_i - x_j = log a_r (i != j), logs kept formal
};

struct ArrangementFamily {
  FamilyKind kind = FamilyKind::Braid;
  std::vector<std::int64_t> a;
  std::vector<std::int64_t> b;
  std::int64_t a_max = 0;

  static ArrangementFamily braid() { return {FamilyKind::Braid, {}, {}, 0}; }
  static ArrangementFamily eq1(std::vector<std::int64_t> a) { return {FamilyKind::Eq1, std::move(a), {}, 0}; }
  static ArrangementFamily eq1_minus_zero(std::vector<std::int64_t> a) {
    return {FamilyKind::Eq1MinusZero, std::move(a), {}, 0};
  }
  static ArrangementFamily difference(std::vector<std::int64_t> a) {
    return {FamilyKind::Difference, std::move(a), {}, 0};
  }
  static ArrangementFamily affine_mult(std::vector<std::int64_t> a, std::vector<std::int64_t> b) {
    return {FamilyKind::AffineMult, std::move(a), std::move(b), 0};
  }
  static ArrangementFamily ratio(std::vector<std::int64_t> a, std::vector<std::int64_t> b) {
    return {FamilyKind::Ratio, std::move(a), std::move(b), 0};
  }
  static ArrangementFamily catalan() { return {FamilyKind::Catalan, {}, {}, 0}; }
  static ArrangementFamily extended_catalan(std::int64_t a_max) {
    return {FamilyKind::ExtendedCatalan, {}, {}, a_max};
  }
  static ArrangementFamily shi() { return {FamilyKind::Shi, {}, {}, 0}; }
  static ArrangementFamily half_mult(std::int64_t a) { return {FamilyKind::HalfMult, {a}, {}, 0}; }
  static ArrangementFamily log_catalan(std::vector<std::int64_t> a) {
    return {FamilyKind::LogCatalan, std::move(a), {}, 0};
  }

  /// Throws InvalidParams when the parameters violate the family's convention.
  void validate() const;
  friend bool operator==(const ArrangementFamily&, const ArrangementFamily&) = default;
};

/// Mini-language form, e.g. "eq1:a=2,3" or "affine:a=2;b=1".
std::string to_string(const ArrangementFamily& f);

Arrangement instantiate(const ArrangementFamily& family, std::size_t n);

/// Solution set of an affine system kept in reduced row echelon form over Q.
/// Each row is [normal | offset | generic...]; the RREF is canonical, so two
/// systems describe the same flat iff their rows are equal.
class AffineFlat {
 public:
  enum class Outcome { Independent, Redundant, Inconsistent };

  AffineFlat(std::size_t dim, std::size_t rhs_width);

  /// Adds the equation of h. An Inconsistent outcome leaves the flat unchanged.
  Outcome add(const Hyperplane& h);
  /// What add(h) would report, without mutating.
  Outcome classify(const Hyperplane& h) const;

  std::size_t rank() const { return rows_.size(); }
  std::size_t dim() const { return ambient_ - rows_.size(); }
  const std::vector<std::vector<Rational>>& rows() const { return rows_; }
  friend bool operator==(const AffineFlat&, const AffineFlat&) = default;

 private:
  std::vector<Rational> row_of(const Hyperplane& h) const;
  void reduce(std::vector<Rational>& row) const;
  Outcome outcome_of(const std::vector<Rational>& reduced) const;

  std::size_t ambient_;
  std::size_t width_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> pivots_;
};

/// Rank of the normals of the selected hyperplanes.
std::size_t rank(const std::vector<Hyperplane>& hyperplanes);
std::size_t rank(const Arrangement& arr);
/// True iff the hyperplanes share a point; vacuously true for none.
bool is_central(const std::vector<Hyperplane>& hyperplanes);
bool is_central(const Arrangement& arr);
bool is_essential(const Arrangement& arr);

/// sum over central subsets B of (-1)^|B| t^(dim - rank B). Subtrees rooted
/// at a non-central subset are pruned, since supersets stay non-central.
IntPolynomial whitney_charpoly(const Arrangement& arr, const RunOptions& opts = {});

struct PosetNode {
  AffineFlat subspace;
  std::size_t dim = 0;
  BigInt mobius;
  /// Indices of all hyperplanes containing the flat (its closure).
  std::vector<std::size_t> hyperplanes;
};

/// All nonempty intersections, bottom element first, ordered by codimension
/// and then by closure. Möbius values mu(0, x) follow from the recursion
/// over reverse inclusion.
std::vector<PosetNode> intersection_poset(const Arrangement& arr, const RunOptions& opts = {});
IntPolynomial mobius_charpoly(const std::vector<PosetNode>& poset);

/// sum over linearly independent sub-multisets B of (-1)^|B| t^(n - |B|).
/// This is the characteristic polynomial of an arrangement whose offsets are
/// in fully general position; only the linear forms are consulted.
IntPolynomial generic_charpoly(const std::vector<std::vector<Rational>>& forms, std::size_t n,
                               const RunOptions& opts = {});

/// r = (-1)^n chi(-1).
BigInt zaslavsky_regions(const IntPolynomial& chi, std::size_t n);
/// b = (-1)^rank chi(1).
BigInt zaslavsky_bounded(const IntPolynomial& chi, std::size_t rank);

/// chi(A'_n) == chi(A_n) + n chi(A_{n-1}) for the Eq1 family, all three by
/// subset enumeration.
bool deletion_restriction_check(const std::vector<std::int64_t>& a, std::size_t n, const RunOptions& opts = {});

}  // namespace hyperarr
