#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace hyperarr {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Dense univariate polynomial in t. Coefficient i multiplies t^i; the
/// vector never ends in a zero, so the zero polynomial is the empty vector.
template <class T>
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const T& constant) : coeffs_{constant} { trim(); }
  Polynomial(long constant) : coeffs_{T(constant)} { trim(); }
  explicit Polynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Polynomial variable() { return Polynomial(std::vector<T>{T(0), T(1)}); }
  static Polynomial monomial(const T& c, std::size_t power) {
    std::vector<T> v(power + 1, T(0));
    v[power] = c;
    return Polynomial(std::move(v));
  }

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<T>& coeffs() const { return coeffs_; }
  T coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : T(0); }
  T leading() const { return coeffs_.empty() ? T(0) : coeffs_.back(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

  T operator()(const T& x) const {
    T acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  /// p(t + s).
  Polynomial shifted(const T& s) const {
    Polynomial out;
    const Polynomial lin(std::vector<T>{s, T(1)});
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) out = out * lin + Polynomial(*it);
    return out;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial& operator*=(const T& c) {
    for (auto& x : coeffs_) x *= c;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) {
    for (auto& x : a.coeffs_) x = -x;
    return a;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> out(a.coeffs_.size() + b.coeffs_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(out));
  }
  friend Polynomial operator*(Polynomial a, const T& c) { return a *= c; }
  friend Polynomial operator*(const T& c, Polynomial a) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }
  std::vector<T> coeffs_;
};

using IntPolynomial = Polynomial<BigInt>;
using RatPolynomial = Polynomial<Rational>;

RatPolynomial to_rational(const IntPolynomial& p);
/// Throws NonIntegerCoefficients when some coefficient has denominator > 1.
IntPolynomial to_integer(const RatPolynomial& p);

/// Human-readable form, e.g. "t^2 - 7*t + 6".
std::string to_string(const IntPolynomial& p, const std::string& var = "t");
std::string to_string(const RatPolynomial& p, const std::string& var = "t");
std::ostream& operator<<(std::ostream& os, const IntPolynomial& p);
std::ostream& operator<<(std::ostream& os, const RatPolynomial& p);

BigInt poly_eval(const IntPolynomial& p, const BigInt& t);

/// Unique polynomial of degree < samples.size() through the given points,
/// computed exactly over Q. Throws NonIntegerCoefficients when the result
/// is not integral and InvalidParams on empty input or repeated nodes.
IntPolynomial lagrange_interpolate(std::span<const std::pair<BigInt, BigInt>> samples);

/// (t - shift)(t - shift - 1)...(t - shift - length + 1); 1 when length = 0.
IntPolynomial falling_factorial_poly(const BigInt& shift, std::size_t length);

/// C(n, k), zero outside 0 <= k <= n.
BigInt binomial(long n, long k);
BigInt factorial(unsigned n);

/// Trial-division factorization of n >= 1 using divisors up to prime_limit.
/// A cofactor left over is accepted as prime when it is below prime_limit^2,
/// otherwise FactorizationBudgetExceeded is thrown.
std::vector<std::pair<std::uint64_t, unsigned>> factorize_trial(std::uint64_t n,
                                                                std::uint64_t prime_limit = 1'000'000);

/// Rank of a rational matrix (rows of equal length) by Gaussian elimination.
std::size_t rational_rank(std::vector<std::vector<Rational>> rows);

}  // namespace hyperarr
