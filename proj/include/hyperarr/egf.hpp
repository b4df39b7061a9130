#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "hyperarr/errors.hpp"
#include "hyperarr/exactmath.hpp"

namespace hyperarr {

/// Truncated exponential generating function sum_{n<=N} c_n x^n / n!.
/// R is the coefficient ring: Rational, or RatPolynomial for series whose
/// coefficients are polynomials in t.
template <class R>
class Egf {
 public:
  Egf() : coeffs_(1, R(0)) {}
  explicit Egf(std::vector<R> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw InvalidParams("an EGF needs at least the constant term");
  }
  static Egf zero(std::size_t order) { return Egf(std::vector<R>(order + 1, R(0))); }

  std::size_t order() const { return coeffs_.size() - 1; }
  const R& operator[](std::size_t n) const { return coeffs_[n]; }
  R& operator[](std::size_t n) { return coeffs_[n]; }
  const std::vector<R>& coeffs() const { return coeffs_; }

  friend bool operator==(const Egf& a, const Egf& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::vector<R> coeffs_;
};

using EgfSeries = Egf<Rational>;
using PolynomialEgfSeries = Egf<RatPolynomial>;

namespace detail {

inline std::vector<Rational> pascal_row(std::size_t n) {
  std::vector<Rational> row(n + 1);
  for (std::size_t k = 0; k <= n; ++k) row[k] = Rational(binomial(static_cast<long>(n), static_cast<long>(k)));
  return row;
}

template <class R>
void require_same_order(const Egf<R>& f, const Egf<R>& g) {
  if (f.order() != g.order()) throw InvalidParams("EGF orders differ");
}

}  // namespace detail

template <class R>
Egf<R> egf_add(const Egf<R>& f, const Egf<R>& g) {
  detail::require_same_order(f, g);
  auto out = f;
  for (std::size_t n = 0; n <= f.order(); ++n) out[n] += g[n];
  return out;
}

template <class R, class S>
Egf<R> egf_scale(const Egf<R>& f, const S& scalar) {
  auto out = f;
  for (std::size_t n = 0; n <= f.order(); ++n) out[n] = out[n] * scalar;
  return out;
}

/// Binomial convolution: h_n = sum_k C(n,k) f_k g_{n-k}.
template <class R>
Egf<R> egf_mul(const Egf<R>& f, const Egf<R>& g) {
  detail::require_same_order(f, g);
  auto out = Egf<R>::zero(f.order());
  for (std::size_t n = 0; n <= f.order(); ++n) {
    const auto row = detail::pascal_row(n);
    R acc(0);
    for (std::size_t k = 0; k <= n; ++k) acc += f[k] * g[n - k] * row[k];
    out[n] = acc;
  }
  return out;
}

/// exp(f) for f with zero constant term, via g' = f' g:
/// g_{n+1} = sum_{k=0}^{n} C(n,k) f_{k+1} g_{n-k}.
template <class R>
Egf<R> egf_exp(const Egf<R>& f) {
  if (!(f[0] == R(0))) throw WrongConstantTerm("exp needs a zero constant term");
  auto g = Egf<R>::zero(f.order());
  g[0] = R(1);
  for (std::size_t n = 0; n < f.order(); ++n) {
    const auto row = detail::pascal_row(n);
    R acc(0);
    for (std::size_t k = 0; k <= n; ++k) acc += f[k + 1] * g[n - k] * row[k];
    g[n + 1] = acc;
  }
  return g;
}

/// log(g) for g with constant term 1; inverse of egf_exp.
template <class R>
Egf<R> egf_log(const Egf<R>& g) {
  if (!(g[0] == R(1))) throw WrongConstantTerm("log needs constant term 1");
  auto f = Egf<R>::zero(g.order());
  for (std::size_t n = 0; n < g.order(); ++n) {
    const auto row = detail::pascal_row(n);
    R acc = g[n + 1];
    for (std::size_t k = 0; k < n; ++k) acc -= f[k + 1] * g[n - k] * row[k];
    f[n + 1] = acc;
  }
  return f;
}

/// f^e = exp(e log f). The exponent lives in the coefficient ring, so a
/// polynomial exponent such as -(t-1)/2 is allowed for polynomial series.
template <class R>
Egf<R> egf_pow(const Egf<R>& f, const R& exponent) {
  return egf_exp(egf_scale(egf_log(f), exponent));
}

inline PolynomialEgfSeries lift(const EgfSeries& f) {
  std::vector<RatPolynomial> c;
  c.reserve(f.order() + 1);
  for (const auto& x : f.coeffs()) c.emplace_back(x);
  return PolynomialEgfSeries(std::move(c));
}

/// Substitutes t = value in every coefficient.
inline EgfSeries evaluate_at(const PolynomialEgfSeries& f, const Rational& value) {
  std::vector<Rational> c;
  c.reserve(f.order() + 1);
  for (const auto& p : f.coeffs()) c.push_back(p(value));
  return EgfSeries(std::move(c));
}

inline PolynomialEgfSeries polyegf_exp(const PolynomialEgfSeries& f) { return egf_exp(f); }
inline PolynomialEgfSeries polyegf_log(const PolynomialEgfSeries& f) { return egf_log(f); }

}  // namespace hyperarr
