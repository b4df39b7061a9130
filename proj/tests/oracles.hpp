#pragma once

// Deliberately naive reference implementations. They share no code paths
// with the library beyond the basic value types.

#include <cstdint>
#include <random>
#include <vector>

#include "hyperarr/arrangement.hpp"
#include "hyperarr/egf.hpp"
#include "hyperarr/exactmath.hpp"
#include "hyperarr/graph.hpp"

namespace oracle {

using hyperarr::BigInt;
using hyperarr::Rational;

// s_n for every n by walking all 2^V vertex subsets.
inline std::vector<BigInt> independence_counts(const hyperarr::Graph& g) {
  const std::size_t v = g.vcount();
  std::vector<BigInt> counts(v + 1, 0);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << v); ++mask) {
    bool ok = true;
    for (std::size_t i = 0; i < v && ok; ++i)
      if (mask >> i & 1)
        for (std::size_t j = i + 1; j < v && ok; ++j)
          if ((mask >> j & 1) && g.adjacent(i, j)) ok = false;
    if (ok) counts[static_cast<std::size_t>(__builtin_popcountll(mask))] += 1;
  }
  while (counts.size() > 1 && counts.back() == 0) counts.pop_back();
  return counts;
}

inline std::int64_t residue(const Rational& x, std::int64_t q) {
  BigInt num = x.get_num() % q, den = x.get_den() % q;
  if (num < 0) num += q;
  BigInt inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), BigInt(q).get_mpz_t());
  const BigInt r = num * inv % q;
  return r.get_si();
}

// Points of F_q^n on no hyperplane, by visiting every point once.
inline BigInt offpoints(const hyperarr::Arrangement& arr, std::int64_t q) {
  const std::size_t n = arr.dim();
  std::vector<std::vector<std::int64_t>> normals;
  std::vector<std::int64_t> offsets;
  for (const auto& h : arr.hyperplanes()) {
    std::vector<std::int64_t> row;
    for (const auto& c : h.normal) row.push_back(residue(c, q));
    normals.push_back(row);
    offsets.push_back(residue(h.offset, q));
  }
  std::vector<std::int64_t> x(n, 0);
  BigInt count = 0;
  while (true) {
    bool off = true;
    for (std::size_t h = 0; h < normals.size() && off; ++h) {
      std::int64_t s = 0;
      for (std::size_t i = 0; i < n; ++i) s = (s + normals[h][i] * x[i]) % q;
      if (s == offsets[h]) off = false;
    }
    if (off) count += 1;
    std::size_t i = 0;
    while (i < n && ++x[i] == q) x[i++] = 0;
    if (i == n) break;
  }
  return count;
}

// exp of an EGF by summing f^k / k! with ordinary power series.
inline hyperarr::EgfSeries taylor_exp(const hyperarr::EgfSeries& f) {
  const std::size_t N = f.order();
  std::vector<Rational> a(N + 1), result(N + 1, Rational(0)), term(N + 1, Rational(0));
  for (std::size_t n = 0; n <= N; ++n) a[n] = f[n] / Rational(hyperarr::factorial(static_cast<unsigned>(n)));
  term[0] = 1;
  for (std::size_t k = 0; k <= N; ++k) {
    for (std::size_t n = 0; n <= N; ++n) result[n] += term[n] / Rational(hyperarr::factorial(static_cast<unsigned>(k)));
    std::vector<Rational> next(N + 1, Rational(0));
    for (std::size_t i = 0; i <= N; ++i)
      for (std::size_t j = 0; i + j <= N; ++j) next[i + j] += term[i] * a[j];
    term = next;
  }
  for (std::size_t n = 0; n <= N; ++n) result[n] *= Rational(hyperarr::factorial(static_cast<unsigned>(n)));
  return hyperarr::EgfSeries(result);
}

// Newton divided differences, expanded to monomial coefficients.
inline hyperarr::RatPolynomial newton_interpolate(const std::vector<std::pair<BigInt, BigInt>>& pts) {
  const std::size_t m = pts.size();
  std::vector<Rational> dd(m);
  for (std::size_t i = 0; i < m; ++i) dd[i] = Rational(pts[i].second);
  for (std::size_t level = 1; level < m; ++level)
    for (std::size_t i = m - 1; i >= level; --i)
      dd[i] = (dd[i] - dd[i - 1]) / Rational(pts[i].first - pts[i - level].first);
  hyperarr::RatPolynomial out, basis(Rational(1));
  for (std::size_t i = 0; i < m; ++i) {
    out += basis * dd[i];
    basis *= hyperarr::RatPolynomial(std::vector<Rational>{Rational(-pts[i].first), Rational(1)});
  }
  return out;
}

inline hyperarr::Arrangement random_arrangement(std::mt19937_64& rng, std::size_t max_dim, std::size_t max_size,
                                                int coef) {
  std::uniform_int_distribution<int> c(-coef, coef);
  std::uniform_int_distribution<std::size_t> d(1, max_dim), s(1, max_size);
  const std::size_t dim = d(rng);
  hyperarr::Arrangement arr(dim);
  const std::size_t size = s(rng);
  for (std::size_t h = 0; h < size; ++h) {
    std::vector<Rational> normal(dim);
    bool zero = true;
    while (zero) {
      zero = true;
      for (auto& x : normal) {
        x = c(rng);
        if (x != 0) zero = false;
      }
    }
    arr.add(hyperarr::Hyperplane::make(normal, Rational(c(rng))));
  }
  return arr;
}

}  // namespace oracle
