#include "hyperarr/exactmath.hpp"

#include <set>
#include <sstream>

#include "hyperarr/errors.hpp"

namespace hyperarr {

RatPolynomial to_rational(const IntPolynomial& p) {
  std::vector<Rational> c;
  c.reserve(p.coeffs().size());
  for (const auto& x : p.coeffs()) c.emplace_back(x);
  return RatPolynomial(std::move(c));
}

IntPolynomial to_integer(const RatPolynomial& p) {
  std::vector<BigInt> c;
  c.reserve(p.coeffs().size());
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    const auto& x = p.coeffs()[i];
    if (x.get_den() != 1)
      throw NonIntegerCoefficients("coefficient of t^" + std::to_string(i) + " is " + x.get_str());
    c.push_back(x.get_num());
  }
  return IntPolynomial(std::move(c));
}

namespace {

template <class T>
std::string render(const Polynomial<T>& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long i = p.degree(); i >= 0; --i) {
    T c = p.coeff(static_cast<std::size_t>(i));
    if (c == 0) continue;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    if (i == 0) {
      os << c.get_str();
      continue;
    }
    if (c != 1) os << c.get_str() << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

}  // namespace

std::string to_string(const IntPolynomial& p, const std::string& var) { return render(p, var); }
std::string to_string(const RatPolynomial& p, const std::string& var) { return render(p, var); }
std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) { return os << to_string(p); }
std::ostream& operator<<(std::ostream& os, const RatPolynomial& p) { return os << to_string(p); }

BigInt poly_eval(const IntPolynomial& p, const BigInt& t) { return p(t); }

IntPolynomial lagrange_interpolate(std::span<const std::pair<BigInt, BigInt>> samples) {
  if (samples.empty()) throw InvalidParams("interpolation needs at least one sample");
  std::set<BigInt> seen;
  for (const auto& [x, y] : samples)
    if (!seen.insert(x).second) throw InvalidParams("repeated interpolation node " + x.get_str());

  RatPolynomial result;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    RatPolynomial basis(Rational(1));
    Rational denom = 1;
    for (std::size_t j = 0; j < samples.size(); ++j) {
      if (j == i) continue;
      basis *= RatPolynomial(std::vector<Rational>{Rational(-samples[j].first), Rational(1)});
      denom *= Rational(samples[i].first - samples[j].first);
    }
    result += basis * Rational(Rational(samples[i].second) / denom);
  }
  return to_integer(result);
}

IntPolynomial falling_factorial_poly(const BigInt& shift, std::size_t length) {
  IntPolynomial out(BigInt(1));
  for (std::size_t i = 0; i < length; ++i)
    out *= IntPolynomial(std::vector<BigInt>{BigInt(-(shift + BigInt(static_cast<unsigned long>(i)))), BigInt(1)});
  return out;
}

BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

BigInt factorial(unsigned n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize_trial(std::uint64_t n, std::uint64_t prime_limit) {
  if (n == 0) throw InvalidParams("cannot factor 0");
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t d = 2; d <= prime_limit && d * d <= n; d += (d == 2 ? 1 : 2)) {
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e) out.emplace_back(d, e);
  }
  if (n > 1) {
    // No divisor up to min(prime_limit, sqrt(n)) remains.
    const auto lim = static_cast<unsigned __int128>(prime_limit);
    if (static_cast<unsigned __int128>(n) > lim * lim)
      throw FactorizationBudgetExceeded("cofactor " + std::to_string(n) + " exceeds trial-division limit");
    out.emplace_back(n, 1);
  }
  return out;
}

std::size_t rational_rank(std::vector<std::vector<Rational>> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      const Rational factor = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= factor * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace hyperarr
