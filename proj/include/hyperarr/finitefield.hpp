#pragma once

#include <cstdint>
#include <vector>

#include "hyperarr/arrangement.hpp"
#include "hyperarr/exactmath.hpp"
#include "hyperarr/options.hpp"

namespace hyperarr {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);
/// Inverse of a modulo prime m; a must be nonzero mod m.
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m);

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(std::uint64_t n);
/// Smallest prime strictly greater than n.
std::uint64_t next_prime(std::uint64_t n);
/// Arbitrary-size variant: deterministic inside 64 bits, GMP's Baillie-PSW
/// test above (never needed by the sampling pipeline).
BigInt next_prime(const BigInt& n);

/// Emits consecutive primes strictly above a lower bound.
class PrimeSampler {
 public:
  explicit PrimeSampler(std::uint64_t lower_bound) : lower_bound_(lower_bound), last_(lower_bound) {}
  std::uint64_t lower_bound() const { return lower_bound_; }
  std::uint64_t next() { return last_ = hyperarr::next_prime(last_); }

 private:
  std::uint64_t lower_bound_;
  std::uint64_t last_;
};

/// Number of points of F_q^dim lying on no hyperplane of `arr`, by an
/// exhaustive scan parallelized over the first coordinate.
BigInt count_offpoints(const Arrangement& arr, std::uint64_t q, const RunOptions& opts = {});

/// True when reduction mod q preserves, for every subset of hyperplanes, both
/// the rank of the normals and whether the subset has a common point. For
/// such q the finite-field count equals chi(q). Subsets are enumerated, so
/// the arrangement must respect the Whitney limit.
bool is_good_prime(const Arrangement& arr, std::uint64_t q, const RunOptions& opts = {});

std::uint64_t primitive_root(std::uint64_t q);
/// table[v] = log_g(v) for v in 1..q-1 (table[0] is unused and set to 0).
/// Throws NotPrimitiveRoot when g does not generate F_q^*.
std::vector<std::uint64_t> discrete_logs(std::uint64_t q, std::uint64_t g);

/// Prime-exponent matrix of a list of integers >= 2.
struct ExponentMatrix {
  std::vector<std::uint64_t> primes;           // column labels, ascending
  std::vector<std::vector<std::int64_t>> rows;  // rows[i][c] = exponent of primes[c] in a_i

  static ExponentMatrix of(const std::vector<std::int64_t>& a, std::uint64_t prime_limit = 1'000'000);
  std::size_t rank() const;
};

/// True iff no nontrivial integer exponents give prod a_i^{e_i} = 1.
bool mult_independent(const std::vector<std::int64_t>& a, std::uint64_t prime_limit = 1'000'000);

}  // namespace hyperarr
