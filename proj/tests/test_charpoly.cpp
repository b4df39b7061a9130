#include <doctest.h>

#include "hyperarr/charpoly.hpp"
#include "hyperarr/errors.hpp"
#include "hyperarr/finitefield.hpp"
#include "oracles.hpp"

using namespace hyperarr;

namespace {

IntPolynomial ip(std::vector<long> c) { return IntPolynomial(std::vector<BigInt>(c.begin(), c.end())); }
IntPolynomial lin(long root) { return ip({-root, 1}); }

const IntPolynomial chi3 = lin(1) * ip({78, -17, 1});

}  // namespace

TEST_CASE("eval_chi_at_prime") {
  CHECK(eval_chi_at_prime(ArrangementFamily::eq1({2, 3}), 3, 199) == 7'186'608);
  CHECK(eval_chi_at_prime(ArrangementFamily::eq1({2, 3}), 2, 23) == 374);
  CHECK(eval_chi_at_prime(ArrangementFamily::catalan(), 1, 5) == 5);
  CHECK(eval_chi_at_prime(ArrangementFamily::eq1({2, 3}), 0, 23) == 1);
}

TEST_CASE("induced graphs reproduce off-point counts") {
  const std::vector<ArrangementFamily> families{
      ArrangementFamily::braid(),           ArrangementFamily::catalan(),
      ArrangementFamily::eq1({2, 3}),       ArrangementFamily::eq1_minus_zero({2}),
      ArrangementFamily::difference({1, 3}), ArrangementFamily::extended_catalan(2),
      ArrangementFamily::affine_mult({2}, {1}), ArrangementFamily::ratio({2}, {3}),
      ArrangementFamily::shi(),             ArrangementFamily::half_mult(2)};
  for (const auto& f : families)
    for (std::uint64_t q : {17, 19})
      for (std::size_t n = 1; n <= 3; ++n)
        CHECK_MESSAGE(eval_chi_at_prime(f, n, q) == oracle::offpoints(instantiate(f, n), static_cast<std::int64_t>(q)),
                      to_string(f) << " n=" << n << " q=" << q);
  CHECK_FALSE(induced_graph(ArrangementFamily::shi(), 17).has_value());
  CHECK_FALSE(induced_graph(ArrangementFamily::log_catalan({2}), 17).has_value());
  CHECK_THROWS_AS(eval_chi_at_prime(ArrangementFamily::log_catalan({2}), 2, 17), InvalidParams);
}

TEST_CASE("interpolate_charpoly") {
  const auto r = interpolate_charpoly(ArrangementFamily::eq1({2, 3}), 3);
  CHECK(r.poly == chi3);
  CHECK(r.samples.size() == 4);
  CHECK(r.samples.front().q == 101);
  CHECK(r.validation_prime == 113);
  CHECK(r.validation_count == poly_eval(chi3, 113));
  CHECK(r.floor == 100);

  CHECK(interpolate_charpoly(ArrangementFamily::eq1({3, 5}), 3).poly == chi3);
  const auto dependent = interpolate_charpoly(ArrangementFamily::eq1({2, 4}), 3).poly;
  CHECK(dependent != chi3);
  for (std::uint64_t q : {199}) CHECK(poly_eval(dependent, q) == BigInt(36290) * (q - 1));

  const auto zero = interpolate_charpoly(ArrangementFamily::eq1({2, 3}), 0);
  CHECK(zero.poly == ip({1}));
  CHECK(zero.validation_prime == 0);
  CHECK(interpolate_charpoly(ArrangementFamily::eq1({2, 3}), 2).poly == lin(1) * lin(6));
}

TEST_CASE("escalation gives up with ThresholdNotFound") {
  // Below the point where the counts become polynomial, with no room to grow.
  InterpolationConfig cfg;
  cfg.floor = 2;
  cfg.max_retries = 0;
  CHECK_THROWS_AS(interpolate_charpoly(ArrangementFamily::eq1({2, 3}), 3, cfg), ThresholdNotFound);
  cfg.max_retries = 6;
  const auto r = interpolate_charpoly(ArrangementFamily::eq1({2, 3}), 3, cfg);
  CHECK(r.poly == chi3);
  CHECK(r.floor > 2);
}

TEST_CASE("interpolation ignores the thread count") {
  RunOptions many;
  many.threads = 8;
  const auto one = interpolate_charpoly(ArrangementFamily::eq1({2, 5}), 3);
  const auto eight = interpolate_charpoly(ArrangementFamily::eq1({2, 5}), 3, {}, many);
  CHECK(one.poly == eight.poly);
  CHECK(one.samples == eight.samples);
}

TEST_CASE("closed forms") {
  CHECK(closed_catalan(2) == ip({0, -3, 1}));
  CHECK(closed_shi(2) == ip({0, -2, 1}));
  CHECK(closed_prop43(2) == lin(1) * lin(3));
  CHECK(closed_extended_catalan(2, 1) == closed_catalan(2));
  CHECK(closed_catalan(3) == ip({0, 1}) * lin(4) * lin(5));

  // The half-multiplier closed form against the Whitney sum of its four lines.
  const auto P = [](std::vector<long> c) {
    return Hyperplane::make(std::vector<Rational>(c.begin(), c.end()), Rational(0));
  };
  CHECK(whitney_charpoly(Arrangement(2, {P({1, 0}), P({0, 1}), P({1, -1}), P({1, -2})})) == closed_prop43(2));

  for (std::size_t n = 1; n <= 3; ++n) {
    CHECK(interpolate_charpoly(ArrangementFamily::catalan(), n).poly == closed_catalan(n));
    CHECK(interpolate_charpoly(ArrangementFamily::shi(), n).poly == closed_shi(n));
    CHECK(interpolate_charpoly(ArrangementFamily::extended_catalan(2), n).poly == closed_extended_catalan(n, 2));
    CHECK(interpolate_charpoly(ArrangementFamily::half_mult(2), n).poly == closed_prop43(n));
    CHECK(interpolate_charpoly(ArrangementFamily::eq1({2}), n).poly == closed_prop42(n, 1));
    CHECK(interpolate_charpoly(ArrangementFamily::eq1({2, 4}), n).poly == closed_prop42(n, 2));
  }
  CHECK_THROWS_AS(closed_catalan(0), InvalidParams);
}

TEST_CASE("reference polynomials") {
  const auto& ref = reference_pair_charpolys();
  REQUIRE(ref.size() == 8);
  CHECK(ref[2] == lin(1) * lin(6));
  CHECK(ref[3] == chi3);
  for (std::size_t n = 0; n < ref.size(); ++n) {
    CHECK(ref[n].degree() == static_cast<long>(n));
    CHECK(ref[n].is_monic());
  }
  for (std::size_t n = 1; n <= 4; ++n)
    CHECK(interpolate_charpoly(ArrangementFamily::eq1({2, 3}), n).poly == ref[n]);
  CHECK(eval_chi_at_prime(ArrangementFamily::eq1({2, 3}), 5, 211) == poly_eval(ref[5], 211));
}

TEST_CASE("shift identity") {
  for (const auto& a : std::vector<std::vector<std::int64_t>>{{2}, {2, 3}})
    for (std::size_t n = 1; n <= 3; ++n) {
      const auto r = theorem41_check(a, n);
      CHECK_MESSAGE(r.pass, "m=" << a.size() << " n=" << n);
      CHECK(r.shifted == r.log_catalan.shifted(BigInt(-1)));
    }
  CHECK(theorem41_check({2, 3}, 3).interpolated == chi3);
  CHECK(theorem41_check({2}, 1).log_catalan == ip({0, 1}));
  CHECK_THROWS_AS(theorem41_check({2, 4}, 2), NotMultIndependent);
}

TEST_CASE("egf coefficients") {
  const auto two = extract_egf_coefficients(ArrangementFamily::eq1({2}), 3);
  const auto three = extract_egf_coefficients(ArrangementFamily::eq1({3}), 3);
  CHECK(two.slope == three.slope);
  CHECK(two.intercept == three.intercept);
  // f_n = b_n (t - 1) for A_n; the (n-1)! term lives on A'_n.
  for (std::size_t n = 1; n <= 3; ++n) CHECK(two.intercept[n] == -two.slope[n]);

  const auto cat = extract_egf_coefficients(ArrangementFamily::difference({1}), 4);
  for (std::size_t n = 1; n <= 4; ++n) CHECK(cat.intercept[n] == 0);

  const auto ones = connected_values_at_one({2}, 4);
  REQUIRE(ones.size() == 5);
  CHECK(ones[1] == 1);
  CHECK(ones[2] == -1);
  CHECK(ones[3] == 2);
  CHECK(ones[4] == -6);
}

TEST_CASE("egf power identity") {
  for (const auto& a : std::vector<std::vector<std::int64_t>>{{2}, {2, 3}}) {
    const auto r = theorem22_check(a, 3);
    CHECK(r.pass);
    CHECK(r.lhs == r.rhs);
  }
  CHECK(theorem22_check({2}, 3).regions == theorem22_check({3}, 3).regions);
  CHECK(theorem22_check({2}, 0).pass);
}

TEST_CASE("deletion-restriction with interpolated polynomials") {
  for (std::size_t n = 1; n <= 3; ++n) {
    CHECK(deletion_restriction_interpolated({2}, n));
    CHECK(deletion_restriction_interpolated({2, 3}, n));
  }
}

TEST_CASE("union invariance reports") {
  const auto b1 = verify_union_invariance(UnionMode::Thm31, {3, 5}, {}, {18, 22}, 6);
  REQUIRE(b1.counts.size() == 2);
  CHECK(b1.counts[1][3] == count_independent_sets(build_G({3, 5}, 40), 3));
  // The counts agree through n = 4 and split at n = 5.
  CHECK(b1.agree_through == 4);
  CHECK(b1.counts[1][5] * factorial(5) == poly_eval(reference_pair_charpolys()[5], 41));
  CHECK_FALSE(b1.pass);

  const auto b3 = verify_union_invariance(UnionMode::Thm34, {1, 3}, {}, {10, 12}, 8);
  CHECK(b3.agree_through == 3);
  CHECK(b3.counts[0][4] == 1850);
  CHECK(b3.counts[1][4] == 1837);
  for (std::size_t n = 0; n <= 8; ++n) CHECK(b3.equal[n] == (n <= 3));

  const auto big = verify_union_invariance(UnionMode::Thm34, {1}, {}, {30, 40}, 4);
  CHECK(big.pass);
  CHECK(big.agree_through == 4);

  const auto single = verify_union_invariance(UnionMode::Thm34, {1, 3}, {}, {22}, 5);
  CHECK(single.pass);

  CHECK(union_part_graph(UnionMode::Cor36, {1}, {}, 6) == add_pendants(build_F({1}, 6)));
  CHECK(union_part_graph(UnionMode::Cor32, {1}, {2}, 4) == build_G_ratio({1}, {2}, 4));
  CHECK_THROWS_AS(verify_union_invariance(UnionMode::Thm31, {3, 5}, {}, {18, 20}, 3), NonPrimePart);
  CHECK_THROWS_AS(verify_union_invariance(UnionMode::Thm31, {3, 5}, {}, {18, 14}, 3), NonPrimePart);
}

TEST_CASE("essentiality probe") {
  const auto diff = essentiality_invariance_probe({1}, {1}, {{30, 40}, {70}}, 4);
  CHECK(diff.observed.pass);
  for (std::size_t n = 1; n <= 4; ++n) CHECK_FALSE(diff.essential[n]);

  const auto ess = essentiality_invariance_probe({2}, {1}, {{6, 8}, {14}}, 4);
  CHECK(ess.essential[2]);
  CHECK_FALSE(ess.observed.equal[2]);

  const auto one = essentiality_invariance_probe({2}, {1}, {{14}}, 3);
  CHECK(one.observed.pass);
}

TEST_CASE("conjecture probes only report") {
  ConjectureParams p;
  p.a = {1};
  p.pendant = complete_graph(2);
  const auto r = probe_conjecture(Conjecture::Pendant51, p, {{6, 8}, {14}}, 5);
  REQUIRE(r.observed.counts.size() == 2);
  CHECK(r.observed.counts[1][1] == 14 * 3);
  CHECK(r.essential.empty());

  ConjectureParams c;
  c.a = {1};
  c.b = {1};
  const auto cyc = probe_conjecture(Conjecture::Cycle52, c, {{6, 8}, {14}}, 4);
  CHECK(cyc.observed.counts[1][1] == 28);
  CHECK(cyc.essential.size() == 5);

  CHECK(probe_conjecture(Conjecture::Cycle52, c, {{14}}, 3).observed.pass);
  CHECK(probe_conjecture(Conjecture::Cycle52, c, {}, 3).observed.counts.empty());
}

TEST_CASE("table1 values") {
  const auto t = table1_values({{2, 3}, {2, 5}, {2, 4}}, {23, 199});
  CHECK(t[0][0] == 216);
  CHECK(t[1][0] == 210);
  CHECK(t[0][1] == 36296);
  CHECK(t[2][1] == 36290);
}
