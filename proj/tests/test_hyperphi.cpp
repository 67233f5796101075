#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "test_util.hpp"

#include "qpi/hyperphi.hpp"

using namespace qpi;

namespace {

/// From-scratch phi oracle: term-by-term through explicit Pochhammer
/// products, independent of the incremental ratio driver.
LaurentSeries phi_oracle(const PhiSpec& spec, std::int64_t terms) {
  const std::int64_t P = static_cast<std::int64_t>(spec.lower.size()) -
                         static_cast<std::int64_t>(spec.upper.size()) + 1;
  int scale = scale_for_exponents({spec.base, spec.argument.exponent});
  for (const auto& u : spec.upper) scale = std::max(scale, scale_for_exponents({u.exponent}));
  for (const auto& l : spec.lower) scale = std::max(scale, scale_for_exponents({l.exponent}));
  const std::int64_t order_t = spec.order * scale;

  LaurentSeries acc = LaurentSeries::zero(scale);
  for (std::int64_t l = 0; l < terms; ++l) {
    LaurentSeries term = LaurentSeries::constant(1, scale);
    for (const auto& u : spec.upper) term = term * poch_finite(u, spec.base, l);
    LaurentSeries den = poch_finite(q_pow(spec.base), spec.base, l);
    for (const auto& b : spec.lower) {
      if (b.coeff == 0) continue;
      den = den * poch_finite(b, spec.base, l);
    }
    term = ts_div(term, den, order_t + 64);
    // ((-1)^l q^{base*C(l,2)})^P z^l
    BigRational coeff = rat_pow(spec.argument.coeff, static_cast<unsigned long>(l));
    if ((l % 2 != 0) && (P % 2 != 0)) coeff = -coeff;
    BigRational expo = spec.argument.exponent * l + spec.base * P * l * (l - 1) / 2;
    term = term * LaurentSeries::monomial(coeff, to_int64(expo * scale), scale);
    acc = ts_add(acc, term);
  }
  return acc.truncated(order_t);
}

}  // namespace

TEST_CASE("phi with a zero argument is 1") {
  PhiSpec spec;
  spec.upper = {q_pow(1)};
  spec.lower = {q_pow(2)};
  spec.base = 1;
  spec.argument = qmono(0, 0);
  spec.order = 10;
  const LaurentSeries s = phi(spec);
  CHECK(s.coeff(0) == 1);
  CHECK(s.nonzero_count() == 1);
}

TEST_CASE("terminating 1phi0 has m+1 terms") {
  PhiSpec spec;
  spec.upper = {q_pow(-2)};
  spec.base = 1;
  spec.argument = qmono(2, 3);
  spec.order = 25;
  const LaurentSeries s = phi(spec);
  // hand expansion: 1 + (1-q^{-2})/(1-q) 2q^3 + (1-q^{-2})(1-q^{-1})/((q;q)_2) 4q^6
  //              = 1 - 2q - 2q^2 + 4q^3
  CHECK(s.coeff(0) == 1);
  CHECK(s.coeff(1) == -2);
  CHECK(s.coeff(2) == -2);
  CHECK(s.coeff(3) == 4);
  for (std::int64_t e = 4; e < 25; ++e) CHECK(s.coeff(e) == 0);
  CHECK(ts_eq_to_q_order(s, phi_oracle(spec, 3), 25).equal);
}

TEST_CASE("phi matches the from-scratch oracle") {
  PhiSpec spec;
  spec.upper = {q_pow(1), qmono(2, 2)};
  spec.lower = {qmono(3, 1)};
  spec.base = 1;
  spec.argument = q_pow(2);
  spec.order = 15;
  // P = 0 and the argument exponent drives termination; 15 oracle terms cover
  // the window comfortably.
  CHECK(ts_eq_to_q_order(phi(spec), phi_oracle(spec, 15), 15).equal);

  PhiSpec spec2;  // P = 1 with a negative-exponent upper parameter
  spec2.upper = {qmono(1, -1)};
  spec2.lower = {qmono(-1, 1), q_pow(2)};
  spec2.base = 1;
  spec2.argument = q_pow(1);
  spec2.order = 12;
  CHECK(ts_eq_to_q_order(phi(spec2), phi_oracle(spec2, 14), 12).equal);
}

TEST_CASE("divergent phi specs are rejected at build time") {
  PhiSpec spec;  // more upper than lower + 1 and no terminating parameter
  spec.upper = {q_pow(1), q_pow(2)};
  spec.base = 1;
  spec.argument = q_pow(1);
  spec.order = 10;
  CHECK_THROWS_AS(phi(spec), DivergentSpecError);

  PhiSpec flat;  // P = 0 and constant argument
  flat.upper = {q_pow(1)};
  flat.base = 1;
  flat.argument = qmono(rat(1, 2), 0);
  flat.order = 10;
  CHECK_THROWS_AS(phi(flat), DivergentSpecError);
}

TEST_CASE("vanishing lower parameters are poles unless the sum stops first") {
  PhiSpec spec;
  spec.upper = {q_pow(1)};
  spec.lower = {q_pow(-2)};
  spec.base = 1;
  spec.argument = q_pow(1);
  spec.order = 10;
  CHECK_THROWS_AS(phi(spec), PoleError);

  PhiSpec ok;  // terminating numerator before the denominator zero
  ok.upper = {q_pow(-1)};
  ok.lower = {q_pow(-2)};
  ok.base = 1;
  ok.argument = q_pow(1);
  ok.order = 10;
  CHECK_NOTHROW(phi(ok));
}

TEST_CASE("2phi2 summation formula on a monomial grid") {
  const std::pair<QMonomial, QMonomial> grid[] = {
      {q_pow(1), q_pow(3)},           // the proof's instance (both sides are 1)
      {q_pow(1), q_pow(2)},
      {qmono(2, 1), q_pow(3)},
      {qmono(-1, 1), q_pow(2)},
      {q_pow(rat(1, 2)), q_pow(2)},
  };
  for (const auto& [a, b] : grid) {
    const LaurentSeries lhs = phi22_summation_lhs(a, b, 1, 40);
    const LaurentSeries rhs = phi22_summation_rhs(a, b, 1, 40);
    CHECK(ts_eq_to_q_order(lhs, rhs, 38).equal);
  }
  // the instance the second pi2 proof uses, at base q^2
  const LaurentSeries lhs = phi22_summation_lhs(q_pow(1), qmono(-1, 3), 2, 60);
  const LaurentSeries rhs = phi22_summation_rhs(q_pow(1), qmono(-1, 3), 2, 60);
  CHECK(ts_eq_to_q_order(lhs, rhs, 58).equal);
}

TEST_CASE("reduced 3phi3 identity at scale 2") {
  CHECK(ts_eq_to_q_order(reduced3phi3_lhs(120), reduced3phi3_rhs(120), 118).equal);
}

TEST_CASE("the 3phi3 series is (1-q) times the pi2 sum side") {
  PhiSpec ps;
  ps.upper = {q_pow(1), q_pow(rat(1, 2)), qmono(-1, rat(1, 2))};
  ps.lower = {qmono(-1, rat(3, 2)), q_pow(rat(3, 2)), qmono(0, 0)};
  ps.base = 1;
  ps.argument = q_pow(2);
  ps.order = 80;
  const LaurentSeries lhs = phi(ps);
  const LaurentSeries rhs = LaurentSeries::one_minus(1, 1) * pi2_lhs(80);
  CHECK(ts_eq_to_q_order(lhs, rhs, 78).equal);
}

TEST_CASE("ck2 transformation instance") {
  SUBCASE("clean monomials") {
    CHECK(ts_eq_to_q_order(ck2_lhs(q_pow(1), 60), ck2_rhs(q_pow(1), 60), 58).equal);
    CHECK(ts_eq_to_q_order(ck2_lhs(q_pow(2), 60), ck2_rhs(q_pow(2), 60), 58).equal);
    CHECK(ts_eq_to_q_order(ck2_lhs(q_pow(rat(5, 2)), 40), ck2_rhs(q_pow(rat(5, 2)), 40), 38)
              .equal);
    CHECK(ts_eq_to_q_order(ck2_lhs(qmono(2, 3), 40), ck2_rhs(qmono(2, 3), 40), 38).equal);
  }
  SUBCASE("n = 0 contributes 1") {
    CHECK(ck2_lhs(q_pow(1), 20).coeff(0) == 1);
  }
  SUBCASE("degenerate d raise poles") {
    CHECK_THROWS_AS(ck2_lhs(q_pow(3), 20), PoleError);  // 0/0 summand
    CHECK_THROWS_AS(ck2_lhs(q_pow(4), 20), PoleError);  // vanishing denominator at n >= 2
  }
}

TEST_CASE("ck3 stabilization toward d -> 0") {
  const std::int64_t m0 = ck3_first_stable(20);
  CHECK(m0 >= 1);
  CHECK(ts_eq_to_q_order(ck3_stabilization(m0, 20), LaurentSeries::constant(1), 20).equal);
  CHECK(ts_eq_to_q_order(ck3_stabilization(m0 + 2, 20), LaurentSeries::constant(1), 20).equal);
  CHECK(ck3_stabilization(31, 12).coeff(0) == 1);
  CHECK_THROWS_AS(ck3_stabilization(4, 20), PoleError);  // q^{4-M} degenerates
}

TEST_CASE("qid sum side") {
  const LaurentSeries lhs = qid_lhs(11);
  const BigRational expected[] = {1, 2, -1, 0, 3, -6, 3, 8, -16, 8, 10};
  for (std::int64_t n = 0; n < 11; ++n) CHECK(lhs.coeff(n) == expected[n]);
  // n = 0 term is (1-q^2)/(1-q) = 1 + q
  const LaurentSeries t0 =
      ts_div(LaurentSeries::one_minus(1, 2), LaurentSeries::one_minus(1, 1), 10);
  CHECK(t0.coeff(0) == 1);
  CHECK(t0.coeff(1) == 1);
  CHECK(t0.coeff(2) == 0);
  CHECK(ts_eq_to_q_order(qid_lhs(150), product_side("qid.rhs", 150), 150).equal);
}

namespace {

/// From-scratch oracle for one term of the terminating summation.
LaurentSeries red_term_oracle(std::int64_t N, const QMonomial& d, std::int64_t k,
                              std::int64_t order) {
  const int s = scale_for_exponents({d.exponent});
  const std::int64_t order_t = order * s;
  const BigRational cd = d.coeff, ed = d.exponent;
  LaurentSeries num = LaurentSeries::one_minus(1, to_int64(BigRational(6 * k + 1) * s), s);
  num = num * poch_finite(d, 4, k);
  num = num * poch_finite(qmono(BigRational(1) / cd, 4 * N + 4 - ed), 4, k);
  num = num * poch_finite(q_pow(-4 * N), 4, k);
  const LaurentSeries p = poch_finite(q_pow(1), 2, k);
  num = num * ((p * p) * p);
  num = num * LaurentSeries::monomial(1, 2 * k * s, s);

  LaurentSeries den = LaurentSeries::one_minus(1, s, s);
  const LaurentSeries p4 = poch_finite(q_pow(4), 4, k);
  den = den * ((p4 * p4) * p4);
  den = den * poch_finite(qmono(BigRational(1) / cd, 3 - ed), 2, k);
  den = den * poch_finite(qmono(cd, ed - 4 * N - 1), 2, k);
  den = den * poch_finite(q_pow(4 * N + 3), 2, k);
  return ts_div(num, den, order_t);
}

}  // namespace

TEST_CASE("terminating quadratic summation") {
  SUBCASE("N=1, d=q^2 and N=3, d=q^-6 verify") {
    CHECK(red_identity(1, q_pow(2), 80).equal);
    CHECK(red_identity(3, q_pow(-6), 80).equal);
  }
  SUBCASE("the k-sum has exactly N+1 nonzero terms") {
    const std::int64_t order = 40;
    const LaurentSeries t0 = red_term_oracle(1, q_pow(2), 0, order);
    const LaurentSeries t1 = red_term_oracle(1, q_pow(2), 1, order);
    const LaurentSeries t2 = red_term_oracle(1, q_pow(2), 2, order);
    CHECK_FALSE(t0.is_zero());
    CHECK_FALSE(t1.is_zero());
    CHECK(t2.is_zero());  // (q^{-4};q^4)_2 = 0
    CHECK(ts_eq_to_q_order(red_lhs(1, q_pow(2), order), ts_add(t0, t1), order).equal);
  }
  SUBCASE("finite right side agrees with the unsimplified product form") {
    for (std::int64_t N = 1; N <= 2; ++N) {
      const std::int64_t order = 50;
      const QMonomial d = q_pow(-2 * N);
      const LaurentSeries finite = red_rhs(N, d, order);
      // (q^3, q^{4N+3}/d; q^2) (q^4/d, q^4/d, q^{4N+4}, q^{4N+4}; q^4)
      //   / ((q^3/d, q^{4N+3}; q^2) (q^4, q^4, q^{4N+4}/d, q^{4N+4}/d; q^4))
      const LaurentSeries n1 = poch_infinite(q_pow(3), 2, order);
      const LaurentSeries n2 = poch_infinite(q_pow(6 * N + 3), 2, order);
      const LaurentSeries n3 = poch_infinite(q_pow(2 * N + 4), 4, order);
      const LaurentSeries n4 = poch_infinite(q_pow(4 * N + 4), 4, order);
      const LaurentSeries d1 = poch_infinite(q_pow(2 * N + 3), 2, order);
      const LaurentSeries d2 = poch_infinite(q_pow(4 * N + 3), 2, order);
      const LaurentSeries d3 = poch_infinite(q_pow(4), 4, order);
      const LaurentSeries d4 = poch_infinite(q_pow(6 * N + 4), 4, order);
      const LaurentSeries infinite = ts_div(n1 * n2 * ((n3 * n3) * (n4 * n4)),
                                            d1 * d2 * ((d3 * d3) * (d4 * d4)), order);
      CHECK(ts_eq_to_q_order(finite, infinite, order).equal);
    }
  }
  SUBCASE("d = q^4 degenerates to an exact 0 = 0") {
    const LaurentSeries lhs = red_lhs(2, q_pow(4), 30);
    const LaurentSeries rhs = red_rhs(2, q_pow(4), 30);
    CHECK(lhs.is_zero());
    CHECK(rhs.is_zero());
    CHECK(red_identity(2, q_pow(4), 30).equal);
  }
}

TEST_CASE("stabilized limits recover the registered identities") {
  const GlStabilization s1 = gl_limit_check(1, 40, 40);
  CHECK(s1.stabilized_at <= 40);
  const GlStabilization s2 = gl_limit_check(2, 40, 40);
  CHECK(s2.stabilized_at <= 40);
  CHECK(gl_limit_check(1, 1, 8).stabilized_at == 1);
  CHECK(gl_limit_check(2, 1, 8).stabilized_at == 1);
  CHECK_THROWS_AS(gl_limit_check(1, 40, 2), BudgetExceededError);
}

TEST_CASE("gl sum sides match their product sides") {
  CHECK(ts_eq_to_q_order(gl_lhs(1, 150), product_side("gl1.rhs", 150), 150).equal);
  CHECK(ts_eq_to_q_order(gl_lhs(2, 150), product_side("gl2.rhs", 150), 150).equal);
}

TEST_CASE("pi sum sides match their product sides") {
  CHECK(ts_eq_to_q_order(pi1_lhs(150), product_side("pi1.rhs", 150), 150).equal);
  CHECK(ts_eq_to_q_order(pi2_lhs(150), product_side("pi2.rhs", 150), 150).equal);
  CHECK(ts_eq_to_q_order(q2_lhs(120), product_side("q2.rhs", 120), 120).equal);
}
