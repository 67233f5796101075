#include "qpi/hyperphi.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>

#include "qsum.hpp"

namespace qpi {

namespace detail {
namespace {

/// Build-time analysis of a PhiSpec: rejects divergent and structurally
/// degenerate specs, and derives the stop plan (the step from which the
/// summand's valuation only grows, plus per-step division headroom covering
/// the transient dips that negative-exponent parameters cause).
struct PhiPlan {
  std::int64_t safe_from = 0;
  std::vector<std::int64_t> headroom;
};

PhiPlan plan_phi(const PhiSpec& spec, int scale) {
  if (spec.base <= 0) throw DivergentSpecError("phi base exponent must be positive");
  const std::int64_t P = static_cast<std::int64_t>(spec.lower.size()) -
                         static_cast<std::int64_t>(spec.upper.size()) + 1;

  // Terminating upper parameter q^{-m*base}?
  std::optional<std::int64_t> term_m;
  if (spec.argument.coeff == 0) term_m = 0;
  for (const auto& a : spec.upper) {
    if (a.coeff != 1) continue;
    BigRational m = -a.exponent / spec.base;
    if (is_integer(m) && m >= 0) {
      const std::int64_t mi = to_int64(m);
      if (!term_m || mi < *term_m) term_m = mi;
    }
  }
  // A lower parameter q^{-m'*base} makes (b; q^base)_l vanish from l = m'+1
  // on; that is a pole unless the sum terminates no later.
  for (const auto& b : spec.lower) {
    if (b.coeff != 1) continue;
    BigRational m = -b.exponent / spec.base;
    if (is_integer(m) && m >= 0 && (!term_m || *term_m > to_int64(m)))
      throw PoleError("lower parameter q^" + rat_to_string(b.exponent) +
                      " vanishes inside the sum");
  }
  if (!term_m) {
    if (P < 0)
      throw DivergentSpecError("summand valuation shrinks: more upper than lower parameters");
    if (P == 0 && !(spec.argument.exponent > 0))
      throw DivergentSpecError("summand valuation does not grow (P = 0 and argument exponent <= 0)");
  }

  // Scan per-step shifts until they are nonnegative for good (or until the
  // terminating step); prefix sums give the division headroom.
  std::vector<BigRational> S{0};
  std::int64_t last_negative = -1;
  for (std::int64_t l = 0;; ++l) {
    if (term_m && l >= *term_m) break;
    if (l > 2'000'000) throw DivergentSpecError("cannot bound the summand valuation");
    BigRational shift = spec.argument.exponent + BigRational(P) * spec.base * l;
    bool correction = false;
    for (const auto& a : spec.upper) {
      if (a.coeff == 0) continue;
      BigRational e = a.exponent + spec.base * l;
      if (e < 0) {
        shift += e;
        correction = true;
      }
    }
    for (const auto& b : spec.lower) {
      if (b.coeff == 0) continue;
      BigRational e = b.exponent + spec.base * l;
      if (e < 0) {
        shift -= e;
        correction = true;
      }
    }
    if (!term_m && !correction && shift >= 0) break;
    if (shift < 0) last_negative = l;
    S.push_back(S.back() + shift);
  }

  PhiPlan plan;
  plan.safe_from = last_negative + 1;
  // headroom[k] = (S_k - min_{j >= k} S_j) in t-units
  plan.headroom.assign(S.size(), 0);
  BigRational suffix_min = S.back();
  for (std::size_t k = S.size(); k-- > 0;) {
    suffix_min = std::min(suffix_min, S[k]);
    BigRational h = (S[k] - suffix_min) * scale;
    plan.headroom[k] = to_int64(h);
  }
  return plan;
}

}  // namespace
}  // namespace detail

using detail::QSumSpec;
using detail::StepFactor;
using detail::StepRatio;
using detail::sum_terms;

namespace {

int phi_scale(const PhiSpec& spec) {
  std::int64_t s = 1;
  auto absorb = [&s](const BigRational& e) {
    s = std::lcm(s, e.get_den().get_si());
  };
  for (const auto& a : spec.upper) absorb(a.exponent);
  for (const auto& b : spec.lower) absorb(b.exponent);
  absorb(spec.base);
  absorb(spec.argument.exponent);
  if (s > (1 << 20)) throw ScaleMismatchError("inferred scale too large");
  return static_cast<int>(s);
}

/// 1 + q^a - 2 q^b (exponent collisions fold correctly).
LaurentSeries trinomial(const BigRational& a, const BigRational& b, int scale) {
  BigRational ta = a * scale, tb = b * scale;
  return ts_add(ts_add(LaurentSeries::constant(1, scale),
                       LaurentSeries::monomial(1, to_int64(ta), scale)),
                LaurentSeries::monomial(-2, to_int64(tb), scale));
}

}  // namespace

LaurentSeries phi(const PhiSpec& spec) {
  if (spec.order < 1) throw Error("phi needs order >= 1");
  const int s = phi_scale(spec);
  const detail::PhiPlan plan = detail::plan_phi(spec, s);
  const std::int64_t P = static_cast<std::int64_t>(spec.lower.size()) -
                         static_cast<std::int64_t>(spec.upper.size()) + 1;

  auto ratio = [&spec, P](std::int64_t l) {
    StepRatio r;
    r.coeff = spec.argument.coeff * ((P % 2 != 0) ? -1 : 1);
    r.shift = spec.argument.exponent + BigRational(P) * spec.base * l;
    for (const auto& a : spec.upper) r.num.push_back({a.coeff, a.exponent + spec.base * l});
    r.den.push_back({1, spec.base * (l + 1)});
    for (const auto& b : spec.lower) {
      if (b.coeff == 0) continue;  // (0; q)_l = 1
      r.den.push_back({b.coeff, b.exponent + spec.base * l});
    }
    return r;
  };

  QSumSpec qs;
  qs.scale = s;
  qs.order_t = spec.order * s;
  qs.safe_from = plan.safe_from;
  qs.headroom = plan.headroom;
  return sum_terms(LaurentSeries::constant(1, s), ratio, qs);
}

LaurentSeries pi1_lhs(std::int64_t order) {
  const LaurentSeries term0 = ts_inv(LaurentSeries::one_minus(1, 1), order);
  auto ratio = [](std::int64_t k) {
    StepRatio r;
    r.coeff = -1;
    r.shift = 1;
    r.num.push_back({1, 2 * k + 1});
    r.den.push_back({1, 2 * k + 3});
    return r;
  };
  return sum_terms(term0, ratio, {1, order});
}

LaurentSeries pi2_lhs(std::int64_t order) {
  const LaurentSeries term0 = ts_inv(LaurentSeries::one_minus(1, 1), order);
  auto ratio = [](std::int64_t k) {
    StepRatio r;
    r.coeff = -1;
    r.shift = k + 2;
    r.num.push_back({1, 2 * k + 1});
    r.den.push_back({1, 2 * k + 3});
    return r;
  };
  return sum_terms(term0, ratio, {1, order});
}

LaurentSeries qid_lhs(std::int64_t order) {
  const LaurentSeries term0 =
      ts_div(LaurentSeries::one_minus(1, 2), LaurentSeries::one_minus(1, 1), order);
  auto ratio = [](std::int64_t n) {
    StepRatio r;
    r.shift = n + 1;
    r.num.push_back({1, 3 * n + 5});
    for (int i = 0; i < 3; ++i) r.num.push_back({1, n + 1});
    r.num.push_back({-1, n + 1});  // the (-q;q)_n step
    r.den.push_back({1, 3 * n + 2});
    for (int i = 0; i < 3; ++i) r.den.push_back({1, 2 * n + 3});
    return r;
  };
  return sum_terms(term0, ratio, {1, order});
}

LaurentSeries q2_lhs(std::int64_t order) {
  // n = 0 term: (1 + q^2 - 2q^3) / ((1-q)^3 (-1;q)_3), with (-1;q)_3 = 2(1+q)(1+q^2)
  const LaurentSeries om = LaurentSeries::one_minus(1, 1);
  LaurentSeries den0 = ts_scalar_mul(2, om * om * om);
  den0 = den0 * LaurentSeries::one_minus(-1, 1) * LaurentSeries::one_minus(-1, 2);
  const LaurentSeries term0 = ts_div(trinomial(2, 3, 1), den0, order);
  auto ratio = [](std::int64_t n) {
    StepRatio r;
    r.shift = 4 * n + 4;
    r.num_poly.push_back(trinomial(2 * n + 4, 4 * n + 7, 1));
    for (int i = 0; i < 3; ++i) r.num.push_back({1, 2 * n + 2});
    r.den_poly.push_back(trinomial(2 * n + 2, 4 * n + 3, 1));
    for (int i = 0; i < 3; ++i) r.den.push_back({1, 2 * n + 3});
    r.den.push_back({-1, 2 * n + 3});
    r.den.push_back({-1, 2 * n + 4});
    return r;
  };
  return sum_terms(term0, ratio, {1, order});
}

LaurentSeries gl_lhs(int which, std::int64_t order) {
  if (which != 1 && which != 2) throw Error("gl_lhs: which must be 1 or 2");
  auto ratio = [which](std::int64_t n) {
    StepRatio r;
    r.num.push_back({1, 6 * n + 7});
    r.den.push_back({1, 6 * n + 1});
    for (int i = 0; i < 3; ++i) r.den.push_back({1, 4 * n + 4});
    if (which == 1) {
      r.shift = 2 * n + 1;
      r.num.push_back({1, 2 * n + 1});
      r.num.push_back({1, 2 * n + 1});
      r.num.push_back({1, 4 * n + 2});
    } else {
      r.coeff = -1;
      r.shift = 6 * n + 3;
      for (int i = 0; i < 3; ++i) r.num.push_back({1, 2 * n + 1});
    }
    return r;
  };
  return sum_terms(LaurentSeries::constant(1), ratio, {1, order});
}

LaurentSeries ck2_lhs(const QMonomial& d, std::int64_t order) {
  if (d.coeff == 0) throw Error("ck2_lhs: d must be a nonzero monomial");
  const int s = scale_for_exponents({d.exponent});
  const BigRational cd = d.coeff, ed = d.exponent;
  auto ratio = [cd, ed](std::int64_t n) {
    StepRatio r;
    r.shift = 1;
    r.num.push_back({1, 3 * n + 5});
    r.num.push_back({1, 2 * n + 2});
    r.num.push_back({cd, ed + 2 * n});
    r.num.push_back({BigRational(1) / cd, 3 - ed + 2 * n});
    r.num.push_back({1, n + 1});  // (q,q,q;q)_n over (q;q)_n leaves two net factors
    r.num.push_back({1, n + 1});
    r.den.push_back({1, 3 * n + 2});
    r.den.push_back({BigRational(1) / cd, 3 - ed + n});
    r.den.push_back({cd, ed + n});
    for (int i = 0; i < 3; ++i) r.den.push_back({1, 2 * n + 3});
    return r;
  };
  QSumSpec qs;
  qs.scale = s;
  qs.order_t = order * s;
  return sum_terms(LaurentSeries::constant(1, s), ratio, qs);
}

LaurentSeries ck2_rhs(const QMonomial& d, std::int64_t order) {
  if (d.coeff == 0) throw Error("ck2_rhs: d must be a nonzero monomial");
  PhiSpec ps;
  ps.upper = {q_pow(1), q_pow(1), q_pow(1)};
  ps.lower = {qmono(d.coeff, d.exponent + 1), qmono(BigRational(1) / d.coeff, 4 - d.exponent)};
  ps.base = 2;
  ps.argument = q_pow(2);
  ps.order = order;
  const LaurentSeries series = phi(ps);

  const LaurentSeries q2q2 = poch_infinite(q_pow(2), 2, order);
  const LaurentSeries q3q2 = poch_infinite(q_pow(3), 2, order);
  const LaurentSeries num = poch_infinite(q_pow(4), 2, order) * q2q2 * q2q2 * q2q2;
  const LaurentSeries den = poch_infinite(q_pow(1), 2, order) * q3q2 * q3q2 * q3q2;
  return ts_div(num, den, order) * series;
}

LaurentSeries ck3_stabilization(std::int64_t M, std::int64_t order) {
  if (M < 1) throw Error("ck3_stabilization needs M >= 1");
  PhiSpec ps;
  ps.upper = {q_pow(1), q_pow(1), q_pow(1)};
  ps.lower = {q_pow(M + 1), q_pow(4 - M)};
  ps.base = 2;
  ps.argument = q_pow(2);
  ps.order = order;
  return phi(ps);
}

std::int64_t ck3_first_stable(std::int64_t order, std::int64_t budget) {
  const LaurentSeries one = LaurentSeries::constant(1);
  auto stable = [&](std::int64_t M) {
    return ts_eq_to_q_order(ck3_stabilization(M, order), one, order).equal;
  };
  auto next = [](std::int64_t M) { return M < 3 ? M + 1 : M + 2; };  // 1,2,3,5,7,...
  for (std::int64_t M = 1; M <= budget; M = next(M)) {
    if (stable(M) && stable(next(M))) return M;
  }
  throw BudgetExceededError("ck3 series did not stabilize to 1 for scanned M <= " +
                            std::to_string(budget));
}

namespace {

void red_validate(std::int64_t N, const QMonomial& d) {
  if (N < 1) throw Error("red identity needs N >= 1");
  if (d.coeff == 0) throw Error("red identity: d must be a nonzero monomial");
}

}  // namespace

LaurentSeries red_lhs(std::int64_t N, const QMonomial& d, std::int64_t order) {
  red_validate(N, d);
  const int s = scale_for_exponents({d.exponent});
  const BigRational cd = d.coeff, ed = d.exponent;

  auto ratio = [cd, ed, N](std::int64_t k) {
    StepRatio r;
    r.shift = 2;
    r.num.push_back({1, 6 * k + 7});
    r.num.push_back({cd, ed + 4 * k});
    r.num.push_back({BigRational(1) / cd, 4 * N + 4 - ed + 4 * k});
    r.num.push_back({1, -4 * N + 4 * k});
    for (int i = 0; i < 3; ++i) r.num.push_back({1, 2 * k + 1});
    r.den.push_back({1, 6 * k + 1});
    for (int i = 0; i < 3; ++i) r.den.push_back({1, 4 * k + 4});
    r.den.push_back({BigRational(1) / cd, 3 - ed + 2 * k});
    r.den.push_back({cd, ed - 4 * N - 1 + 2 * k});
    r.den.push_back({1, 4 * N + 3 + 2 * k});
    return r;
  };
  QSumSpec qs;
  qs.scale = s;
  qs.order_t = order * s;
  return sum_terms(LaurentSeries::constant(1, s), ratio, qs);
}

LaurentSeries red_rhs(std::int64_t N, const QMonomial& d, std::int64_t order) {
  red_validate(N, d);
  const int s = scale_for_exponents({d.exponent});
  const std::int64_t order_t = order * s;
  const BigRational cd = d.coeff, ed = d.exponent;
  try {
    if (cd == 1 && ed == -2 * N) {
      // terminating right side: (q^3;q^2)_N (q^{2N+4};q^4)_N^2 /
      //                         ((q^4;q^4)_N^2 (q^{4N+3};q^2)_N)
      const LaurentSeries p1 = poch_finite(q_pow(3), 2, N);
      const LaurentSeries p2 = poch_finite(q_pow(2 * N + 4), 4, N);
      const LaurentSeries p3 = poch_finite(q_pow(4), 4, N);
      const LaurentSeries p4 = poch_finite(q_pow(4 * N + 3), 2, N);
      return ts_div(p1 * p2 * p2, p3 * p3 * p4, order_t);
    }
    const BigRational inv_c = BigRational(1) / cd;  // note: auto would keep a lazy gmp expression
    const LaurentSeries n1 = poch_infinite(q_pow(3), 2, order);
    const LaurentSeries n2 = poch_infinite(qmono(inv_c, 4 * N + 3 - ed), 2, order);
    const LaurentSeries n3 = poch_infinite(qmono(inv_c, 4 - ed), 4, order);
    const LaurentSeries n4 = poch_infinite(q_pow(4 * N + 4), 4, order);
    const LaurentSeries d1 = poch_infinite(qmono(inv_c, 3 - ed), 2, order);
    const LaurentSeries d2 = poch_infinite(q_pow(4 * N + 3), 2, order);
    const LaurentSeries d3 = poch_infinite(q_pow(4), 4, order);
    const LaurentSeries d4 = poch_infinite(qmono(inv_c, 4 * N + 4 - ed), 4, order);
    return ts_div(n1 * n2 * ((n3 * n3) * (n4 * n4)), d1 * d2 * ((d3 * d3) * (d4 * d4)), order_t);
  } catch (const NotInvertibleError& e) {
    throw PoleError(std::string("degenerate d on the product side: ") + e.what());
  }
}

RedSides red_sides(std::int64_t N, const QMonomial& d, std::int64_t order) {
  return {red_lhs(N, d, order), red_rhs(N, d, order)};
}

SeriesCompare red_identity(std::int64_t N, const QMonomial& d, std::int64_t order) {
  const RedSides sides = red_sides(N, d, order);
  return ts_eq_to_q_order(sides.lhs, sides.rhs, order);
}

GlStabilization gl_limit_check(int which, std::int64_t order, std::int64_t n_budget) {
  if (which != 1 && which != 2) throw Error("gl_limit_check: which must be 1 or 2");
  if (n_budget < 1) throw Error("gl_limit_check needs a positive budget");
  const LaurentSeries target_lhs = gl_lhs(which, order);
  const LaurentSeries target_rhs = product_side(which == 1 ? "gl1.rhs" : "gl2.rhs", order);

  auto matches = [&](std::int64_t N) {
    const QMonomial d = which == 1 ? q_pow(2) : q_pow(-2 * N);
    return ts_eq_to_q_order(red_lhs(N, d, order), target_lhs, order).equal &&
           ts_eq_to_q_order(red_rhs(N, d, order), target_rhs, order).equal;
  };

  // Doubling scan, then bisect down to the first stabilizing N (the dropped
  // factors' exponents grow with N, so a match persists for larger N).
  std::int64_t lo = 0;  // known not to match (0 = before the scan)
  std::int64_t hi = 1;
  while (!matches(hi)) {
    if (hi >= n_budget)
      throw BudgetExceededError("no stabilization within N <= " + std::to_string(n_budget));
    lo = hi;
    hi = std::min(hi * 2, n_budget);
  }
  while (lo + 1 < hi) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    (matches(mid) ? hi : lo) = mid;
  }
  return {which, order, hi};
}

LaurentSeries phi22_summation_lhs(const QMonomial& a, const QMonomial& b, const BigRational& base,
                                  std::int64_t order) {
  if (a.coeff == 0 || b.coeff == 0) throw Error("phi22 parameters must be nonzero monomials");
  PhiSpec ps;
  ps.upper = {a, qmono(BigRational(1) / a.coeff, base - a.exponent)};
  ps.lower = {qmono(-1, base), b};
  ps.base = base;
  ps.argument = qmono(-b.coeff, b.exponent);
  ps.order = order;
  return phi(ps);
}

LaurentSeries phi22_summation_rhs(const QMonomial& a, const QMonomial& b, const BigRational& base,
                                  std::int64_t order) {
  if (a.coeff == 0 || b.coeff == 0) throw Error("phi22 parameters must be nonzero monomials");
  const LaurentSeries n1 = poch_infinite(qmono(a.coeff * b.coeff, a.exponent + b.exponent),
                                         2 * base, order);
  const LaurentSeries n2 = poch_infinite(
      qmono(b.coeff / a.coeff, b.exponent + base - a.exponent), 2 * base, order);
  const LaurentSeries den = poch_infinite(b, base, order);
  if (den.is_zero()) throw PoleError("phi22 product side: (b; q^base)_inf vanishes");
  const LaurentSeries num = n1 * n2;
  return ts_div(num, den, order * common_scale(num, den));
}

LaurentSeries reduced3phi3_lhs(std::int64_t order) {
  PhiSpec ps;
  ps.upper = {q_pow(1), q_pow(BigRational(1, 2)), qmono(-1, BigRational(1, 2))};
  ps.lower = {qmono(-1, BigRational(3, 2)), q_pow(BigRational(3, 2)), qmono(0, 0)};
  ps.base = 1;
  ps.argument = q_pow(2);
  ps.order = order;
  const LaurentSeries series = phi(ps);
  const LaurentSeries q3 = poch_infinite(q_pow(3), 2, order);
  return series * q3 * q3;
}

LaurentSeries reduced3phi3_rhs(std::int64_t order) {
  PhiSpec ps;
  ps.upper = {q_pow(1), q_pow(1)};
  ps.lower = {qmono(-1, 2), qmono(-1, 3)};
  ps.base = 2;
  ps.argument = q_pow(3);
  ps.order = order;
  const LaurentSeries series = phi(ps);
  const LaurentSeries pre = poch_infinite(q_pow(2), 2, order) * poch_infinite(q_pow(4), 2, order);
  return pre * series;
}

}  // namespace qpi
