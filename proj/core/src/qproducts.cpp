#include "qpi/qproducts.hpp"

#include <numeric>
#include <string>

namespace qpi {

namespace {

std::int64_t lcm64(std::int64_t a, std::int64_t b) {
  const std::int64_t g = std::gcd(a, b);
  return a / g * b;
}

/// t-exponent of q^e at the given scale; e must live on the scale lattice.
std::int64_t t_exp(const BigRational& e, int scale) {
  BigRational t = e * scale;
  if (!is_integer(t))
    throw ScaleMismatchError("exponent " + rat_to_string(e) + " is not integral at scale 1/" +
                             std::to_string(scale));
  return to_int64(t);
}

}  // namespace

int scale_for_exponents(std::initializer_list<BigRational> exponents) {
  std::int64_t s = 1;
  for (const auto& e : exponents) {
    if (!e.get_den().fits_slong_p()) throw Error("exponent denominator out of range");
    s = lcm64(s, e.get_den().get_si());
    if (s > (1 << 20)) throw ScaleMismatchError("inferred scale too large");
  }
  return static_cast<int>(s);
}

LaurentSeries poch_finite(const QMonomial& a, const BigRational& base, std::int64_t n) {
  if (n < 0) throw Error("finite Pochhammer index must be nonnegative");
  const int s = scale_for_exponents({a.exponent, base});
  LaurentSeries prod = LaurentSeries::constant(1, s);
  BigRational e = a.exponent;
  for (std::int64_t j = 0; j < n; ++j, e += base)
    prod = prod * LaurentSeries::one_minus(a.coeff, t_exp(e, s), s);
  return prod;
}

LaurentSeries poch_infinite(const QMonomial& a, const BigRational& base, std::int64_t order) {
  if (base <= 0)
    throw NonterminationError("infinite Pochhammer needs a positive base exponent, got " +
                              rat_to_string(base));
  const int s = scale_for_exponents({a.exponent, base});
  const std::int64_t order_t = order * s;
  if (a.coeff == 0) return LaurentSeries::constant(1, s).truncated(order_t);

  LaurentSeries prod = LaurentSeries::constant(1, s);
  BigRational e = a.exponent;
  while (true) {
    const std::int64_t w = t_exp(e, s);
    if (w >= order_t - prod.floor()) break;  // later factors only perturb past the window
    prod = prod * LaurentSeries::one_minus(a.coeff, w, s);
    if (prod.is_zero()) return LaurentSeries::zero(s);  // a factor vanished exactly
    e += base;
  }
  return prod.truncated(order_t);
}

LaurentSeries poch_real(const QMonomial& a, const BigRational& base, const BigRational& r,
                        std::int64_t order) {
  const LaurentSeries num = poch_infinite(a, base, order);
  const LaurentSeries den =
      poch_infinite(qmono(a.coeff, a.exponent + base * r), base, order);
  if (den.is_zero())
    throw PoleError("real-index Pochhammer (" + rat_to_string(a.coeff) + "*q^" +
                    rat_to_string(a.exponent) + "; q^" + rat_to_string(base) + ")_" +
                    rat_to_string(r) + " has a vanishing denominator product");
  const int s = common_scale(num, den);
  return ts_div(num, den, order * s);
}

LaurentSeries poch(const PochSpec& spec, std::int64_t order) {
  switch (spec.index.kind) {
    case PochIndex::Kind::finite:
      return poch_finite(spec.a, spec.base, spec.index.n);
    case PochIndex::Kind::infinite:
      return poch_infinite(spec.a, spec.base, order);
    case PochIndex::Kind::real:
      return poch_real(spec.a, spec.base, spec.index.r, order);
  }
  throw Error("unreachable");
}

LaurentSeries psi_sum(std::int64_t order) {
  if (order < 1) throw Error("psi_sum needs order >= 1");
  std::vector<BigRational> coeffs(static_cast<std::size_t>(order));
  for (std::int64_t n = 0;; ++n) {
    const std::int64_t tn = n * (n + 1) / 2;
    if (tn >= order) break;
    coeffs[static_cast<std::size_t>(tn)] = 1;
  }
  return LaurentSeries::window(1, 0, order, std::move(coeffs));
}

LaurentSeries psi_product(std::int64_t order) {
  if (order < 1) throw Error("psi_product needs order >= 1");
  const LaurentSeries num = poch_infinite(q_pow(2), 2, order);
  const LaurentSeries den = poch_infinite(q_pow(1), 2, order);
  return ts_div(num, den, order);
}

LaurentSeries product_side(std::string_view name, std::int64_t order) {
  if (order < 1) throw Error("product_side needs order >= 1");
  const auto inf = [order](long e, long b) { return poch_infinite(q_pow(e), b, order); };

  if (name == "pi1.rhs") {
    // (q^4;q^4)^2 / (q^2;q^4)^2
    const LaurentSeries num = inf(4, 4);
    const LaurentSeries den = inf(2, 4);
    return ts_div(num * num, den * den, order);
  }
  if (name == "pi2.rhs") {
    // (q^2;q^2)(q^8;q^8) / ((q;q^2)(q^4;q^8))
    return ts_div(inf(2, 2) * inf(8, 8), inf(1, 2) * inf(4, 8), order);
  }
  if (name == "gl1.rhs") {
    // (1+q)(q^2;q^4)(q^6;q^4) / (q^4;q^4)^2
    const LaurentSeries den = inf(4, 4);
    return ts_div(LaurentSeries::one_minus(-1, 1) * inf(2, 4) * inf(6, 4), den * den, order);
  }
  if (name == "gl2.rhs") {
    // (q^3;q^4)(q^5;q^4) / (q^4;q^4)^2
    const LaurentSeries den = inf(4, 4);
    return ts_div(inf(3, 4) * inf(5, 4), den * den, order);
  }
  if (name == "qid.rhs") {
    // (1-q)^2 (q^2;q^2)^4 / (q;q^2)^4
    const LaurentSeries num = inf(2, 2);
    const LaurentSeries den = inf(1, 2);
    const LaurentSeries num4 = (num * num) * (num * num);
    const LaurentSeries den4 = (den * den) * (den * den);
    const LaurentSeries om = LaurentSeries::one_minus(1, 1);
    return ts_div(om * om * num4, den4, order);
  }
  if (name == "q2.rhs") {
    // (1/2) sum_n q^{2n}/(1-q^{2n+1})^2, expanded termwise with
    // 1/(1-x)^2 = sum_m (m+1) x^m; pure exponent bookkeeping, no division.
    std::vector<BigRational> coeffs(static_cast<std::size_t>(order));
    const BigRational half(1, 2);
    for (std::int64_t n = 0; 2 * n < order; ++n) {
      for (std::int64_t m = 0;; ++m) {
        const std::int64_t e = 2 * n + (2 * n + 1) * m;
        if (e >= order) break;
        coeffs[static_cast<std::size_t>(e)] += half * (m + 1);
      }
    }
    return LaurentSeries::window(1, 0, order, std::move(coeffs));
  }
  throw UnknownNameError("unknown product side: " + std::string(name));
}

}  // namespace qpi
