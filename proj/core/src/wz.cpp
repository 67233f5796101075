#include "qpi/wz.hpp"

#include <cmath>
#include <string>

#include "qpi/qproducts.hpp"
#include "qsum.hpp"

namespace qpi {

namespace {

using detail::QSumSpec;
using detail::StepRatio;
using detail::sum_terms;

int wz_scale(const BigRational& a) {
  return scale_for_exponents({2 * a * a, 4 * a, 2 * a});
}

void check_offset(const BigRational& a) {
  if (a < 0) throw Error("offset a must be nonnegative");
}

std::int64_t t_units(const BigRational& q_exp, int s) {
  BigRational t = q_exp * s;
  return to_int64(t);  // throws when not integral; scale inference prevents that
}

/// (x; q^base)_r dispatching on whether the index is a nonnegative integer.
LaurentSeries poch_idx(const QMonomial& x, const BigRational& base, const BigRational& r,
                       std::int64_t order) {
  if (is_integer(r) && r >= 0) return poch_finite(x, base, to_int64(r));
  return poch_real(x, base, r, order);
}

/// 1 + q^{e1} - 2 q^{e2} at scale s.
LaurentSeries wz_trinomial(const BigRational& e1, const BigRational& e2, int s) {
  return ts_add(ts_add(LaurentSeries::constant(1, s), LaurentSeries::monomial(1, t_units(e1, s), s)),
                LaurentSeries::monomial(-2, t_units(e2, s), s));
}

}  // namespace

LaurentSeries b_q(std::int64_t n, std::int64_t k, const BigRational& a, std::int64_t order) {
  check_offset(a);
  if (n < 0 || k < 0) throw Error("b_q needs n, k >= 0");
  const int s = wz_scale(a);
  const std::int64_t order_t = order * s;
  const BigRational nu = a + n;

  const LaurentSeries qq2k = poch_finite(q_pow(1), 2, k);
  const LaurentSeries qq2nu = poch_idx(q_pow(1), 2, nu, order);
  const LaurentSeries num = LaurentSeries::monomial(1, t_units(2 * nu * nu + 4 * nu * k, s), s) *
                            (qq2k * qq2k) * ((qq2nu * qq2nu) * qq2nu);

  const LaurentSeries shifted_k = poch_finite(q_pow(2 * nu + 2), 2, k);
  const LaurentSeries q2q2nu = poch_idx(q_pow(2), 2, nu, order);
  const LaurentSeries minus1 = poch_idx(qmono(-1, 0), 1, 2 * nu, order);
  const LaurentSeries den = (shifted_k * shifted_k) * ((q2q2nu * q2q2nu) * q2q2nu) * minus1;
  if (den.is_zero()) throw PoleError("b_q denominator vanishes at n=" + std::to_string(n) +
                                     ", k=" + std::to_string(k));
  return ts_div(num, den, order_t);
}

LaurentSeries f_q(std::int64_t n, std::int64_t k, const BigRational& a, std::int64_t order) {
  check_offset(a);
  const int s = wz_scale(a);
  const BigRational nu = a + n;
  const LaurentSeries pre = LaurentSeries::one_minus(1, t_units(2 * nu, s), s);
  if (pre.is_zero()) return LaurentSeries::zero(s);  // nu = 0
  const LaurentSeries num = ts_scalar_mul(4, pre) * b_q(n, k, a, order);
  return ts_div(num, LaurentSeries::one_minus(1, s, s), order * s);
}

LaurentSeries g_q(std::int64_t n, std::int64_t k, const BigRational& a, std::int64_t order) {
  check_offset(a);
  const int s = wz_scale(a);
  const BigRational nu = a + n;
  const LaurentSeries num = ts_scalar_mul(4, wz_trinomial(2 * nu + 1, 4 * nu + 2 * k + 1, s)) *
                            b_q(n, k, a, order);
  const LaurentSeries den = LaurentSeries::one_minus(1, s, s) *
                            LaurentSeries::one_minus(-1, t_units(2 * nu, s), s) *
                            LaurentSeries::one_minus(-1, t_units(2 * nu + 1, s), s);
  return ts_div(num, den, order * s);
}

SeriesCompare wz_relation_check(std::int64_t n, std::int64_t k, const BigRational& a,
                                std::int64_t order) {
  const int s = wz_scale(a);
  const LaurentSeries lhs = f_q(n + 1, k, a, order) - f_q(n, k, a, order);
  const LaurentSeries rhs = g_q(n, k + 1, a, order) - g_q(n, k, a, order);
  return ts_eq_to_order(lhs, rhs, order * s);
}

WzGridReport wz_grid_check(const BigRational& a, std::int64_t nmax, std::int64_t kmax,
                           std::int64_t order) {
  check_offset(a);
  if (nmax < 0 || kmax < 0) throw Error("wz_grid_check needs nmax, kmax >= 0");
  const int s = wz_scale(a);
  const std::int64_t order_t = order * s;

  WzGridReport report;
  report.a = a;
  report.nmax = nmax;
  report.kmax = kmax;
  report.order = order;

  const LaurentSeries one_minus_q = LaurentSeries::one_minus(1, s, s);

  // B(nu, k+1) = B(nu, k) * q^{4nu} (1-q^{2k+1})^2 / (1-q^{2nu+2k+2})^2
  auto fill_row = [&](const LaurentSeries& b0, const BigRational& nu) {
    std::vector<LaurentSeries> row;
    row.reserve(static_cast<std::size_t>(kmax + 2));
    row.push_back(b0);
    for (std::int64_t k = 0; k <= kmax; ++k) {
      LaurentSeries next = row.back() * LaurentSeries::monomial(1, t_units(4 * nu, s), s);
      const LaurentSeries up = LaurentSeries::one_minus(1, t_units(BigRational(2 * k + 1), s), s);
      next = next * up * up;
      const LaurentSeries down =
          LaurentSeries::one_minus(1, t_units(2 * nu + 2 * k + 2, s), s);
      next = ts_div(ts_div(next, down, order_t), down, order_t);
      row.push_back(std::move(next));
    }
    return row;
  };

  // B(nu+1, 0) = B(nu, 0) * q^{4nu+2} (1-q^{2nu+1})^3
  //              / ((1-q^{2nu+2})^3 (1+q^{2nu})(1+q^{2nu+1}))
  auto row_step = [&](const LaurentSeries& b0, const BigRational& nu) {
    LaurentSeries next = b0 * LaurentSeries::monomial(1, t_units(4 * nu + 2, s), s);
    const LaurentSeries up = LaurentSeries::one_minus(1, t_units(2 * nu + 1, s), s);
    next = next * up * up * up;
    const LaurentSeries d1 = LaurentSeries::one_minus(1, t_units(2 * nu + 2, s), s);
    next = ts_div(ts_div(ts_div(next, d1, order_t), d1, order_t), d1, order_t);
    next = ts_div(next, LaurentSeries::one_minus(-1, t_units(2 * nu, s), s), order_t);
    next = ts_div(next, LaurentSeries::one_minus(-1, t_units(2 * nu + 1, s), s), order_t);
    return next;
  };

  auto f_of = [&](const LaurentSeries& b, const BigRational& nu) {
    const LaurentSeries pre = LaurentSeries::one_minus(1, t_units(2 * nu, s), s);
    if (pre.is_zero()) return LaurentSeries::zero(s);
    return ts_div(ts_scalar_mul(4, pre) * b, one_minus_q, order_t);
  };
  auto g_of = [&](const LaurentSeries& b, const BigRational& nu, std::int64_t k) {
    const LaurentSeries num =
        ts_scalar_mul(4, wz_trinomial(2 * nu + 1, 4 * nu + 2 * k + 1, s)) * b;
    LaurentSeries g = ts_div(num, one_minus_q, order_t);
    g = ts_div(g, LaurentSeries::one_minus(-1, t_units(2 * nu, s), s), order_t);
    return ts_div(g, LaurentSeries::one_minus(-1, t_units(2 * nu + 1, s), s), order_t);
  };

  std::vector<LaurentSeries> row = fill_row(b_q(0, 0, a, order), a);
  for (std::int64_t n = 0; n <= nmax; ++n) {
    const BigRational nu = a + n;
    std::vector<LaurentSeries> next_row = fill_row(row_step(row[0], nu), nu + 1);
    for (std::int64_t k = 0; k <= kmax; ++k) {
      const LaurentSeries lhs =
          f_of(next_row[static_cast<std::size_t>(k)], nu + 1) -
          f_of(row[static_cast<std::size_t>(k)], nu);
      const LaurentSeries rhs = g_of(row[static_cast<std::size_t>(k + 1)], nu, k + 1) -
                                g_of(row[static_cast<std::size_t>(k)], nu, k);
      const SeriesCompare cmp = ts_eq_to_order(lhs, rhs, order_t);
      ++report.checked;
      if (!cmp.equal) {
        report.all_equal = false;
        report.failures.push_back({n, k, cmp});
      }
    }
    row = std::move(next_row);
  }
  return report;
}

LaurentSeries telescope_g_sum(const BigRational& a, std::int64_t n_terms, std::int64_t order) {
  if (a <= 0) throw Error("telescoping requires a positive offset");
  const int s = wz_scale(a);
  auto ratio = [a](std::int64_t n) {
    const BigRational nu = a + n;
    StepRatio r;
    r.shift = 4 * nu + 2;
    const int s2 = wz_scale(a);
    r.num_poly.push_back(wz_trinomial(2 * nu + 3, 4 * nu + 5, s2));
    for (int i = 0; i < 3; ++i) r.num.push_back({1, 2 * nu + 1});
    r.den_poly.push_back(wz_trinomial(2 * nu + 1, 4 * nu + 1, s2));
    for (int i = 0; i < 3; ++i) r.den.push_back({1, 2 * nu + 2});
    r.den.push_back({-1, 2 * nu + 2});
    r.den.push_back({-1, 2 * nu + 3});
    return r;
  };
  QSumSpec qs;
  qs.scale = s;
  qs.order_t = order * s;
  qs.term_cap = n_terms;
  return sum_terms(g_q(0, 0, a, order), ratio, qs);
}

LaurentSeries telescope_f_sum(const BigRational& a, std::int64_t k_terms, std::int64_t order) {
  if (a <= 0) throw Error("telescoping requires a positive offset");
  const int s = wz_scale(a);
  auto ratio = [a](std::int64_t k) {
    StepRatio r;
    r.shift = 4 * a;
    r.num.push_back({1, 2 * k + 1});
    r.num.push_back({1, 2 * k + 1});
    r.den.push_back({1, 2 * a + 2 * k + 2});
    r.den.push_back({1, 2 * a + 2 * k + 2});
    return r;
  };
  QSumSpec qs;
  qs.scale = s;
  qs.order_t = order * s;
  qs.term_cap = k_terms;
  return sum_terms(f_q(0, 0, a, order), ratio, qs);
}

SeriesCompare telescope_check(const BigRational& a, std::int64_t n_terms, std::int64_t k_terms,
                              std::int64_t order) {
  const LaurentSeries g = telescope_g_sum(a, n_terms, order);
  const LaurentSeries f = telescope_f_sum(a, k_terms, order);
  return ts_eq_to_order(g, f, order * wz_scale(a));
}

LaurentSeries q2_common_factor(std::int64_t order) {
  const LaurentSeries p1 = poch_infinite(q_pow(1), 2, order);
  const LaurentSeries p16 = ((p1 * p1) * (p1 * p1)) * (p1 * p1);
  const LaurentSeries p2 = poch_infinite(q_pow(2), 2, order);
  const LaurentSeries p26 = ((p2 * p2) * (p2 * p2)) * (p2 * p2);
  const LaurentSeries num = LaurentSeries::monomial(4, 1, 2) * p16;
  const LaurentSeries den = LaurentSeries::one_minus(1, 1) * p26;
  return ts_div(num, den, order * 2);
}

LaurentSeries q2_from_telescoping(std::int64_t order) {
  // The common factor has valuation q^{1/2}, which costs the quotient one
  // t-unit of order; build both inputs one q-order wider.
  const LaurentSeries g = telescope_g_sum(BigRational(1, 2), -1, order + 1);
  const LaurentSeries c = q2_common_factor(order + 1);
  return ts_div(g, c, order * 2);
}

ClassicalWZTerm classical_pair(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0) throw Error("classical_pair needs n, k >= 0");
  ClassicalWZTerm t;
  t.n = n;
  t.k = k;
  const BigInt f2k = factorial(static_cast<unsigned long>(2 * k));
  const BigInt f2n = factorial(static_cast<unsigned long>(2 * n));
  const BigInt fnk = factorial(static_cast<unsigned long>(n + k));
  const BigInt fk = factorial(static_cast<unsigned long>(k));
  const BigInt fn = factorial(static_cast<unsigned long>(n));
  BigInt pow2;
  mpz_ui_pow_ui(pow2.get_mpz_t(), 2, static_cast<unsigned long>(8 * n + 4 * k));
  const BigInt num = f2k * f2k * f2n * f2n * f2n;
  const BigInt den = pow2 * fnk * fnk * fk * fk * fn * fn * fn * fn;
  t.b = BigRational(num) / BigRational(den);
  t.f = BigRational(8 * n) * t.b;
  t.g = BigRational(6 * n + 4 * k + 1) * t.b;
  return t;
}

namespace {

double numeric_poch(double q0, double c, double e, double base, std::int64_t m) {
  double prod = 1.0;
  for (std::int64_t j = 0; j < m; ++j) prod *= 1.0 - c * std::pow(q0, e + base * j);
  return prod;
}

double numeric_b(double q0, std::int64_t n, std::int64_t k) {
  const double dn = static_cast<double>(n), dk = static_cast<double>(k);
  const double num = std::pow(q0, 2 * dn * dn + 4 * dn * dk) *
                     std::pow(numeric_poch(q0, 1, 1, 2, k), 2) *
                     std::pow(numeric_poch(q0, 1, 1, 2, n), 3);
  const double den = std::pow(numeric_poch(q0, 1, 2 * dn + 2, 2, k), 2) *
                     std::pow(numeric_poch(q0, 1, 2, 2, n), 3) *
                     numeric_poch(q0, -1, 0, 1, 2 * n);
  return num / den;
}

}  // namespace

ClassicalLimitReport classical_limit_check(std::int64_t n, std::int64_t k,
                                           const std::vector<double>& eps_schedule) {
  if (n < 0 || k < 0) throw Error("classical_limit_check needs n, k >= 0");
  ClassicalLimitReport report;
  report.n = n;
  report.k = k;
  const ClassicalWZTerm target = classical_pair(n, k);
  report.f_target = target.f.get_d();
  report.g_target = target.g.get_d();

  for (const double eps : eps_schedule) {
    if (!(eps > 0.0 && eps < 1.0)) throw Error("eps must lie in (0,1)");
    const double q0 = 1.0 - eps;
    const double b = numeric_b(q0, n, k);
    const double dn = static_cast<double>(n), dk = static_cast<double>(k);
    const double f = 4.0 * (1.0 - std::pow(q0, 2 * dn)) / (1.0 - q0) * b;
    const double g = 4.0 * (1.0 + std::pow(q0, 2 * dn + 1) - 2.0 * std::pow(q0, 4 * dn + 2 * dk + 1)) /
                     ((1.0 - q0) * (1.0 + std::pow(q0, 2 * dn)) * (1.0 + std::pow(q0, 2 * dn + 1))) * b;
    report.f_points.push_back({eps, f, std::abs(f - report.f_target)});
    report.g_points.push_back({eps, g, std::abs(g - report.g_target)});
  }
  for (std::size_t i = 1; i < report.f_points.size(); ++i) {
    if (report.f_points[i].abs_error > report.f_points[i - 1].abs_error)
      report.f_errors_decreasing = false;
    if (report.g_points[i].abs_error > report.g_points[i - 1].abs_error)
      report.g_errors_decreasing = false;
  }
  return report;
}

}  // namespace qpi
