#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qpi/errors.hpp"
#include "qpi/rational.hpp"

namespace qpi {

/// Order value marking a series as an exact Laurent polynomial: every
/// coefficient outside the stored support is exactly zero, at all orders.
inline constexpr std::int64_t kExactOrder = std::int64_t{1} << 60;

/// Truncated Laurent series in t = q^{1/scale} with exact rational
/// coefficients.
///
/// Semantics of the bookkeeping fields:
///   - scale:  q = t^scale; all exponents below are t-exponents.
///   - floor:  support lower bound; coefficients below floor are exactly 0.
///   - order:  exclusive knowledge bound; coefficients at t-exponents >= order
///             are unknown (kExactOrder means "known everywhere").
///
/// Truncation order is a hard contract: no operation reports a coefficient
/// beyond the order it can vouch for, and multiplication propagates order
/// pessimistically (min over inputs of input.order + other.floor).
class LaurentSeries {
public:
  /// Exact zero at scale 1.
  LaurentSeries() = default;

  static LaurentSeries zero(int scale = 1);
  static LaurentSeries constant(const BigRational& c, int scale = 1);
  /// c * t^t_exp, exact.
  static LaurentSeries monomial(const BigRational& c, std::int64_t t_exp, int scale = 1);
  /// 1 - c * t^t_exp, exact.  (The ubiquitous q-Pochhammer factor shape.)
  static LaurentSeries one_minus(const BigRational& c, std::int64_t t_exp, int scale = 1);
  /// Exact Laurent polynomial with the given support start.
  static LaurentSeries polynomial(int scale, std::int64_t floor, std::vector<BigRational> coeffs);
  /// Truncated series over the window [floor, order).
  static LaurentSeries window(int scale, std::int64_t floor, std::int64_t order,
                              std::vector<BigRational> coeffs);

  int scale() const { return scale_; }
  std::int64_t floor() const { return floor_; }
  std::int64_t order() const { return order_; }
  bool is_exact() const { return order_ == kExactOrder; }
  const std::vector<BigRational>& coeffs() const { return coeffs_; }

  /// Coefficient of t^t_exp; zero below floor and beyond the stored support
  /// of an exact polynomial, error at or past a truncated series' order.
  const BigRational& coeff(std::int64_t t_exp) const;
  /// Coefficient of q^q_exp (zero when q_exp*scale is not an integer).
  BigRational coeff_q(const BigRational& q_exp) const;

  /// t-exponent of the first nonzero stored coefficient.
  std::optional<std::int64_t> valuation() const;
  /// True when no stored coefficient is nonzero.  For an exact series this
  /// means the zero polynomial; for a truncated one, zero on its window.
  bool is_zero() const;
  std::size_t nonzero_count() const;

  /// Same series at a finer scale (new_scale must be a multiple of scale).
  LaurentSeries rescaled_to(int new_scale) const;
  /// Restricts the knowledge window; order may only shrink.
  LaurentSeries truncated(std::int64_t t_order) const;

  std::string to_string(std::size_t max_terms = 12) const;

private:
  int scale_ = 1;
  std::int64_t floor_ = 0;
  std::int64_t order_ = kExactOrder;
  std::vector<BigRational> coeffs_;  // indexed from floor_

  void normalize();
  friend LaurentSeries ts_add(const LaurentSeries&, const LaurentSeries&);
  friend LaurentSeries ts_mul(const LaurentSeries&, const LaurentSeries&);
  friend LaurentSeries ts_neg(const LaurentSeries&);
  friend LaurentSeries ts_scalar_mul(const BigRational&, const LaurentSeries&);
  friend LaurentSeries ts_inv(const LaurentSeries&, std::int64_t);
  friend LaurentSeries ts_div(const LaurentSeries&, const LaurentSeries&, std::int64_t);
  friend LaurentSeries ts_substitute_power(const LaurentSeries&, const BigRational&);
};

/// Outcome of an exact comparison up to a contracted order.
struct SeriesCompare {
  bool equal = true;
  int scale = 1;                 // scale the comparison ran at
  std::int64_t t_exponent = 0;   // first mismatching t-exponent when !equal
  BigRational lhs;
  BigRational rhs;
  explicit operator bool() const { return equal; }
};

/// Result of a floating-point evaluation: the Horner value and the magnitude
/// of the last retained nonzero term (a crude truncation-tail indicator).
struct RealEval {
  double value = 0.0;
  double tail = 0.0;
};

LaurentSeries ts_add(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries ts_sub(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries ts_neg(const LaurentSeries& a);
LaurentSeries ts_mul(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries ts_scalar_mul(const BigRational& c, const LaurentSeries& a);

/// Multiplicative inverse to t-order target_order (used when the input is an
/// exact polynomial, whose inverse is a genuinely infinite series; for a
/// truncated input the honest bound min(target_order, order - 2*valuation)
/// applies).
LaurentSeries ts_inv(const LaurentSeries& a, std::int64_t target_order);
LaurentSeries ts_div(const LaurentSeries& a, const LaurentSeries& b, std::int64_t target_order);

/// q -> q^m base change for positive rational m.
LaurentSeries ts_substitute_power(const LaurentSeries& a, const BigRational& m);

/// Exact comparison up to t-exponent n (exclusive), at the common scale of a
/// and b; n must not exceed either contracted order.
SeriesCompare ts_eq_to_order(const LaurentSeries& a, const LaurentSeries& b, std::int64_t n);
/// Same, with the bound given in q-exponent units.
SeriesCompare ts_eq_to_q_order(const LaurentSeries& a, const LaurentSeries& b, std::int64_t n_q);

/// Horner evaluation at t = q0^{1/scale}, 0 < q0 < 1.
RealEval ts_eval_real(const LaurentSeries& a, double q0);

inline LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) { return ts_add(a, b); }
inline LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return ts_sub(a, b); }
inline LaurentSeries operator-(const LaurentSeries& a) { return ts_neg(a); }
inline LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) { return ts_mul(a, b); }
inline LaurentSeries operator*(const BigRational& c, const LaurentSeries& a) { return ts_scalar_mul(c, a); }

/// Least scale at which both series live, or throws ScaleMismatchError when
/// neither scale divides the other.
int common_scale(const LaurentSeries& a, const LaurentSeries& b);

}  // namespace qpi
