#include "qpi/series.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace qpi {

namespace {

const BigRational kZero = 0;

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error("exponent overflow");
  return r;
}

// order arithmetic that keeps the exactness sentinel absorbing
std::int64_t order_plus(std::int64_t order, std::int64_t shift) {
  if (order >= kExactOrder) return kExactOrder;
  return order + shift;
}

}  // namespace

void LaurentSeries::normalize() {
  // Drop leading zeros (floor is a support bound, not part of the contract),
  // and for exact polynomials also trailing zeros.  A truncated window keeps
  // at least one slot so that order > floor stays true.
  std::size_t max_trim = coeffs_.size();
  if (!is_exact() && max_trim > 0) max_trim -= 1;
  std::size_t lead = 0;
  while (lead < max_trim && coeffs_[lead] == 0) ++lead;
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
    floor_ += static_cast<std::int64_t>(lead);
  }
  if (is_exact()) {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    if (coeffs_.empty()) floor_ = 0;
  }
}

LaurentSeries LaurentSeries::zero(int scale) {
  LaurentSeries s;
  s.scale_ = scale;
  return s;
}

LaurentSeries LaurentSeries::constant(const BigRational& c, int scale) {
  return monomial(c, 0, scale);
}

LaurentSeries LaurentSeries::monomial(const BigRational& c, std::int64_t t_exp, int scale) {
  LaurentSeries s;
  s.scale_ = scale;
  if (c != 0) {
    s.floor_ = t_exp;
    s.coeffs_.push_back(c);
  }
  return s;
}

LaurentSeries LaurentSeries::one_minus(const BigRational& c, std::int64_t t_exp, int scale) {
  return ts_sub(constant(1, scale), monomial(c, t_exp, scale));
}

LaurentSeries LaurentSeries::polynomial(int scale, std::int64_t floor,
                                        std::vector<BigRational> coeffs) {
  LaurentSeries s;
  s.scale_ = scale;
  s.floor_ = floor;
  s.coeffs_ = std::move(coeffs);
  s.normalize();
  return s;
}

LaurentSeries LaurentSeries::window(int scale, std::int64_t floor, std::int64_t order,
                                    std::vector<BigRational> coeffs) {
  if (order <= floor) throw InsufficientOrderError("empty truncation window");
  LaurentSeries s;
  s.scale_ = scale;
  s.floor_ = floor;
  s.order_ = order;
  s.coeffs_ = std::move(coeffs);
  s.coeffs_.resize(static_cast<std::size_t>(order - floor));
  s.normalize();
  return s;
}

const BigRational& LaurentSeries::coeff(std::int64_t t_exp) const {
  if (t_exp < floor_) return kZero;
  if (t_exp >= order_) {
    throw InsufficientOrderError("coefficient of t^" + std::to_string(t_exp) +
                                 " is beyond the contracted order " + std::to_string(order_));
  }
  const auto idx = static_cast<std::size_t>(t_exp - floor_);
  if (idx >= coeffs_.size()) return kZero;  // exact polynomial past its support
  return coeffs_[idx];
}

BigRational LaurentSeries::coeff_q(const BigRational& q_exp) const {
  BigRational t = q_exp * scale_;
  if (!is_integer(t)) return 0;
  return coeff(to_int64(t));
}

std::optional<std::int64_t> LaurentSeries::valuation() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return floor_ + static_cast<std::int64_t>(i);
  return std::nullopt;
}

bool LaurentSeries::is_zero() const { return !valuation().has_value(); }

std::size_t LaurentSeries::nonzero_count() const {
  std::size_t n = 0;
  for (const auto& c : coeffs_)
    if (c != 0) ++n;
  return n;
}

LaurentSeries LaurentSeries::rescaled_to(int new_scale) const {
  if (new_scale == scale_) return *this;
  if (new_scale <= 0 || new_scale % scale_ != 0)
    throw ScaleMismatchError("cannot rescale from 1/" + std::to_string(scale_) + " to 1/" +
                             std::to_string(new_scale));
  const int c = new_scale / scale_;
  LaurentSeries r;
  r.scale_ = new_scale;
  r.floor_ = checked_mul(floor_, c);
  r.order_ = is_exact() ? kExactOrder : checked_mul(order_, c);
  if (!coeffs_.empty()) {
    r.coeffs_.resize((coeffs_.size() - 1) * static_cast<std::size_t>(c) + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      r.coeffs_[i * static_cast<std::size_t>(c)] = coeffs_[i];
  }
  if (!r.is_exact()) r.coeffs_.resize(static_cast<std::size_t>(r.order_ - r.floor_));
  return r;
}

LaurentSeries LaurentSeries::truncated(std::int64_t t_order) const {
  if (t_order >= order_) return *this;
  if (t_order <= floor_) {
    // everything below floor is exactly zero, so the window is all zeros
    LaurentSeries r = zero(scale_);
    r.order_ = t_order;
    r.floor_ = t_order - 1;
    r.coeffs_.assign(1, 0);
    return r;
  }
  LaurentSeries r;
  r.scale_ = scale_;
  r.floor_ = floor_;
  r.order_ = t_order;
  r.coeffs_.assign(coeffs_.begin(),
                   coeffs_.begin() + std::min<std::size_t>(coeffs_.size(),
                                                           static_cast<std::size_t>(t_order - floor_)));
  r.coeffs_.resize(static_cast<std::size_t>(t_order - floor_));
  r.normalize();
  return r;
}

std::string LaurentSeries::to_string(std::size_t max_terms) const {
  std::ostringstream out;
  std::size_t shown = 0;
  for (std::size_t i = 0; i < coeffs_.size() && shown < max_terms; ++i) {
    if (coeffs_[i] == 0) continue;
    if (shown > 0) out << " + ";
    const std::int64_t e = floor_ + static_cast<std::int64_t>(i);
    out << rat_to_string(coeffs_[i]);
    if (e != 0) {
      out << "*q^";
      if (scale_ == 1)
        out << e;
      else
        out << "(" << e << "/" << scale_ << ")";
    }
    ++shown;
  }
  if (shown == 0) out << "0";
  if (shown == max_terms) out << " + ...";
  if (!is_exact()) out << " + O(q^(" << order_ << "/" << scale_ << "))";
  return out.str();
}

int common_scale(const LaurentSeries& a, const LaurentSeries& b) {
  if (a.scale() == b.scale()) return a.scale();
  if (a.scale() % b.scale() == 0) return a.scale();
  if (b.scale() % a.scale() == 0) return b.scale();
  throw ScaleMismatchError("incompatible scales 1/" + std::to_string(a.scale()) + " and 1/" +
                           std::to_string(b.scale()));
}

LaurentSeries ts_add(const LaurentSeries& a0, const LaurentSeries& b0) {
  const int s = common_scale(a0, b0);
  const LaurentSeries a = a0.rescaled_to(s);
  const LaurentSeries b = b0.rescaled_to(s);

  LaurentSeries r;
  r.scale_ = s;
  r.order_ = std::min(a.order_, b.order_);
  r.floor_ = std::min(a.floor_, b.floor_);
  std::int64_t hi;  // exclusive upper bound of the stored window
  if (r.order_ == kExactOrder) {
    hi = std::max(a.floor_ + static_cast<std::int64_t>(a.coeffs_.size()),
                  b.floor_ + static_cast<std::int64_t>(b.coeffs_.size()));
    if (hi == r.floor_) return LaurentSeries::zero(s);  // both zero
  } else {
    if (r.order_ <= r.floor_) throw InsufficientOrderError("sum has an empty window");
    hi = r.order_;
  }
  r.coeffs_.assign(static_cast<std::size_t>(hi - r.floor_), 0);
  auto accumulate = [&](const LaurentSeries& x) {
    for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
      const std::int64_t e = x.floor_ + static_cast<std::int64_t>(i);
      if (e >= hi) break;
      r.coeffs_[static_cast<std::size_t>(e - r.floor_)] += x.coeffs_[i];
    }
  };
  accumulate(a);
  accumulate(b);
  r.normalize();
  return r;
}

LaurentSeries ts_neg(const LaurentSeries& a) {
  LaurentSeries r = a;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

LaurentSeries ts_sub(const LaurentSeries& a, const LaurentSeries& b) { return ts_add(a, ts_neg(b)); }

LaurentSeries ts_scalar_mul(const BigRational& c, const LaurentSeries& a) {
  if (c == 0 && a.is_exact()) return LaurentSeries::zero(a.scale());
  LaurentSeries r = a;
  for (auto& x : r.coeffs_) x *= c;
  r.normalize();
  return r;
}

LaurentSeries ts_mul(const LaurentSeries& a0, const LaurentSeries& b0) {
  const int s = common_scale(a0, b0);
  const LaurentSeries a = a0.rescaled_to(s);
  const LaurentSeries b = b0.rescaled_to(s);

  // An exact zero annihilates everything, including unknown tails.
  if ((a.is_exact() && a.is_zero()) || (b.is_exact() && b.is_zero()))
    return LaurentSeries::zero(s);

  LaurentSeries r;
  r.scale_ = s;
  r.floor_ = a.floor_ + b.floor_;
  r.order_ = std::min(order_plus(a.order_, b.floor_), order_plus(b.order_, a.floor_));
  std::int64_t hi;
  if (r.order_ == kExactOrder) {
    hi = r.floor_ + static_cast<std::int64_t>(a.coeffs_.size() + b.coeffs_.size()) - 1;
  } else {
    if (r.order_ <= r.floor_) throw InsufficientOrderError("product has an empty window");
    hi = r.order_;
  }
  r.coeffs_.assign(static_cast<std::size_t>(hi - r.floor_), 0);

  // Convolve, iterating the sparser operand on the outside and skipping its
  // zero coefficients; q-Pochhammer factors make near-binomial operands the
  // common case.
  const bool a_outer = a.nonzero_count() <= b.nonzero_count();
  const LaurentSeries& u = a_outer ? a : b;
  const LaurentSeries& v = a_outer ? b : a;
  for (std::size_t i = 0; i < u.coeffs_.size(); ++i) {
    if (u.coeffs_[i] == 0) continue;
    const std::int64_t eu = u.floor_ + static_cast<std::int64_t>(i);
    const std::int64_t jmax = hi - eu - v.floor_;  // exclusive, relative to v
    const std::size_t jend = std::min<std::size_t>(v.coeffs_.size(),
                                                   jmax > 0 ? static_cast<std::size_t>(jmax) : 0);
    const std::size_t base = static_cast<std::size_t>(eu + v.floor_ - r.floor_);
    for (std::size_t j = 0; j < jend; ++j) {
      if (v.coeffs_[j] == 0) continue;
      r.coeffs_[base + j] += u.coeffs_[i] * v.coeffs_[j];
    }
  }
  r.normalize();
  return r;
}

LaurentSeries ts_inv(const LaurentSeries& a, std::int64_t target_order) {
  return ts_div(LaurentSeries::constant(1, a.scale()), a, target_order);
}

LaurentSeries ts_div(const LaurentSeries& a0, const LaurentSeries& b0, std::int64_t target_order) {
  const int s = common_scale(a0, b0);
  const LaurentSeries a = a0.rescaled_to(s);
  const LaurentSeries b = b0.rescaled_to(s);

  const auto mb_opt = b.valuation();
  if (!mb_opt) {
    throw NotInvertibleError(b.is_exact() ? "division by the zero series"
                                          : "divisor has an identically-zero leading window");
  }
  const std::int64_t mb = *mb_opt;
  if (a.is_exact() && a.is_zero()) return LaurentSeries::zero(s);

  LaurentSeries r;
  r.scale_ = s;
  r.floor_ = a.floor_ - mb;
  // A target below the quotient's floor would make the window empty; one
  // slot is always available, and the input-order bounds both exceed the
  // floor (order > floor on each input), so this never overclaims.
  r.order_ = std::max(target_order, r.floor_ + 1);
  if (!a.is_exact()) r.order_ = std::min(r.order_, a.order_ - mb);
  if (!b.is_exact()) r.order_ = std::min(r.order_, b.order_ - 2 * mb + a.floor_);
  if (r.order_ <= r.floor_) throw InsufficientOrderError("quotient has an empty window");

  const std::size_t len = static_cast<std::size_t>(r.order_ - r.floor_);
  r.coeffs_.assign(len, 0);

  // Long division c = a/b via the triangular recurrence
  //   c_i = (a_{floor_a + i} - sum_{j>=1} b_{mb+j} c_{i-j}) / b_{mb},
  // touching only the nonzero coefficients of the divisor's unit part.
  const BigRational& lead = b.coeff(mb);
  std::vector<std::pair<std::size_t, const BigRational*>> bnz;
  for (std::size_t j = 1; j + static_cast<std::size_t>(mb - b.floor_) < b.coeffs_.size(); ++j) {
    const BigRational& bj = b.coeffs_[static_cast<std::size_t>(mb - b.floor_) + j];
    if (bj != 0) bnz.emplace_back(j, &bj);
  }
  BigRational acc;
  for (std::size_t i = 0; i < len; ++i) {
    const std::int64_t ea = a.floor_ + static_cast<std::int64_t>(i);
    acc = (ea < a.floor_ + static_cast<std::int64_t>(a.coeffs_.size()) && ea >= a.floor_)
              ? a.coeffs_[i]
              : kZero;
    for (const auto& [j, bj] : bnz) {
      if (j > i) break;
      acc -= *bj * r.coeffs_[i - j];
    }
    acc /= lead;
    r.coeffs_[i] = acc;
  }
  r.normalize();
  return r;
}

LaurentSeries ts_substitute_power(const LaurentSeries& a, const BigRational& m) {
  if (m <= 0) throw Error("substitute_power requires a positive exponent factor");
  if (!m.get_num().fits_slong_p() || !m.get_den().fits_slong_p())
    throw Error("substitute_power factor out of range");
  const std::int64_t p = m.get_num().get_si();
  const std::int64_t r_den = m.get_den().get_si();
  const std::int64_t g = std::gcd(p, checked_mul(r_den, a.scale()));
  const std::int64_t new_scale64 = checked_mul(r_den, a.scale()) / g;
  if (new_scale64 > (std::int64_t{1} << 20)) throw ScaleMismatchError("substitution scale too large");
  const int new_scale = static_cast<int>(new_scale64);
  const std::int64_t mult = p / g;  // every t-exponent is multiplied by this

  LaurentSeries out;
  out.scale_ = new_scale;
  out.floor_ = checked_mul(a.floor_, mult);
  out.order_ = a.is_exact() ? kExactOrder : checked_mul(a.order_, mult);
  if (!a.coeffs_.empty()) {
    out.coeffs_.resize((a.coeffs_.size() - 1) * static_cast<std::size_t>(mult) + 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      out.coeffs_[i * static_cast<std::size_t>(mult)] = a.coeffs_[i];
  }
  if (!out.is_exact()) out.coeffs_.resize(static_cast<std::size_t>(out.order_ - out.floor_));
  out.normalize();
  return out;
}

SeriesCompare ts_eq_to_order(const LaurentSeries& a0, const LaurentSeries& b0, std::int64_t n) {
  const int s = common_scale(a0, b0);
  const LaurentSeries a = a0.rescaled_to(s);
  const LaurentSeries b = b0.rescaled_to(s);
  if (n > a.order() || n > b.order()) {
    throw InsufficientOrderError("comparison up to t^" + std::to_string(n) +
                                 " exceeds an available order (" + std::to_string(a.order()) +
                                 ", " + std::to_string(b.order()) + ")");
  }
  SeriesCompare out;
  out.scale = s;
  for (std::int64_t e = std::min(a.floor(), b.floor()); e < n; ++e) {
    const BigRational& x = a.coeff(e);
    const BigRational& y = b.coeff(e);
    if (x != y) {
      out.equal = false;
      out.t_exponent = e;
      out.lhs = x;
      out.rhs = y;
      return out;
    }
  }
  return out;
}

SeriesCompare ts_eq_to_q_order(const LaurentSeries& a, const LaurentSeries& b, std::int64_t n_q) {
  const int s = common_scale(a, b);
  return ts_eq_to_order(a, b, checked_mul(n_q, s));
}

RealEval ts_eval_real(const LaurentSeries& a, double q0) {
  if (!(q0 > 0.0 && q0 < 1.0)) throw Error("evaluation point must lie in (0,1)");
  const double t0 = std::pow(q0, 1.0 / a.scale());
  RealEval out;
  double acc = 0.0;
  for (std::size_t i = a.coeffs().size(); i-- > 0;) acc = acc * t0 + a.coeffs()[i].get_d();
  out.value = acc * std::pow(t0, static_cast<double>(a.floor()));
  for (std::size_t i = a.coeffs().size(); i-- > 0;) {
    if (a.coeffs()[i] != 0) {
      const double e = static_cast<double>(a.floor() + static_cast<std::int64_t>(i));
      out.tail = std::abs(a.coeffs()[i].get_d()) * std::pow(t0, e);
      break;
    }
  }
  return out;
}

}  // namespace qpi
