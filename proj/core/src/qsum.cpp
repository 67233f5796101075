#include "qsum.hpp"

#include <string>

namespace qpi::detail {

namespace {

std::int64_t t_units(const BigRational& q_exp, int scale) {
  BigRational t = q_exp * scale;
  if (!is_integer(t))
    throw ScaleMismatchError("step exponent " + rat_to_string(q_exp) +
                             " is not integral at scale 1/" + std::to_string(scale));
  return to_int64(t);
}

}  // namespace

NormalizedRatio normalize_ratio(const StepRatio& r, int scale, std::int64_t step) {
  NormalizedRatio out;
  out.coeff = r.coeff;
  BigRational shift = r.shift;

  // Denominators first: a vanishing denominator factor is a pole even when a
  // numerator factor vanishes at the same step (exact arithmetic has no 0/0).
  for (const auto& f : r.den) {
    if (f.c == 0) continue;  // the factor is 1
    if (f.e == 0) {
      if (f.c == 1)
        throw PoleError("denominator factor (1 - q^0) vanishes at term " + std::to_string(step));
      out.coeff /= (1 - f.c);
      continue;
    }
    if (f.e < 0) {
      out.coeff /= -f.c;
      shift -= f.e;
      out.div.push_back(
          LaurentSeries::one_minus(BigRational(1) / f.c, t_units(-f.e, scale), scale));
    } else {
      out.div.push_back(LaurentSeries::one_minus(f.c, t_units(f.e, scale), scale));
    }
  }
  for (const auto& p : r.den_poly) {
    const LaurentSeries q = p.rescaled_to(scale);
    const auto v = q.valuation();
    if (!v) throw PoleError("zero polynomial divisor at term " + std::to_string(step));
    shift -= BigRational(*v) / scale;
    out.div.push_back(*v == 0 ? q : q * LaurentSeries::monomial(1, -*v, scale));
  }
  for (const auto& f : r.num) {
    if (f.c == 0) continue;
    if (f.e == 0) {
      if (f.c == 1) {
        out.terminates = true;  // this and every later term is exactly zero
        continue;
      }
      out.coeff *= (1 - f.c);
      continue;
    }
    if (f.e < 0) {
      out.coeff *= -f.c;
      shift += f.e;
      out.mul.push_back(
          LaurentSeries::one_minus(BigRational(1) / f.c, t_units(-f.e, scale), scale));
    } else {
      out.mul.push_back(LaurentSeries::one_minus(f.c, t_units(f.e, scale), scale));
    }
  }
  for (const auto& p : r.num_poly) {
    const LaurentSeries q = p.rescaled_to(scale);
    const auto v = q.valuation();
    if (!v) {
      out.terminates = true;
      continue;
    }
    shift += BigRational(*v) / scale;
    out.mul.push_back(*v == 0 ? q : q * LaurentSeries::monomial(1, -*v, scale));
  }
  if (out.coeff == 0) out.terminates = true;  // e.g. a zero argument
  out.shift_t = t_units(shift, scale);
  return out;
}

namespace {

LaurentSeries apply_ratio(const LaurentSeries& term, const NormalizedRatio& r, int scale,
                          std::int64_t div_order) {
  LaurentSeries t = term * LaurentSeries::monomial(r.coeff, r.shift_t, scale);
  for (const auto& f : r.div) t = ts_div(t, f, div_order);
  for (const auto& f : r.mul) t = t * f;
  return t;
}

}  // namespace

LaurentSeries sum_terms(const LaurentSeries& term0,
                        const std::function<StepRatio(std::int64_t)>& ratio,
                        const QSumSpec& spec) {
  LaurentSeries acc = LaurentSeries::zero(spec.scale);
  LaurentSeries term = term0.rescaled_to(spec.scale);
  for (std::int64_t k = 0;; ++k) {
    if (k > spec.max_terms)
      throw DivergentSpecError("sum exceeded " + std::to_string(spec.max_terms) + " terms");
    if (term.is_zero()) break;  // exactly zero, or zero on every window it can still reach
    const auto val = term.valuation();
    const bool beyond = val && *val >= spec.order_t;
    if (k >= spec.safe_from && beyond) break;
    if (spec.term_cap >= 0 && k >= spec.term_cap) {
      if (beyond) break;
      throw InsufficientTermsError("term " + std::to_string(k) +
                                   " still lies inside the window at the configured cap");
    }
    acc = ts_add(acc, term);

    const NormalizedRatio r = normalize_ratio(ratio(k), spec.scale, k);
    if (r.terminates) break;
    if (k >= spec.safe_from && r.shift_t < 0)
      throw Error("sum stop-plan is unsound: negative shift at term " + std::to_string(k));
    // Unit factors keep the valuation, so the next term's valuation is known
    // before it is built.
    if (k >= spec.safe_from && val && *val + r.shift_t >= spec.order_t) break;
    const std::int64_t h = (k + 1 < static_cast<std::int64_t>(spec.headroom.size()))
                               ? spec.headroom[static_cast<std::size_t>(k + 1)]
                               : 0;
    term = apply_ratio(term, r, spec.scale, spec.order_t + h);
  }
  return acc.truncated(spec.order_t);
}

}  // namespace qpi::detail
