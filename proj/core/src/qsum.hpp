#pragma once

// Internal driver for q-hypergeometric-style sums: a first term plus a
// per-step multiplicative ratio made of a monomial, factors (1 - c q^e) and
// optional exact polynomial factors.  Shared by the hypergeometric and WZ
// modules; not installed.

#include <cstdint>
#include <functional>
#include <vector>

#include "qpi/series.hpp"

namespace qpi::detail {

/// A literal factor (1 - c * q^e).
struct StepFactor {
  BigRational c;
  BigRational e;
};

/// t_{k+1} = t_k * coeff * q^shift * prod(num) * prod(num_poly)
///                 / (prod(den) * prod(den_poly)).
/// Polynomial factors must be exact series at the working scale.
struct StepRatio {
  BigRational coeff = 1;
  BigRational shift = 0;  // q-exponent units
  std::vector<StepFactor> num;
  std::vector<StepFactor> den;
  std::vector<LaurentSeries> num_poly;
  std::vector<LaurentSeries> den_poly;
};

/// Step in applicable form: one monomial shift (t-units) followed by unit
/// multiplications and divisions.  Negative-exponent factors (1 - c q^{-j})
/// are rewritten as -c q^{-j} (1 - c^{-1} q^{j}) during normalization, so a
/// step never spreads a truncation window downward mid-flight.
struct NormalizedRatio {
  BigRational coeff = 1;
  std::int64_t shift_t = 0;
  std::vector<LaurentSeries> mul;  // exact units (valuation 0)
  std::vector<LaurentSeries> div;  // exact units (valuation 0)
  bool terminates = false;         // a numerator factor vanished identically
};

NormalizedRatio normalize_ratio(const StepRatio& r, int scale, std::int64_t step);

struct QSumSpec {
  int scale = 1;
  std::int64_t order_t = 0;    // exclusive t-order of the requested window
  std::int64_t safe_from = 0;  // step from which shifts are nonnegative forever
  // Extra division headroom per step (empty means none): headroom[k] bounds
  // how far steps >= k can still shift the window down.
  std::vector<std::int64_t> headroom;
  std::int64_t max_terms = std::int64_t{1} << 20;
  std::int64_t term_cap = -1;  // >= 0: hard cap; dropping in-window terms throws
};

/// Sum of term0 * prod_{j<k} ratio(j) over k, truncated at spec.order_t.
LaurentSeries sum_terms(const LaurentSeries& term0,
                        const std::function<StepRatio(std::int64_t)>& ratio,
                        const QSumSpec& spec);

}  // namespace qpi::detail
