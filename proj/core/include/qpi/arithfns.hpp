#pragma once

#include <cstdint>
#include <vector>

#include "qpi/series.hpp"

namespace qpi {

/// T_x = x(x+1)/2.
std::int64_t triangular(std::int64_t x);

/// |{(x,y) in N^2 : T_x + 4 T_y = n}| by direct enumeration.
std::int64_t t2_brute(std::int64_t n);

/// Divisor-sum form: sum over d | 8n+5, d < sqrt(8n+5) of (-1)^{(d-1)/2}.
std::int64_t t2_formula(std::int64_t n);

/// Lattice points on x^2 + y^2 = m, by enumeration and by the signed
/// odd-divisor sum 4 * sum_{odd d | m} (-1)^{(d-1)/2}.
std::int64_t r2_brute(std::int64_t m);
std::int64_t r2_formula(std::int64_t m);

struct DivisorSumResult {
  std::int64_t n = 0;
  std::int64_t brute = 0;
  std::int64_t formula = 0;
  bool match() const { return brute == formula; }
};

/// One row of the verification table.
DivisorSumResult t2_check(std::int64_t n);

/// Verifies that coefficient n of the double-sum expansion of the pi2 sum
/// side equals t2_formula(n) for every n < order.
SeriesCompare lambert_coefficient_check(std::int64_t order);

}  // namespace qpi
