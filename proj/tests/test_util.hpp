#pragma once

#include <doctest.h>

#include <random>
#include <vector>

#include "qpi/series.hpp"

namespace qpi::test {

/// Random truncated Laurent series with small rational coefficients; floors
/// may be negative and scales are 1 or 2.
inline LaurentSeries random_series(std::mt19937& rng, bool invertible = false) {
  std::uniform_int_distribution<int> scale_pick(0, 1);
  std::uniform_int_distribution<std::int64_t> floor_pick(-4, 4);
  std::uniform_int_distribution<int> len_pick(1, 12);
  std::uniform_int_distribution<int> num_pick(-3, 3);
  std::uniform_int_distribution<int> den_pick(1, 3);

  const int scale = scale_pick(rng) ? 2 : 1;
  const std::int64_t floor = floor_pick(rng);
  const int len = len_pick(rng);
  std::vector<BigRational> coeffs(static_cast<std::size_t>(len));
  for (auto& c : coeffs) c = rat(num_pick(rng), den_pick(rng));
  if (invertible && coeffs[0] == 0) coeffs[0] = 1;
  return LaurentSeries::window(scale, floor, floor + len, std::move(coeffs));
}

inline bool equal_to_min_order(const LaurentSeries& a0, const LaurentSeries& b0) {
  const int s = common_scale(a0, b0);
  const LaurentSeries a = a0.rescaled_to(s);
  const LaurentSeries b = b0.rescaled_to(s);
  return ts_eq_to_order(a, b, std::min(a.order(), b.order())).equal;
}

}  // namespace qpi::test
