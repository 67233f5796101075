#include "qpi/arithfns.hpp"

#include <cmath>

namespace qpi {

namespace {

std::int64_t checked_nonneg(std::int64_t v, const char* what) {
  if (v < 0) throw Error(std::string(what) + " must be nonnegative");
  return v;
}

std::int64_t isqrt64(std::int64_t n) {
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

bool is_triangular(std::int64_t v) {
  // v = y(y+1)/2  <=>  8v+1 is an odd square
  const std::int64_t s = isqrt64(8 * v + 1);
  return s * s == 8 * v + 1;
}

}  // namespace

std::int64_t triangular(std::int64_t x) {
  checked_nonneg(x, "triangular argument");
  return x * (x + 1) / 2;
}

std::int64_t t2_brute(std::int64_t n) {
  checked_nonneg(n, "t2 argument");
  std::int64_t count = 0;
  for (std::int64_t x = 0; triangular(x) <= n; ++x) {
    const std::int64_t rest = n - triangular(x);
    if (rest % 4 == 0 && is_triangular(rest / 4)) ++count;
  }
  return count;
}

std::int64_t t2_formula(std::int64_t n) {
  checked_nonneg(n, "t2 argument");
  const std::int64_t m = 8 * n + 5;
  std::int64_t sum = 0;
  for (std::int64_t d = 1; d * d < m; ++d) {
    if (m % d != 0) continue;
    sum += (((d - 1) / 2) % 2 == 0) ? 1 : -1;
  }
  return sum;
}

std::int64_t r2_brute(std::int64_t m) {
  if (m < 1) throw Error("r2 argument must be positive");
  std::int64_t count = 0;
  for (std::int64_t x = -isqrt64(m); x <= isqrt64(m); ++x) {
    const std::int64_t rest = m - x * x;
    const std::int64_t y = isqrt64(rest);
    if (y * y != rest) continue;
    count += (y == 0) ? 1 : 2;  // (x, y) and (x, -y)
  }
  return count;
}

std::int64_t r2_formula(std::int64_t m) {
  if (m < 1) throw Error("r2 argument must be positive");
  std::int64_t sum = 0;
  for (std::int64_t d = 1; d * d <= m; ++d) {
    if (m % d != 0) continue;
    const std::int64_t e = m / d;
    if (d % 2 == 1) sum += (((d - 1) / 2) % 2 == 0) ? 1 : -1;
    if (e != d && e % 2 == 1) sum += (((e - 1) / 2) % 2 == 0) ? 1 : -1;
  }
  return 4 * sum;
}

DivisorSumResult t2_check(std::int64_t n) { return {n, t2_brute(n), t2_formula(n)}; }

SeriesCompare lambert_coefficient_check(std::int64_t order) {
  if (order < 1) throw Error("lambert_coefficient_check needs order >= 1");
  // sum_k (-1)^k sum_m q^{k(k+3)/2 + (2k+1) m}, expanded by exponent walk
  std::vector<BigRational> coeffs(static_cast<std::size_t>(order));
  for (std::int64_t k = 0; k * (k + 3) / 2 < order; ++k) {
    const std::int64_t sign = (k % 2 == 0) ? 1 : -1;
    for (std::int64_t e = k * (k + 3) / 2; e < order; e += 2 * k + 1)
      coeffs[static_cast<std::size_t>(e)] += sign;
  }
  const LaurentSeries expansion = LaurentSeries::window(1, 0, order, std::move(coeffs));

  std::vector<BigRational> target(static_cast<std::size_t>(order));
  for (std::int64_t n = 0; n < order; ++n) target[static_cast<std::size_t>(n)] = t2_formula(n);
  return ts_eq_to_order(expansion, LaurentSeries::window(1, 0, order, std::move(target)), order);
}

}  // namespace qpi
