#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qpi/numerics.hpp"

using namespace qpi;

namespace {

double err(std::string_view name, int terms) {
  return std::abs(classical_series(name, terms) - classical_target(name));
}

}  // namespace

TEST_CASE("classical series hit their targets") {
  CHECK(classical_series("leibniz", 1) == 1.0);
  CHECK(err("guillera", 40) < 1e-10);
  CHECK(err("q2-limit", 40) < 1e-10);
  CHECK(err("ram-6n1", 40) < 1e-10);
  CHECK(err("ram-6n1-alt", 40) < 1e-10);
  CHECK(err("sun-conj", 60) < 1e-8);
  CHECK(err("zeilberger", 40) < 1e-10);
  CHECK_THROWS_AS(classical_series("nope", 10), UnknownNameError);
  CHECK_THROWS_AS(classical_series("guillera", 0), Error);
}

TEST_CASE("partial-sum errors shrink geometrically at the documented ratio") {
  for (const char* name : {"guillera", "ram-6n1"}) {
    for (int n = 12; n <= 16; ++n) {
      const double ratio = err(name, n + 1) / err(name, n);
      CHECK(ratio > 0.15);
      CHECK(ratio < 0.35);  // ~1/4 per extra term
    }
  }
  // leibniz converges like an alternating harmonic tail: just decreasing
  CHECK(err("leibniz", 30) < err("leibniz", 10));
}

TEST_CASE("(1/2)_n / n! = C(2n,n) / 4^n exactly") {
  BigRational poch = 1;  // (1/2)_n
  BigRational fact = 1;  // n!
  for (unsigned long n = 0; n <= 50; ++n) {
    if (n > 0) {
      poch *= rat(2 * static_cast<long>(n) - 1, 2);
      fact *= static_cast<long>(n);
    }
    BigInt pow4;
    mpz_ui_pow_ui(pow4.get_mpz_t(), 4, n);
    CHECK(poch / fact == BigRational(binomial(2 * n, n)) / BigRational(pow4));
  }
}

TEST_CASE("q -> 1 limits") {
  const std::vector<double> schedule = {0.1, 0.03, 0.01, 0.003, 0.001};
  SUBCASE("theta quotient limit toward pi/2") {
    const LimitExperiment ex = q_limit("pi", schedule);
    CHECK(ex.target == doctest::Approx(std::numbers::pi / 2));
    CHECK(ex.errors_strictly_decreasing);
    CHECK(ex.final_error < 1e-2);
    CHECK(ex.values.back() == doctest::Approx(std::numbers::pi / 2).epsilon(1e-2));
  }
  SUBCASE("pi2 sides tend to pi/2 and agree with each other") {
    const LimitExperiment rhs = q_limit("pi2.rhs", schedule);
    const LimitExperiment lhs = q_limit("pi2.lhs", schedule);
    CHECK(rhs.errors_strictly_decreasing);
    CHECK(lhs.errors_strictly_decreasing);
    CHECK(rhs.final_error < 1e-2);
    CHECK(lhs.final_error < 1e-2);
    for (std::size_t i = 0; i < schedule.size(); ++i)
      CHECK(rhs.values[i] == doctest::Approx(lhs.values[i]).epsilon(1e-9));
  }
  SUBCASE("qid product limit toward pi^2/4") {
    const LimitExperiment ex = q_limit("qid.rhs", schedule);
    CHECK(ex.errors_strictly_decreasing);
    CHECK(ex.final_error < 1e-2);
  }
  SUBCASE("a coarse point is finite, just inaccurate") {
    const LimitExperiment ex = q_limit("pi", {0.5});
    CHECK(std::isfinite(ex.values.front()));
  }
  SUBCASE("schedule validation") {
    CHECK_THROWS_AS(q_limit("pi", {0.1, 0.2}), Error);
    CHECK_THROWS_AS(q_limit("pi", {}), Error);
    CHECK_THROWS_AS(q_limit("nope", {0.1}), UnknownNameError);
  }
}

TEST_CASE("numeric Pochhammer depth is budget-checked") {
  CHECK_THROWS_AS(numeric_poch_infinite(0.9999, 1, 1, 1, 1e-15, 100), BudgetExceededError);
  const double v = numeric_poch_infinite(0.5, 1, 1, 1);
  CHECK(v == doctest::Approx(0.2887880951).epsilon(1e-9));  // (1/2;1/2)_inf
}

TEST_CASE("qid summands approach their classical values") {
  SUBCASE("n = 0 tends to 2") {
    const SummandLimitReport r = summand_limit_check(0, {0.1, 0.03, 0.01});
    CHECK(r.target == doctest::Approx(2.0));
    CHECK(r.errors_decreasing);
    CHECK(r.values.back() == doctest::Approx(2.0).epsilon(1e-2));
  }
  SUBCASE("n = 3 errors decrease") {
    const SummandLimitReport r = summand_limit_check(3, {0.1, 0.03, 0.01, 0.003});
    CHECK(r.errors_decreasing);
    CHECK(r.errors.back() < r.errors.front());
  }
}
