#include "qpi/numerics.hpp"

#include <cmath>
#include <numbers>

#include "qpi/errors.hpp"

namespace qpi {

namespace {

constexpr double kPi = std::numbers::pi;

BigInt int_pow(unsigned long base, unsigned long e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, e);
  return r;
}

BigRational classical_term(std::string_view name, std::int64_t i) {
  if (name == "leibniz") {
    // term i >= 0: (-1)^i / (2i+1)
    BigRational t(i % 2 == 0 ? 1 : -1, 2 * i + 1);
    t.canonicalize();
    return t;
  }
  if (name == "zeilberger") {
    // term k >= 1: (21k-8)/(k^3 C(2k,k)^3)
    const std::int64_t k = i + 1;
    const BigInt c = binomial(static_cast<unsigned long>(2 * k), static_cast<unsigned long>(k));
    return BigRational(21 * k - 8) / BigRational(k * k * k * c * c * c);
  }
  if (name == "guillera") {
    const std::int64_t k = i + 1;
    const BigInt c = binomial(static_cast<unsigned long>(2 * k), static_cast<unsigned long>(k));
    return BigRational(3 * k - 1) * BigRational(int_pow(16, static_cast<unsigned long>(k))) /
           BigRational(k * k * k * c * c * c);
  }
  if (name == "ram-6n1") {
    const BigInt c = binomial(static_cast<unsigned long>(2 * i), static_cast<unsigned long>(i));
    return BigRational(6 * i + 1) * BigRational(c * c * c) /
           BigRational(int_pow(256, static_cast<unsigned long>(i)));
  }
  if (name == "ram-6n1-alt") {
    const BigInt c = binomial(static_cast<unsigned long>(2 * i), static_cast<unsigned long>(i));
    BigRational t = BigRational(6 * i + 1) * BigRational(c * c * c) /
                    BigRational(int_pow(512, static_cast<unsigned long>(i)));
    return (i % 2 == 0) ? t : -t;
  }
  if (name == "sun-conj") {
    const std::int64_t k = i + 1;
    const BigInt c2 = binomial(static_cast<unsigned long>(2 * k), static_cast<unsigned long>(k));
    const BigInt c3 = binomial(static_cast<unsigned long>(3 * k), static_cast<unsigned long>(k));
    return BigRational(10 * k - 3) * BigRational(int_pow(8, static_cast<unsigned long>(k))) /
           BigRational(k * k * k * c2 * c2 * c3);
  }
  if (name == "q2-limit") {
    // (1/4) (3n+2) 2^{4n} n!^6 / (2n+1)!^3
    const BigInt fn = factorial(static_cast<unsigned long>(i));
    const BigInt f2n1 = factorial(static_cast<unsigned long>(2 * i + 1));
    const BigInt num = fn * fn * fn * fn * fn * fn * int_pow(2, static_cast<unsigned long>(4 * i));
    return BigRational(3 * i + 2) * BigRational(num) / (4 * BigRational(f2n1 * f2n1 * f2n1));
  }
  throw UnknownNameError("unknown classical series: " + std::string(name));
}

}  // namespace

std::vector<std::string> classical_names() {
  return {"leibniz", "zeilberger", "guillera", "ram-6n1", "ram-6n1-alt", "sun-conj", "q2-limit"};
}

double classical_target(std::string_view name) {
  if (name == "leibniz") return kPi / 4;
  if (name == "zeilberger") return kPi * kPi / 6;
  if (name == "guillera") return kPi * kPi / 2;
  if (name == "ram-6n1") return 4 / kPi;
  if (name == "ram-6n1-alt") return 2 * std::sqrt(2.0) / kPi;
  if (name == "sun-conj") return kPi * kPi / 2;
  if (name == "q2-limit") return kPi * kPi / 16;
  throw UnknownNameError("unknown classical series: " + std::string(name));
}

double classical_series(std::string_view name, int terms) {
  if (terms < 1) throw Error("classical_series needs terms >= 1");
  classical_target(name);  // validates the name
  BigRational sum = 0;
  for (int i = 0; i < terms; ++i) sum += classical_term(name, i);
  return sum.get_d();
}

double numeric_poch_infinite(double q0, double c, double e, double base, double tail_tol,
                             std::int64_t budget) {
  if (!(q0 > 0.0 && q0 < 1.0)) throw Error("q0 must lie in (0,1)");
  if (base <= 0) throw NonterminationError("numeric Pochhammer needs a positive base");
  // |c| q0^{e + base*j} < tail_tol  <=>  j > (log(tail_tol/|c|)/log(q0) - e)/base
  const double depth = (std::log(tail_tol / std::abs(c)) / std::log(q0) - e) / base;
  const auto needed = static_cast<std::int64_t>(std::ceil(std::max(0.0, depth))) + 1;
  if (needed > budget)
    throw BudgetExceededError("truncation depth " + std::to_string(needed) +
                              " exceeds the budget " + std::to_string(budget));
  double prod = 1.0;
  for (std::int64_t j = 0; j < needed; ++j) prod *= 1.0 - c * std::pow(q0, e + base * j);
  return prod;
}

namespace {

/// log of prod_j (1 - q0^{e + base j}); near q = 1 the products underflow
/// doubles by hundreds of orders of magnitude, so quotients of them must be
/// assembled in log space.
double log_poch_infinite(double q0, double e, double base, double tail_tol = 1e-18,
                         std::int64_t budget = 50'000'000) {
  const double depth = (std::log(tail_tol) / std::log(q0) - e) / base;
  const auto needed = static_cast<std::int64_t>(std::ceil(std::max(0.0, depth))) + 1;
  if (needed > budget)
    throw BudgetExceededError("truncation depth " + std::to_string(needed) +
                              " exceeds the budget " + std::to_string(budget));
  double acc = 0.0;
  for (std::int64_t j = 0; j < needed; ++j) acc += std::log1p(-std::pow(q0, e + base * j));
  return acc;
}

double psi_quotient_log(double q0) {
  // log[(q^2;q^2)_inf / (q;q^2)_inf]
  return log_poch_infinite(q0, 2, 2) - log_poch_infinite(q0, 1, 2);
}

double pi2_product(double q0) {
  return std::exp(log_poch_infinite(q0, 2, 2) + log_poch_infinite(q0, 8, 8) -
                  log_poch_infinite(q0, 1, 2) - log_poch_infinite(q0, 4, 8));
}

double pi2_sum(double q0) {
  // sum (-1)^k q^{k(k+3)/2} / (1 - q^{2k+1}); terms decay like q^{k^2/2}
  double acc = 0.0;
  for (std::int64_t k = 0;; ++k) {
    const double e = 0.5 * static_cast<double>(k) * static_cast<double>(k + 3);
    const double mag = std::pow(q0, e) / (1.0 - std::pow(q0, 2 * k + 1));
    if (mag < 1e-18) break;
    acc += (k % 2 == 0 ? mag : -mag);
    if (k > 100'000'000) throw BudgetExceededError("pi2 sum did not converge");
  }
  return acc;
}

double evaluate_q_limit(std::string_view id, double q0) {
  if (id == "pi") return (1.0 - q0) * std::exp(2.0 * psi_quotient_log(q0));
  if (id == "pi2.rhs") return (1.0 - q0 * q0) * pi2_product(q0);
  if (id == "pi2.lhs") return (1.0 - q0 * q0) * pi2_sum(q0);
  if (id == "qid.rhs") {
    return (1.0 - q0) * (1.0 - q0) * std::exp(4.0 * psi_quotient_log(q0));
  }
  throw UnknownNameError("unknown limit expression: " + std::string(id));
}

double limit_target(std::string_view id) {
  if (id == "pi") return kPi / 2;
  // The Gamma_q normalizations of the two bases q^2 and q^8 differ by
  // sqrt((1-q^2)/(1-q^8)) -> 1/2, so (1-q^2) times the pi2 sides tends to
  // pi/2 (consistent with (1-q) times the sum side approaching Leibniz's
  // pi/4), not to Gamma(1/2)^2.
  if (id == "pi2.rhs" || id == "pi2.lhs") return kPi / 2;
  if (id == "qid.rhs") return kPi * kPi / 4;
  throw UnknownNameError("unknown limit expression: " + std::string(id));
}

void check_schedule(const std::vector<double>& eps) {
  if (eps.empty()) throw Error("empty epsilon schedule");
  for (std::size_t i = 0; i < eps.size(); ++i) {
    if (!(eps[i] > 0.0 && eps[i] < 1.0)) throw Error("epsilon must lie in (0,1)");
    if (i > 0 && eps[i] >= eps[i - 1]) throw Error("epsilon schedule must strictly decrease");
  }
}

}  // namespace

std::vector<std::string> q_limit_names() { return {"pi", "pi2.rhs", "pi2.lhs", "qid.rhs"}; }

LimitExperiment q_limit(std::string_view id, const std::vector<double>& eps_schedule) {
  check_schedule(eps_schedule);
  LimitExperiment ex;
  ex.id = std::string(id);
  ex.target = limit_target(id);
  for (const double eps : eps_schedule) {
    const double v = evaluate_q_limit(id, 1.0 - eps);
    ex.eps.push_back(eps);
    ex.values.push_back(v);
    ex.errors.push_back(std::abs(v - ex.target));
  }
  for (std::size_t i = 1; i < ex.errors.size(); ++i)
    if (ex.errors[i] >= ex.errors[i - 1]) ex.errors_strictly_decreasing = false;
  ex.final_error = ex.errors.back();
  return ex;
}

SummandLimitReport summand_limit_check(int n, const std::vector<double>& eps_schedule) {
  if (n < 0 || n > 10) throw Error("summand_limit_check supports 0 <= n <= 10");
  check_schedule(eps_schedule);
  SummandLimitReport report;
  report.n = n;
  {
    const BigInt c = binomial(static_cast<unsigned long>(2 * n + 2),
                              static_cast<unsigned long>(n + 1));
    const BigRational target =
        BigRational(3 * n + 2) * BigRational(int_pow(16, static_cast<unsigned long>(n + 1))) /
        (2 * BigRational((n + 1)) * BigRational((n + 1)) * BigRational((n + 1)) *
         BigRational(c * c * c));
    report.target = target.get_d();
  }
  for (const double eps : eps_schedule) {
    const double q0 = 1.0 - eps;
    double v = std::pow(q0, 0.5 * n * (n + 1)) * (1.0 - std::pow(q0, 3 * n + 2)) / (1.0 - q0);
    for (int j = 1; j <= n; ++j) {
      const double f = 1.0 - std::pow(q0, j);
      v *= f * f * f * (1.0 + std::pow(q0, j));
    }
    for (int j = 0; j < n; ++j) {
      const double f = 1.0 - std::pow(q0, 2 * j + 3);
      v /= f * f * f;
    }
    report.eps.push_back(eps);
    report.values.push_back(v);
    report.errors.push_back(std::abs(v - report.target));
  }
  for (std::size_t i = 1; i < report.errors.size(); ++i)
    if (report.errors[i] > report.errors[i - 1]) report.errors_decreasing = false;
  return report;
}

}  // namespace qpi
