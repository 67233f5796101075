#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qpi/rational.hpp"

namespace qpi {

/// Partial sum of a registered classical series, accumulated in exact
/// rationals and converted to double at the end.  Names:
///   "leibniz"      sum (-1)^k/(2k+1)                         -> pi/4
///   "zeilberger"   sum_{k>=1} (21k-8)/(k^3 C(2k,k)^3)        -> pi^2/6
///   "guillera"     sum_{k>=1} (3k-1) 16^k/(k^3 C(2k,k)^3)    -> pi^2/2
///   "ram-6n1"      sum (6n+1) C(2n,n)^3/256^n                -> 4/pi
///   "ram-6n1-alt"  sum (6n+1) C(2n,n)^3/(-512)^n             -> 2*sqrt(2)/pi
///   "sun-conj"     sum_{k>=1} (10k-3) 8^k/(k^3 C(2k,k)^2 C(3k,k)) -> pi^2/2
///   "q2-limit"     (1/4) sum (3n+2) 2^{4n} n!^6/(2n+1)!^3    -> pi^2/16
double classical_series(std::string_view name, int terms);
double classical_target(std::string_view name);
std::vector<std::string> classical_names();

/// q -> 1 limit experiment: evaluates a registered expression at q = 1-eps
/// down a strictly decreasing schedule.  Expression ids:
///   "pi"       (1-q)(q^2;q^2)^2/(q;q^2)^2          -> pi/2
///   "pi2.rhs"  (1-q^2) * the pi2 product side      -> pi/2
///   "pi2.lhs"  (1-q^2) * the pi2 sum side          -> pi/2
///   "qid.rhs"  (1-q)^2 (q^2;q^2)^4/(q;q^2)^4       -> pi^2/4
/// The pi2 target follows from the Gamma_q normalization mismatch between
/// the bases q^2 and q^8 (and from Leibniz: (1-q) times the sum side tends
/// to pi/4).
struct LimitExperiment {
  std::string id;
  double target = 0;
  std::vector<double> eps;
  std::vector<double> values;
  std::vector<double> errors;
  bool errors_strictly_decreasing = true;
  double final_error = 0;
};
LimitExperiment q_limit(std::string_view id, const std::vector<double>& eps_schedule);
std::vector<std::string> q_limit_names();

/// Numeric check that the n-th summand of the qid sum side approaches its
/// classical value (3n+2) 16^{n+1} / (2 (n+1)^3 C(2n+2,n+1)^3) as q -> 1.
struct SummandLimitReport {
  int n = 0;
  double target = 0;
  std::vector<double> eps;
  std::vector<double> values;
  std::vector<double> errors;
  bool errors_decreasing = true;
};
SummandLimitReport summand_limit_check(int n, const std::vector<double>& eps_schedule);

/// Infinite product prod_j (1 - c q0^{e + base j}) in doubles; factors are
/// retained until they deviate from 1 by less than tail_tol.  The needed
/// depth is computed up front and checked against the budget.
double numeric_poch_infinite(double q0, double c, double e, double base,
                             double tail_tol = 1e-15,
                             std::int64_t budget = 20'000'000);

}  // namespace qpi
