#pragma once

#include <cstdint>
#include <vector>

#include "qpi/qproducts.hpp"
#include "qpi/series.hpp"

namespace qpi {

/// A basic hypergeometric series
///   r_phi_s[a_1..a_r; b_1..b_s; q^base, z]
///     = sum_l  (a_1..a_r; q^base)_l / ((q^base; q^base)_l (b_1..b_s; q^base)_l)
///       * ((-1)^l q^{base*C(l,2)})^{s-r+1} * z^l,
/// with every parameter a monomial in q.  A lower parameter 0 contributes the
/// factor (0; q)_l = 1.  The spec is validated at build time: either an upper
/// parameter q^{-m*base} terminates the sum, or the summand's minimal
/// t-exponent must grow without bound.
struct PhiSpec {
  std::vector<QMonomial> upper;
  std::vector<QMonomial> lower;
  BigRational base = 1;
  QMonomial argument;
  std::int64_t order = 0;  // q-order of the truncation window
};

LaurentSeries phi(const PhiSpec& spec);

/// Direct summand expansions of the catalog's sum sides (independent of the
/// product machinery): each term is built from finite Pochhammer steps and a
/// geometric-denominator division.
LaurentSeries pi1_lhs(std::int64_t order);  // sum (-q)^k / (1-q^{2k+1})
LaurentSeries pi2_lhs(std::int64_t order);  // sum (-1)^k q^{k(k+3)/2} / (1-q^{2k+1})
/// sum q^{n(n+1)/2} (1-q^{3n+2})/(1-q) (q;q)_n^3 (-q;q)_n / (q^3;q^2)_n^3
LaurentSeries qid_lhs(std::int64_t order);
/// sum q^{2n(n+1)} (1+q^{2n+2}-2q^{4n+3}) (q^2;q^2)_n^3 / ((q;q^2)_{n+1}^3 (-1;q)_{2n+3})
LaurentSeries q2_lhs(std::int64_t order);
/// which = 1: sum q^{n^2} (1-q^{6n+1})/(1-q) (q;q^2)_n^2 (q^2;q^4)_n / (q^4;q^4)_n^3
/// which = 2: sum (-1)^n q^{3n^2} (1-q^{6n+1})/(1-q) (q;q^2)_n^3 / (q^4;q^4)_n^3
LaurentSeries gl_lhs(int which, std::int64_t order);

/// Both sides of the cubic-argument quadratic transformation instance with
/// a = q^2, b = c = q and a free monomial d:
///   lhs: sum_n (1-q^{3n+2}) (q^2,d,q^3/d;q^2)_n (q,q,q;q)_n
///              / ((1-q^2) (q,q^3/d,d;q)_n (q^3,q^3,q^3;q^2)_n) * q^n
///   rhs: (q^4,q^2,q^2,q^2;q^2)_inf / (q,q^3,q^3,q^3;q^2)_inf
///        * 3phi2[q,q,q; dq, q^4/d; q^2, q^2]
LaurentSeries ck2_lhs(const QMonomial& d, std::int64_t order);
LaurentSeries ck2_rhs(const QMonomial& d, std::int64_t order);

/// The 3phi2[q,q,q; dq, q^4/d; q^2, q^2] series on the monomial path d = q^M.
LaurentSeries ck3_stabilization(std::int64_t M, std::int64_t order);
/// Smallest scanned M with ck3_stabilization(M) = 1 + O(q^order); the scan
/// walks M = 1, 2, 3, 5, 7, ... (even M >= 4 make a lower parameter q^{<=0}
/// degenerate) and confirms the next scanned M agrees.
std::int64_t ck3_first_stable(std::int64_t order, std::int64_t budget = 4096);

/// Both sides of the terminating quadratic summation with parameters N >= 1
/// and a monomial d (negative exponents allowed; the k-sum terminates through
/// (q^{-4N};q^4)_k).  For d = q^{-2N} the right side is the finite Pochhammer
/// form (q^3;q^2)_N (q^{2N+4};q^4)_N^2 / ((q^4;q^4)_N^2 (q^{4N+3};q^2)_N).
struct RedSides {
  LaurentSeries lhs;
  LaurentSeries rhs;
};
LaurentSeries red_lhs(std::int64_t N, const QMonomial& d, std::int64_t order);
LaurentSeries red_rhs(std::int64_t N, const QMonomial& d, std::int64_t order);
RedSides red_sides(std::int64_t N, const QMonomial& d, std::int64_t order);
SeriesCompare red_identity(std::int64_t N, const QMonomial& d, std::int64_t order);

/// Detects the N at which both sides of the terminating summation, on the
/// path d = q^2 (which = 1) or d = q^{-2N} (which = 2), agree with the
/// corresponding registered identity on the whole window [0, order).
struct GlStabilization {
  int which = 1;
  std::int64_t order = 0;
  std::int64_t stabilized_at = 0;
};
GlStabilization gl_limit_check(int which, std::int64_t order, std::int64_t n_budget);

/// The 2phi2 summation instance the second pi2 proof routes through, as a
/// reusable pair: lhs = 2phi2[a, Q/a; -Q, b; Q, -b] at base exponent Q,
/// rhs = (a b, b Q / a; Q^2)_inf / (b; Q)_inf.
LaurentSeries phi22_summation_lhs(const QMonomial& a, const QMonomial& b, const BigRational& base,
                                  std::int64_t order);
LaurentSeries phi22_summation_rhs(const QMonomial& a, const QMonomial& b, const BigRational& base,
                                  std::int64_t order);

/// The reduced base-change identity at scale 2:
///   lhs: 3phi3[q, sqrt(q), -sqrt(q); -q^{3/2}, q^{3/2}, 0; q, q^2] * (q^3;q^2)_inf^2
///   rhs: (q^2;q^2)_inf (q^4;q^2)_inf * 2phi2[q, q; -q^2, -q^3; q^2, q^3]
LaurentSeries reduced3phi3_lhs(std::int64_t order);
LaurentSeries reduced3phi3_rhs(std::int64_t order);

}  // namespace qpi
