#pragma once

#include <cstdint>
#include <initializer_list>
#include <string_view>

#include "qpi/series.hpp"

namespace qpi {

/// c * q^e with rational c and rational q-exponent e.  Every Pochhammer and
/// hypergeometric parameter handled by this library has this shape.
struct QMonomial {
  BigRational coeff;
  BigRational exponent;
};

inline QMonomial qmono(const BigRational& c, const BigRational& e) { return {c, e}; }
inline QMonomial q_pow(const BigRational& e) { return {1, e}; }

/// Index of a q-shifted factorial (a; q^base)_index.
struct PochIndex {
  enum class Kind { finite, infinite, real };
  Kind kind = Kind::finite;
  std::int64_t n = 0;  // finite index
  BigRational r;       // real index

  static PochIndex finite(std::int64_t n) { return {Kind::finite, n, 0}; }
  static PochIndex infinite() { return {Kind::infinite, 0, 0}; }
  static PochIndex real(const BigRational& r) { return {Kind::real, 0, r}; }
};

struct PochSpec {
  QMonomial a;
  BigRational base = 1;  // the exponent m in (a; q^m)
  PochIndex index;
};

/// Smallest scale s with s*e integral for every listed q-exponent.
int scale_for_exponents(std::initializer_list<BigRational> exponents);

/// (a; q^base)_index as a series exact up to q-order `order`.
///
/// Finite indices give exact Laurent polynomials.  Infinite products retain
/// every factor that perturbs the window [floor, order) and truncate there.
/// A real index r is defined, only, through the ratio
/// (a; q^b)_inf / (a q^{b r}; q^b)_inf.
LaurentSeries poch(const PochSpec& spec, std::int64_t order);

/// Convenience wrappers.
LaurentSeries poch_finite(const QMonomial& a, const BigRational& base, std::int64_t n);
LaurentSeries poch_infinite(const QMonomial& a, const BigRational& base, std::int64_t order);
LaurentSeries poch_real(const QMonomial& a, const BigRational& base, const BigRational& r,
                        std::int64_t order);

/// Gauss theta sum psi(q) = sum_n q^{n(n+1)/2}, truncated at q-order `order`.
LaurentSeries psi_sum(std::int64_t order);

/// The product form (q^2;q^2)_inf / (q;q^2)_inf of the same function.
LaurentSeries psi_product(std::int64_t order);

/// Named right-hand sides used by the identity catalog and the CLI:
/// "pi1.rhs", "pi2.rhs", "gl1.rhs", "gl2.rhs", "qid.rhs", "q2.rhs".
LaurentSeries product_side(std::string_view name, std::int64_t order);

}  // namespace qpi
