#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>

#include "qpi/errors.hpp"

namespace qpi {

/// Arbitrary-precision exact rational, the coefficient domain for everything.
/// mpq_class keeps values canonical (gcd(|num|, den) = 1, den >= 1) through
/// arithmetic; raw string construction goes through rat_from_string below,
/// which canonicalizes explicitly.
using BigRational = mpq_class;
using BigInt = mpz_class;

inline BigRational rat(long num, long den = 1) {
  if (den == 0) throw Error("rational with zero denominator");
  BigRational r(num, den);
  r.canonicalize();
  return r;
}

/// Parses "p", "-p" or "p/q" (base 10).
inline BigRational rat_from_string(const std::string& text) {
  BigRational r;
  if (r.set_str(text, 10) != 0 || text.empty())
    throw Error("cannot parse rational: '" + text + "'");
  if (r.get_den() == 0) throw Error("rational with zero denominator: '" + text + "'");
  r.canonicalize();
  return r;
}

inline std::string rat_to_string(const BigRational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline bool is_integer(const BigRational& r) { return r.get_den() == 1; }

/// Exact conversion to a machine integer; throws if not integral or too wide.
inline std::int64_t to_int64(const BigRational& r) {
  if (!is_integer(r)) throw Error("expected integer, got " + rat_to_string(r));
  if (!r.get_num().fits_slong_p()) throw Error("integer out of machine range");
  return static_cast<std::int64_t>(r.get_num().get_si());
}

inline BigRational rat_pow(const BigRational& base, unsigned long e) {
  BigRational r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), e);
  return r;
}

inline BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace qpi
