#pragma once

#include <stdexcept>
#include <string>

namespace qpi {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Two series live at scales where neither divides the other.
class ScaleMismatchError : public Error {
public:
  using Error::Error;
};

/// Inversion of a series whose leading window is identically zero.
class NotInvertibleError : public Error {
public:
  using Error::Error;
};

/// A comparison or coefficient read past the contracted truncation order.
class InsufficientOrderError : public Error {
public:
  using Error::Error;
};

/// A denominator factor vanishes identically at the requested parameters.
class PoleError : public Error {
public:
  using Error::Error;
};

/// A hypergeometric spec whose summand valuation does not grow.
class DivergentSpecError : public Error {
public:
  using Error::Error;
};

/// An infinite product whose factors never leave the truncation window.
class NonterminationError : public Error {
public:
  using Error::Error;
};

/// A telescoped partial sum whose dropped tail still intersects the window.
class InsufficientTermsError : public Error {
public:
  using Error::Error;
};

/// A scan or truncation-depth request exceeded its configured budget.
class BudgetExceededError : public Error {
public:
  using Error::Error;
};

/// Lookup of an unregistered identity, product or series name.
class UnknownNameError : public Error {
public:
  using Error::Error;
};

}  // namespace qpi
