#pragma once

#include <stdexcept>
#include <string>

namespace bijlab {

/// Base of every exception thrown by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A value lies outside an admissible interval (e.g. a rank >= base^width).
class range_error : public error {
 public:
  using error::error;
};

/// An argument is outside the mathematical domain of an operation.
class domain_error : public error {
 public:
  using error::error;
};

/// Inexact division or a negative result of a subtraction on ExactInt.
class arithmetic_error : public error {
 public:
  using error::error;
};

/// A codec was handed a word or object it cannot map (wrong base, width...).
class codec_error : public error {
 public:
  using error::error;
};

/// An exhaustive enumeration would exceed the configured word budget.
class budget_error : public error {
 public:
  using error::error;
};

/// Identity parameters violate the identity's declared domain.
class parameter_error : public error {
 public:
  using error::error;
};

}  // namespace bijlab
