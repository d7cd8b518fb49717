#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "bijlab/errors.hpp"

namespace bijlab {

/// Arbitrary-precision non-negative integer. Every count in the library is
/// one of these. Subtraction below zero and division with a remainder throw
/// arithmetic_error instead of wrapping or truncating.
class ExactInt {
 public:
  using backend_type = boost::multiprecision::cpp_int;

  ExactInt() = default;

  template <std::integral T>
  ExactInt(T value) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_signed_v<T>) {
      if (value < 0) {
        throw domain_error("ExactInt cannot hold negative value " +
                           std::to_string(value));
      }
    }
    value_ = value;
  }

  /// Parses a non-empty string of decimal digits.
  static ExactInt parse(std::string_view text) {
    if (text.empty()) throw domain_error("ExactInt::parse: empty string");
    for (char c : text) {
      if (c < '0' || c > '9') {
        throw domain_error("ExactInt::parse: not a decimal numeral: '" +
                           std::string(text) + "'");
      }
    }
    ExactInt out;
    out.value_ = backend_type(std::string(text));
    return out;
  }

  [[nodiscard]] std::string str() const { return value_.str(); }
  [[nodiscard]] bool is_zero() const { return value_.is_zero(); }
  [[nodiscard]] const backend_type& backend() const { return value_; }

  [[nodiscard]] bool fits_u64() const {
    return value_ <= std::numeric_limits<std::uint64_t>::max();
  }

  [[nodiscard]] std::uint64_t to_u64() const {
    if (!fits_u64()) {
      throw range_error("ExactInt " + str() + " does not fit in 64 bits");
    }
    return value_.convert_to<std::uint64_t>();
  }

  ExactInt& operator+=(const ExactInt& rhs) {
    value_ += rhs.value_;
    return *this;
  }
  ExactInt& operator-=(const ExactInt& rhs) {
    if (value_ < rhs.value_) {
      throw arithmetic_error("ExactInt subtraction underflow: " + str() +
                             " - " + rhs.str());
    }
    value_ -= rhs.value_;
    return *this;
  }
  ExactInt& operator*=(const ExactInt& rhs) {
    value_ *= rhs.value_;
    return *this;
  }

  friend ExactInt operator+(ExactInt lhs, const ExactInt& rhs) { return lhs += rhs; }
  friend ExactInt operator-(ExactInt lhs, const ExactInt& rhs) { return lhs -= rhs; }
  friend ExactInt operator*(ExactInt lhs, const ExactInt& rhs) { return lhs *= rhs; }

  /// Quotient of an exact division. Throws when divisor is zero or does not
  /// divide dividend.
  friend ExactInt divide_exact(const ExactInt& dividend, const ExactInt& divisor) {
    if (divisor.is_zero()) throw arithmetic_error("division by zero");
    ExactInt q;
    ExactInt r;
    boost::multiprecision::divide_qr(dividend.value_, divisor.value_, q.value_,
                                     r.value_);
    if (!r.is_zero()) {
      throw arithmetic_error(divisor.str() + " does not divide " +
                             dividend.str());
    }
    return q;
  }

  [[nodiscard]] bool divisible_by(const ExactInt& divisor) const {
    if (divisor.is_zero()) return false;
    return backend_type(value_ % divisor.value_).is_zero();
  }

  friend bool operator==(const ExactInt& a, const ExactInt& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const ExactInt& a, const ExactInt& b) {
    const int c = a.value_.compare(b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const ExactInt& v) {
    return os << v.value_;
  }

 private:
  backend_type value_{0};
};

}  // namespace bijlab
