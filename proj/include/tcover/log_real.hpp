#pragma once

#include <compare>
#include <span>
#include <string>

#include "tcover/big.hpp"

namespace tcover {

/// A signed real stored as (sign, ln|x|). Products, quotients and powers
/// are exact in log-space; sums go through log-sum-exp.
class LogReal {
 public:
  constexpr LogReal() = default;

  static LogReal from_log(double log_abs, int sign = 1);
  static LogReal from_double(double x);
  static LogReal from(const BigInt& x);
  static LogReal from(const Rational& q);
  static constexpr LogReal zero() { return LogReal{}; }
  static LogReal one() { return from_log(0.0); }

  int sign() const { return sign_; }
  /// Meaningless (reported as 0) when the value is zero.
  double log_abs() const { return sign_ == 0 ? 0.0 : log_abs_; }
  bool is_zero() const { return sign_ == 0; }

  double to_double() const;
  /// Requires a nonnegative base. 0^0 is 1.
  LogReal pow(double exponent) const;

  LogReal operator-() const;
  friend LogReal operator*(const LogReal& a, const LogReal& b);
  friend LogReal operator/(const LogReal& a, const LogReal& b);
  friend LogReal operator+(const LogReal& a, const LogReal& b);
  friend LogReal operator-(const LogReal& a, const LogReal& b);
  LogReal& operator*=(const LogReal& o) { return *this = *this * o; }
  LogReal& operator/=(const LogReal& o) { return *this = *this / o; }
  LogReal& operator+=(const LogReal& o) { return *this = *this + o; }

  friend std::partial_ordering operator<=>(const LogReal& a, const LogReal& b);
  friend bool operator==(const LogReal& a, const LogReal& b) {
    return (a <=> b) == std::partial_ordering::equivalent;
  }

  /// Decimal rendering, switching to mantissa/exponent form outside the
  /// double range ("1.234e+5678").
  std::string to_string(int digits = 6) const;

 private:
  int sign_ = 0;
  double log_abs_ = 0.0;
};

LogReal log_sum_exp(std::span<const LogReal> terms);

}  // namespace tcover
