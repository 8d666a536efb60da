#include "tcover/log_real.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace tcover {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// ln(e^a + e^b) for finite a >= b.
double log_add(double a, double b) { return a + std::log1p(std::exp(b - a)); }

// ln(e^a - e^b) for a > b.
double log_sub(double a, double b) { return a + std::log1p(-std::exp(b - a)); }

}  // namespace

LogReal LogReal::from_log(double log_abs, int sign) {
  LogReal r;
  if (sign == 0 || log_abs == kNegInf) return r;
  if (std::isnan(log_abs)) throw std::domain_error("LogReal: NaN logarithm");
  r.sign_ = sign > 0 ? 1 : -1;
  r.log_abs_ = log_abs;
  return r;
}

LogReal LogReal::from_double(double x) {
  if (std::isnan(x)) throw std::domain_error("LogReal: NaN value");
  if (x == 0.0) return zero();
  return from_log(std::log(std::fabs(x)), x > 0 ? 1 : -1);
}

LogReal LogReal::from(const BigInt& x) {
  if (x == 0) return zero();
  return x > 0 ? from_log(log_of(x)) : from_log(log_of(BigInt(-x)), -1);
}

LogReal LogReal::from(const Rational& q) {
  if (q == 0) return zero();
  return q > 0 ? from_log(log_of(q)) : from_log(log_of(Rational(-q)), -1);
}

double LogReal::to_double() const {
  if (sign_ == 0) return 0.0;
  return sign_ * std::exp(log_abs_);
}

LogReal LogReal::pow(double exponent) const {
  if (sign_ < 0) throw std::domain_error("LogReal::pow: negative base");
  if (exponent == 0.0) return one();
  if (sign_ == 0) {
    if (exponent < 0) throw std::domain_error("LogReal::pow: zero to a negative power");
    return zero();
  }
  return from_log(log_abs_ * exponent);
}

LogReal LogReal::operator-() const {
  LogReal r = *this;
  r.sign_ = -r.sign_;
  return r;
}

LogReal operator*(const LogReal& a, const LogReal& b) {
  if (a.sign_ == 0 || b.sign_ == 0) return LogReal::zero();
  return LogReal::from_log(a.log_abs_ + b.log_abs_, a.sign_ * b.sign_);
}

LogReal operator/(const LogReal& a, const LogReal& b) {
  if (b.sign_ == 0) throw std::domain_error("LogReal: division by zero");
  if (a.sign_ == 0) return LogReal::zero();
  return LogReal::from_log(a.log_abs_ - b.log_abs_, a.sign_ * b.sign_);
}

LogReal operator+(const LogReal& a, const LogReal& b) {
  if (a.sign_ == 0) return b;
  if (b.sign_ == 0) return a;
  const LogReal& big = a.log_abs_ >= b.log_abs_ ? a : b;
  const LogReal& small = a.log_abs_ >= b.log_abs_ ? b : a;
  if (a.sign_ == b.sign_) return LogReal::from_log(log_add(big.log_abs_, small.log_abs_), a.sign_);
  if (big.log_abs_ == small.log_abs_) return LogReal::zero();
  return LogReal::from_log(log_sub(big.log_abs_, small.log_abs_), big.sign_);
}

LogReal operator-(const LogReal& a, const LogReal& b) { return a + (-b); }

std::partial_ordering operator<=>(const LogReal& a, const LogReal& b) {
  if (a.sign_ != b.sign_) return a.sign_ <=> b.sign_;
  if (a.sign_ == 0) return std::partial_ordering::equivalent;
  return a.sign_ > 0 ? a.log_abs_ <=> b.log_abs_ : b.log_abs_ <=> a.log_abs_;
}

std::string LogReal::to_string(int digits) const {
  if (sign_ == 0) return "0";
  char buf[64];
  if (std::fabs(log_abs_) < 700.0) {
    std::snprintf(buf, sizeof buf, "%.*g", digits, to_double());
    return buf;
  }
  const double log10v = log_abs_ / std::log(10.0);
  double exponent = std::floor(log10v);
  double mantissa = std::pow(10.0, log10v - exponent);
  if (mantissa >= 10.0) {
    mantissa /= 10.0;
    exponent += 1.0;
  }
  std::snprintf(buf, sizeof buf, "%s%.*fe%+.0f", sign_ < 0 ? "-" : "", std::max(digits - 1, 0),
                mantissa, exponent);
  return buf;
}

LogReal log_sum_exp(std::span<const LogReal> terms) {
  double max_pos = kNegInf;
  double max_neg = kNegInf;
  for (const auto& t : terms) {
    if (t.sign() > 0) max_pos = std::max(max_pos, t.log_abs());
    if (t.sign() < 0) max_neg = std::max(max_neg, t.log_abs());
  }
  double pos = 0.0;
  double neg = 0.0;
  for (const auto& t : terms) {
    if (t.sign() > 0) pos += std::exp(t.log_abs() - max_pos);
    if (t.sign() < 0) neg += std::exp(t.log_abs() - max_neg);
  }
  const LogReal p = pos > 0 ? LogReal::from_log(max_pos + std::log(pos)) : LogReal::zero();
  const LogReal n = neg > 0 ? LogReal::from_log(max_neg + std::log(neg), -1) : LogReal::zero();
  return p + n;
}

}  // namespace tcover
