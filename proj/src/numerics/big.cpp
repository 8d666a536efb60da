#include "tcover/big.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "tcover/errors.hpp"

namespace tcover {

namespace mp = boost::multiprecision;

double log_of(const BigInt& x) {
  if (x <= 0) throw std::domain_error("log_of: argument must be positive");
  const auto bits = mp::msb(x) + 1;
  if (bits <= 1000) return std::log(x.convert_to<double>());
  const auto shift = bits - 64;
  const BigInt top = x >> shift;
  return std::log(top.convert_to<double>()) + static_cast<double>(shift) * std::log(2.0);
}

double log_of(const Rational& q) {
  if (q <= 0) throw std::domain_error("log_of: argument must be positive");
  return log_of(mp::numerator(q)) - log_of(mp::denominator(q));
}

double to_double(const BigInt& x) { return x.convert_to<double>(); }

double to_double(const Rational& q) {
  if (q == 0) return 0.0;
  const double l = log_of(q < 0 ? Rational(-q) : q);
  if (l < 700.0 && l > -700.0) return q.convert_to<double>();
  const double v = std::exp(l);
  return q < 0 ? -v : v;
}

Rational exact_rational(double x) {
  if (!std::isfinite(x)) throw std::domain_error("exact_rational: non-finite value");
  if (x == 0.0) return Rational(0);
  int exponent = 0;
  const double mantissa = std::frexp(x, &exponent);
  // mantissa * 2^53 is an exact integer
  const auto scaled = static_cast<long long>(std::ldexp(mantissa, 53));
  exponent -= 53;
  BigInt num(scaled);
  BigInt den(1);
  if (exponent >= 0) {
    num <<= exponent;
  } else {
    den <<= -exponent;
  }
  return Rational(num, den);
}

Rational rational_upper_bound(double x) {
  const double bumped = x >= 0 ? x * (1.0 + 1e-12) : x * (1.0 - 1e-12);
  return exact_rational(std::nextafter(bumped, std::numeric_limits<double>::infinity()));
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto trim = [](std::string& v) {
    const auto b = v.find_first_not_of(" \t");
    const auto e = v.find_last_not_of(" \t");
    v = b == std::string::npos ? std::string{} : v.substr(b, e - b + 1);
  };
  trim(s);
  if (s.empty()) throw ValidationError("empty rational literal");
  auto parse_int = [&](const std::string& part) {
    if (part.empty() || part.find_first_not_of("+-0123456789") != std::string::npos ||
        part.find_first_of("0123456789") == std::string::npos) {
      throw ValidationError("malformed rational literal '" + s + "'");
    }
    return BigInt(part);
  };
  if (const auto slash = s.find('/'); slash != std::string::npos) {
    BigInt num = parse_int(s.substr(0, slash));
    BigInt den = parse_int(s.substr(slash + 1));
    if (den == 0) throw ValidationError("zero denominator in '" + s + "'");
    return Rational(num, den);
  }
  if (const auto dot = s.find('.'); dot != std::string::npos) {
    std::string digits = s;
    const bool negative = digits[0] == '-';
    if (digits[0] == '-' || digits[0] == '+') digits.erase(0, 1);
    const auto point = digits.find('.');
    std::string whole = digits.substr(0, point);
    std::string frac = digits.substr(point + 1);
    if (whole.empty()) whole = "0";
    if (frac.empty() || whole.find_first_not_of("0123456789") != std::string::npos ||
        frac.find_first_not_of("0123456789") != std::string::npos) {
      throw ValidationError("malformed rational literal '" + s + "'");
    }
    const BigInt scale = mp::pow(BigInt(10), static_cast<unsigned>(frac.size()));
    BigInt num = BigInt(whole) * scale + BigInt(frac);
    if (negative) num = -num;
    return Rational(num, scale);
  }
  return Rational(parse_int(s));
}

std::string format_rational(const Rational& q) {
  return mp::numerator(q).str() + "/" + mp::denominator(q).str();
}

}  // namespace tcover
