#include "tcover/combinatorics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tcover {

namespace {

// Direct summation is accurate to ~1e-15 relative; lgamma loses digits for
// huge arguments, so it is only used when the short side is long.
constexpr std::int64_t kDirectSumLimit = 512;

}  // namespace

BigInt binomial(std::int64_t a, std::int64_t b) {
  if (a < 0) throw std::domain_error("binomial: negative upper argument");
  if (b < 0 || b > a) return BigInt(0);
  b = std::min(b, a - b);
  BigInt result(1);
  for (std::int64_t i = 1; i <= b; ++i) {
    result *= a - b + i;
    result /= i;
  }
  return result;
}

std::uint64_t binomial_u64(std::uint64_t a, std::uint64_t b) {
  if (b > a) return 0;
  b = std::min(b, a - b);
  __extension__ using u128 = unsigned __int128;
  u128 result = 1;
  for (std::uint64_t i = 1; i <= b; ++i) {
    result = result * (a - b + i) / i;
    if (result > UINT64_MAX) throw std::overflow_error("binomial_u64: result exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(result);
}

LogReal log_binomial(std::int64_t a, std::int64_t b) {
  if (a < 0) throw std::domain_error("log_binomial: negative upper argument");
  if (b < 0) throw std::domain_error("log_binomial: negative lower argument");
  if (b > a) return LogReal::zero();
  return log_binomial_real(static_cast<double>(a), std::min(b, a - b));
}

LogReal log_binomial_real(double a, std::int64_t b) {
  if (b < 0) throw std::domain_error("log_binomial_real: negative lower argument");
  if (b == 0) return LogReal::one();
  if (a - static_cast<double>(b - 1) <= 0.0) return LogReal::zero();
  if (b <= kDirectSumLimit) {
    double acc = 0.0;
    for (std::int64_t i = 0; i < b; ++i) {
      acc += std::log(a - static_cast<double>(i)) - std::log(static_cast<double>(i + 1));
    }
    return LogReal::from_log(acc);
  }
  const double bd = static_cast<double>(b);
  return LogReal::from_log(std::lgamma(a + 1.0) - std::lgamma(bd + 1.0) - std::lgamma(a - bd + 1.0));
}

BigInt falling_factorial(std::int64_t x, std::int64_t u) {
  if (u < 0) throw std::domain_error("falling_factorial: negative length");
  BigInt result(1);
  for (std::int64_t i = 0; i < u; ++i) {
    result *= x - i;
    if (result == 0) break;
  }
  return result;
}

LogReal log_falling_factorial(double x, std::int64_t u) {
  if (u < 0) throw std::domain_error("log_falling_factorial: negative length");
  if (u == 0) return LogReal::one();
  // clamped to zero once a factor is nonpositive
  if (x - static_cast<double>(u - 1) <= 0.0) return LogReal::zero();
  double acc = 0.0;
  for (std::int64_t i = 0; i < u; ++i) acc += std::log(x - static_cast<double>(i));
  return LogReal::from_log(acc);
}

BigInt factorial(std::int64_t n) {
  if (n < 0) throw std::domain_error("factorial: negative argument");
  BigInt result(1);
  for (std::int64_t i = 2; i <= n; ++i) result *= i;
  return result;
}

}  // namespace tcover
