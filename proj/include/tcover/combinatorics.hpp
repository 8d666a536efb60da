#pragma once

#include <cstdint>

#include "tcover/big.hpp"
#include "tcover/log_real.hpp"

namespace tcover {

/// Exact C(a, b); zero when b > a or b < 0. Throws for negative a.
BigInt binomial(std::int64_t a, std::int64_t b);

/// ln C(a, b) as a LogReal; zero when b > a.
LogReal log_binomial(std::int64_t a, std::int64_t b);

/// Real-argument variant for bounds such as C(d, r) with huge d.
LogReal log_binomial_real(double a, std::int64_t b);

/// (x)_u = x (x-1) ... (x-u+1); 1 for u = 0.
BigInt falling_factorial(std::int64_t x, std::int64_t u);
LogReal log_falling_factorial(double x, std::int64_t u);

BigInt factorial(std::int64_t n);

/// 64-bit fast path for hot loops. Throws std::overflow_error.
std::uint64_t binomial_u64(std::uint64_t a, std::uint64_t b);

}  // namespace tcover
