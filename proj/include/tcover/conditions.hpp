#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "tcover/instance.hpp"
#include "tcover/overlap_law.hpp"
#include "tcover/report.hpp"

namespace tcover {

inline constexpr std::size_t kMaxPairEnumerationEdges = 10'000;

/// Exact law of |e n e'| for e, e' drawn uniformly and independently from E.
/// Throws TooLarge for d > 10^4.
OverlapLaw pair_overlap_law(const Instance& inst);

/// Monte Carlo law of Y_1 + ... + Y_s over 0..(s-1)k.
OverlapLaw sum_overlap_law(const Instance& inst, unsigned s, std::uint64_t trials, std::uint64_t seed);

/// Exact law of Y_1 + ... + Y_s by dynamic programming over the reachable
/// unions. Throws TooLarge once states * d exceeds 10^7.
OverlapLaw exact_sum_overlap_law(const Instance& inst, unsigned s);

/// History-uniform bound on P(Y_s >= y | history): the maximum, over every
/// union reachable by s-1 draws, of the fraction of edges meeting it in at
/// least y elements. Entry y for y = 0..k.
std::vector<Rational> max_conditional_tail(const Instance& inst, unsigned s);

/// For y = 1..k-1: P(Y_2 = y) r^(2 - y/k) d^(y/k) <= L^k.
ConditionReport check_thm_two(const InstanceShape& shape, const OverlapLaw& law, double L);
ConditionReport check_thm_two(const Instance& inst, const OverlapLaw& law, double L);

/// For m = 1..(s-1)k: P(sum Y_j = m) (d e^k / r)^(m/k) <= (L / 2e)^((s-1)k - m).
/// m = 0 is reported as an informational point.
ConditionReport check_thm_one(const InstanceShape& shape, const OverlapLaw& law, unsigned s, double L);
ConditionReport check_thm_one(const Instance& inst, const OverlapLaw& law, unsigned s, double L);

/// tail(y) must bound P(Y_s >= y | Y_1, ..., Y_{s-1}) uniformly over histories.
using TailBound = std::function<LogReal(std::uint64_t y)>;

/// For y = 1..k: tail(y) (d 2^k e^k / r)^(y/k) <= (L / 4e)^(k - y).
ConditionReport check_thm_one_pointwise(const TailBound& tail, const InstanceShape& shape, double L);

}  // namespace tcover
