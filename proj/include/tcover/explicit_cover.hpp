#pragma once

#include <optional>

#include "tcover/family.hpp"
#include "tcover/instance.hpp"
#include "tcover/log_real.hpp"
#include "tcover/report.hpp"

namespace tcover {

inline constexpr std::uint64_t kMaxDisjointTupleEnumeration = 1'000'000;
inline constexpr std::size_t kMaxG0Edges = 3'000;

/// G0 = unions of two edges meeting in 1..k-1 elements.
/// G1 = unions of r pairwise disjoint edges.
struct ExplicitCover {
  std::optional<SubsetFamily> g0;
  /// nullopt when C(d, r) > 10^6; only the analytic bound is available then.
  std::optional<SubsetFamily> g1;

  SubsetFamily combined() const;
};

/// Requires integer r.
ExplicitCover build_explicit_cover(const Instance& inst);

struct ExplicitCoverWeights {
  LogReal w0;
  LogReal w1;
  LogReal total;
  bool w0_materialized = false;
  bool w1_materialized = false;
  /// Exact weights at a rational q >= p/L; present for materialized families.
  std::optional<Rational> w0_exact_upper;
  std::optional<Rational> w1_exact_upper;
  Rational q_upper;
  ConditionReport report;
};

/// w(G0, p/L) and w(G1, p/L), each checked against 1/2. Families too large
/// to materialize fall back to sum_y P(Y_2 = y) d^2 (p/L)^(2k-y) and
/// C(d, r) (p/L)^(rk).
ExplicitCoverWeights explicit_cover_weights(const Instance& inst, double L);

}  // namespace tcover
