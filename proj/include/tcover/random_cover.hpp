#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "tcover/family.hpp"
#include "tcover/instance.hpp"
#include "tcover/report.hpp"
#include "tcover/rng.hpp"
#include "tcover/upset.hpp"

namespace tcover {

/// Unions are only drawn explicitly up to this many per trial; beyond it t
/// enters the weight formulas analytically.
inline constexpr std::uint64_t kMaxMaterializedT = 1'000'000;

struct CoverParams {
  unsigned s = 1;
  std::uint64_t t = 1;
  double L = 2.0 * 2.718281828459045;
  std::uint64_t seed = 0;

  void validate() const;
};

/// s = ceil(ln(n) / k), at least 1.
unsigned default_s(const Instance& inst);
/// ln of p^(-s k) n, the unrounded default t.
double default_log_t(const Instance& inst, unsigned s);
/// ceil(p^(-s k) n); nullopt when above kMaxMaterializedT.
std::optional<std::uint64_t> default_t(const Instance& inst, unsigned s);

/// One union e = e_1 u ... u e_s with its overlap trace Y_j = |e_j n (e_1 u ... u e_{j-1})|.
struct UnionTrace {
  Subset set;
  std::vector<unsigned> y;
  unsigned y_sum() const;
};

UnionTrace sample_union(const Instance& inst, unsigned s, Rng& rng);

struct CoverSample {
  std::vector<Subset> unions;  // e_1 .. e_t in draw order (may repeat)
  std::vector<std::vector<unsigned>> y_traces;
  std::vector<unsigned> sizes;

  /// G = {e_i}, duplicates merged.
  SubsetFamily family() const;
};

/// Draws s t edges uniformly with replacement and forms t unions.
CoverSample sample_cover(const Instance& inst, const CoverParams& params, Rng& rng);
/// Same, with the generator derived from params.seed.
CoverSample sample_cover(const Instance& inst, const CoverParams& params);

struct CoverageEstimate {
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  double estimate = 0.0;
  double wilson_low = 0.0;
  double wilson_high = 0.0;
  /// Wilson 95% half-width / 1.96.
  double wilson_se = 0.0;
  std::size_t m = 0;
  /// 1 - m (1 - p^(s k))^t
  double analytic_bound = 0.0;
  /// 1 - exp(ln m - p^(s k) t)
  double analytic_exp_bound = 0.0;
};

struct WilsonInterval {
  double center;
  double low;
  double high;
  double se;
};
WilsonInterval wilson(std::uint64_t successes, std::uint64_t trials, double z = 1.96);

/// Fraction of trials with <g> in <G>. t = 0 yields an empty G and probability 0.
/// Throws TooLarge for n > 24 or t above kMaxMaterializedT.
CoverageEstimate coverage_probability(const Instance& inst, const CoverParams& params, std::uint64_t trials);

/// Empirical check of E[w | covers] <= E[w] / P(covers) on the materialized
/// family weight w(G, p/L).
struct ConditionalTransfer {
  std::uint64_t trials = 0;
  std::uint64_t covered = 0;
  double p_covers = 0.0;
  double mean_weight = 0.0;
  double mean_weight_given_cover = 0.0;
  double std_error_given_cover = 0.0;
  /// mean_weight / p_covers; +inf when nothing was covered.
  double transfer_bound = 0.0;
};

ConditionalTransfer conditional_transfer(const Instance& inst, const CoverParams& params, std::uint64_t trials);

struct WeightEstimate {
  /// t * E[(p/L)^|e_1|]
  LogReal estimate;
  LogReal std_error;
  bool exact = false;
  std::uint64_t trials = 0;
  double log_t = 0.0;
  std::map<unsigned, std::uint64_t> size_histogram;
  std::optional<ConditionalTransfer> transfer;
};

/// s = 1 is evaluated in closed form t (p/L)^k; otherwise |e_1| is sampled.
/// With `with_transfer` (needs n <= 24 and a materializable t) the
/// conditional transfer statistics are attached.
WeightEstimate expected_cover_weight(const Instance& inst, const CoverParams& params, std::uint64_t trials,
                                     bool with_transfer = false);
/// Analytic-t variant: t is given by its logarithm and never materialized.
WeightEstimate expected_cover_weight_log_t(const Instance& inst, unsigned s, double log_t, double L,
                                           std::uint64_t trials, std::uint64_t seed);

enum class MinimalCount { automatic, exact, bound };

struct S1Result {
  ConditionReport report;
  /// ceil(p^(-k) ln(2m))
  double t = 0.0;
  LogReal m;
  bool m_exact = false;
  std::optional<CoverSample> sample;
};

/// s = 1 construction: checks k >= log_c r + log_c ln n and the weight chain
/// ln(2m)/L^k <= k r ln n / (2c)^k <= 1/2. m comes from enumeration when
/// n <= 24 (or when requested) and from C(d, ceil r) otherwise.
S1Result s1_construction(const Instance& inst, double c, double L, std::uint64_t seed = 0,
                         MinimalCount source = MinimalCount::automatic);

}  // namespace tcover
