#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tcover/cliques.hpp"
#include "tcover/log_real.hpp"
#include "tcover/report.hpp"

namespace tcover {

enum class RegimeCase { general, succinct };

const char* to_string(RegimeCase c);

/// ln of the lower r-threshold of the many-unions regime:
/// general 2^(3k) e^(3k) ln^(2kt)(nt), succinct (ln(e nt/l))^l nt e^(3(l+1)).
double log_threshold_52(const CliqueParams& params, RegimeCase c);
/// ln of the upper r-bound of the pairwise regime, sqrt(L^k nt^(l-1) / (e^(2kt) kt^(l-1))).
double log_bound_53(const CliqueParams& params, double L);

/// Hypotheses of the many-unions regime, the final inequality of its
/// derivation at these parameters, and the pointwise tail condition fed
/// with the clique tail bound. r must be >= 1.
ConditionReport regime_check_52(const CliqueParams& params, const LogReal& r, double L, RegimeCase c);

/// r <= B, L >= 2e and e^(2kt) r^2 (kt/nt)^(l-1) <= L^k; when k <= 4096 the
/// pairwise condition is also evaluated on the exact clique law.
ConditionReport regime_check_53(const CliqueParams& params, const LogReal& r, double L);

struct RegimeRow {
  double log_r = 0.0;
  bool case1 = false;
  bool case2 = false;
  bool pairwise = false;
  bool covered = false;
  /// ln r - ln threshold for the two lower bounds, ln B - ln r for the upper.
  double margin_case1 = 0.0;
  double margin_case2 = 0.0;
  double margin_53 = 0.0;
};

struct RegimeScan {
  CliqueParams params;
  double L = 0.0;
  double log_r_lo = 0.0;  // k ln L
  double log_r_hi = 0.0;  // ln d
  /// L^k > d: no r to cover.
  bool vacuous = false;
  bool case1_applicable = false;  // l <= 4 ln nt and L >= 4e
  bool case2_applicable = false;  // kt = l+1 and L >= 4e
  bool pairwise_applicable = false;  // L >= 2e
  double log_threshold_case1 = 0.0;
  double log_threshold_case2 = 0.0;
  double log_bound_53 = 0.0;
  /// Smallest applicable lower threshold lies below B.
  bool bounds_overlap = false;
  /// Some r in [L^k, d] satisfies no applicable hypothesis (decided
  /// analytically, not from the grid).
  bool gap = false;
  std::vector<RegimeRow> rows;
  /// ln of the two branch quantities compared against 1.
  double log_cor_bound = 0.0;
  double log_cor_bound_sc = 0.0;

  bool gap_free() const { return bounds_overlap && !gap; }
};

RegimeScan regime_coverage_scan(const CliqueParams& params, double L, unsigned points = 64);

/// About `per_decade` log-spaced integers from lo to hi inclusive.
std::vector<std::int64_t> log_grid(std::int64_t lo, std::int64_t hi, unsigned per_decade);

struct RegimeGridScan {
  std::vector<RegimeScan> scans;
  std::optional<std::int64_t> smallest_gap_free_nt;
  bool any_gap = false;
};

/// One scan per nt; scans run in parallel and are returned in grid order.
RegimeGridScan regime_grid_scan(const std::vector<std::int64_t>& nt_grid, std::int64_t kt, std::int64_t l, double L,
                                unsigned points = 64);

}  // namespace tcover
