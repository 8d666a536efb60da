#include "tcover/regimes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "tcover/combinatorics.hpp"
#include "tcover/conditions.hpp"
#include "tcover/errors.hpp"
#include "tcover/rng.hpp"

namespace tcover {

namespace {

constexpr double kE = std::numbers::e;
constexpr std::uint64_t kMaxExactCheckK = 4096;
constexpr double kInf = std::numeric_limits<double>::infinity();

LogReal lr(double log_value) { return LogReal::from_log(log_value); }

void require_r(const LogReal& r) {
  if (r.sign() <= 0 || r.log_abs() < 0.0) throw ValidationError("r must be >= 1");
}

// ln((mt)_l (l+1) / (nt)_l) with mt = l ln(e nt / l).
double log_succinct_tail(const CliqueParams& params) {
  const double l = static_cast<double>(params.l);
  const double mt = l * std::log(kE * static_cast<double>(params.nt) / l);
  const LogReal ff = log_falling_factorial(mt, params.l);
  if (ff.is_zero()) return -kInf;
  return ff.log_abs() + std::log(l + 1.0) - log_falling_factorial(static_cast<double>(params.nt), params.l).log_abs();
}

void append(ConditionReport& into, const ConditionReport& from, const std::string& prefix) {
  for (auto p : from.points) {
    p.label = prefix + p.label;
    into.add(std::move(p));
  }
  for (const auto& w : from.warnings) into.warnings.push_back(prefix + w);
}

}  // namespace

const char* to_string(RegimeCase c) { return c == RegimeCase::general ? "general" : "succinct"; }

double log_threshold_52(const CliqueParams& params, RegimeCase c) {
  const double ln_nt = std::log(static_cast<double>(params.nt));
  if (c == RegimeCase::general) {
    const double k = static_cast<double>(params.k());
    return 3.0 * k * std::log(2.0) + 3.0 * k + 2.0 * static_cast<double>(params.kt) * std::log(ln_nt);
  }
  const double l = static_cast<double>(params.l);
  return l * std::log(std::log(kE * static_cast<double>(params.nt) / l)) + ln_nt + 3.0 * (l + 1.0);
}

double log_bound_53(const CliqueParams& params, double L) {
  const double k = static_cast<double>(params.k());
  const double lm1 = static_cast<double>(params.l - 1);
  return 0.5 * (k * std::log(L) + lm1 * std::log(static_cast<double>(params.nt)) -
                2.0 * static_cast<double>(params.kt) - lm1 * std::log(static_cast<double>(params.kt)));
}

ConditionReport regime_check_52(const CliqueParams& params, const LogReal& r, double L, RegimeCase c) {
  params.validate();
  require_r(r);
  if (c == RegimeCase::succinct && params.kt != params.l + 1) {
    throw ValidationError("the succinct case needs kt = l + 1");
  }
  const double log_r = r.log_abs();
  const double k = static_cast<double>(params.k());
  const double ln_nt = std::log(static_cast<double>(params.nt));
  const double log_d = params.log_d();

  ConditionReport report;
  report.id = c == RegimeCase::general ? "regime-unions-general" : "regime-unions-succinct";
  report.warnings = params.warnings();
  if (log_r < k * std::log(L)) report.warnings.push_back("r < L^k: outside the clique setting's r range");

  const double threshold = log_threshold_52(params, c);
  if (threshold > log_d) report.notes.push_back("regime empty: threshold " + lr(threshold).to_string() + " exceeds d");

  if (c == RegimeCase::general) {
    report.add(evaluate_point("l <= 4 ln nt", 0, LogReal::from_double(static_cast<double>(params.l)),
                              LogReal::from_double(4.0 * ln_nt)));
    report.add(evaluate_point("2^(3k) e^(3k) ln^(2kt)(nt) <= r", 0, lr(threshold), r));
  } else {
    report.add(evaluate_point("(ln(e nt/l))^l nt e^(3(l+1)) <= r", 0, lr(threshold), r));
  }
  report.add(evaluate_point("4e <= L", 0, LogReal::from_double(4.0 * kE), LogReal::from_double(L)));
  report.add(evaluate_point("r <= d", 0, r, lr(log_d)));

  if (c == RegimeCase::general) {
    const double kt = static_cast<double>(params.kt);
    const double chain = 2.0 * kt + 2.0 * kt * std::log(ln_nt) + 3.0 * k * std::log(2.0) + k - log_r;
    report.add(evaluate_point("e^(2kt) ln^(2kt)(nt) 2^(3k) e^k / r <= 1", 0, lr(chain), LogReal::one()));
  } else {
    const double l = static_cast<double>(params.l);
    const double start = log_succinct_tail(params) + log_binomial(params.nt, params.l + 1).log_abs() +
                         (l + 1.0) * (std::log(2.0) + 1.0) - log_r;
    report.add(evaluate_point("(mt)_l (l+1)/(nt)_l C(nt,l+1) 2^(l+1) e^(l+1) / r <= 1", 0, lr(start),
                              LogReal::one()));
    report.add(evaluate_point("(ln(e nt/l))^l nt e^(3(l+1)) / r <= 1", 1, lr(threshold - log_r), LogReal::one()));
  }

  if (params.k() <= kMaxExactCheckK && log_r <= log_d) {
    TailBound tail;
    if (c == RegimeCase::general) {
      tail = [&params](std::uint64_t y) {
        const LogReal b = specialized_tail_bound(params.nt, params.kt, ytilde_map(y, params.l));
        return b > LogReal::one() ? LogReal::one() : b;
      };
    } else {
      const double t = log_succinct_tail(params);
      tail = [t](std::uint64_t) { return t > 0.0 ? LogReal::one() : LogReal::from_log(t); };
    }
    append(report, check_thm_one_pointwise(tail, params.shape(log_r), L), "pointwise: ");
  } else {
    report.notes.push_back("pointwise tail condition skipped (k > 4096 or r > d)");
  }
  return report;
}

ConditionReport regime_check_53(const CliqueParams& params, const LogReal& r, double L) {
  params.validate();
  require_r(r);
  const double log_r = r.log_abs();
  const double k = static_cast<double>(params.k());
  const double log_d = params.log_d();
  ConditionReport report;
  report.id = "regime-pairwise";
  report.warnings = params.warnings();
  if (log_r < k * std::log(L)) report.warnings.push_back("r < L^k: outside the clique setting's r range");

  const double bound = log_bound_53(params, L);
  report.add(evaluate_point("r <= sqrt(L^k nt^(l-1) / (e^(2kt) kt^(l-1)))", 0, r, lr(bound)));
  report.add(evaluate_point("2e <= L", 0, LogReal::from_double(2.0 * kE), LogReal::from_double(L)));
  report.add(evaluate_point("r <= d", 0, r, lr(log_d)));
  const double lm1 = static_cast<double>(params.l - 1);
  const double final_lhs = 2.0 * static_cast<double>(params.kt) + 2.0 * log_r +
                           lm1 * (std::log(static_cast<double>(params.kt)) - std::log(static_cast<double>(params.nt)));
  report.add(evaluate_point("e^(2kt) r^2 (kt/nt)^(l-1) <= L^k", 0, lr(final_lhs), lr(k * std::log(L))));

  if (params.k() <= kMaxExactCheckK) {
    append(report, check_thm_two(params.shape(log_r), exact_pair_law_cliques(params), L), "pairwise: ");
  } else {
    report.notes.push_back("exact pairwise condition skipped (k > 4096)");
  }
  return report;
}

RegimeScan regime_coverage_scan(const CliqueParams& params, double L, unsigned points) {
  params.validate();
  if (!(L > 1.0)) throw ValidationError("regime scan needs L > 1");
  RegimeScan scan;
  scan.params = params;
  scan.L = L;
  const double k = static_cast<double>(params.k());
  const double ln_nt = std::log(static_cast<double>(params.nt));
  scan.log_r_lo = k * std::log(L);
  scan.log_r_hi = params.log_d();
  scan.vacuous = scan.log_r_lo > scan.log_r_hi;

  scan.case1_applicable = static_cast<double>(params.l) <= 4.0 * ln_nt && L >= 4.0 * kE;
  scan.case2_applicable = params.kt == params.l + 1 && L >= 4.0 * kE;
  scan.pairwise_applicable = L >= 2.0 * kE;
  scan.log_threshold_case1 = log_threshold_52(params, RegimeCase::general);
  scan.log_threshold_case2 =
      params.kt == params.l + 1 ? log_threshold_52(params, RegimeCase::succinct) : kInf;
  scan.log_bound_53 = log_bound_53(params, L);

  double lower = kInf;
  if (scan.case1_applicable) lower = std::min(lower, scan.log_threshold_case1);
  if (scan.case2_applicable) lower = std::min(lower, scan.log_threshold_case2);
  const double upper = scan.pairwise_applicable ? scan.log_bound_53 : -kInf;
  scan.bounds_overlap = lower <= upper;
  // uncovered r: above B and below every applicable lower threshold
  if (!scan.vacuous) scan.gap = std::max(scan.log_r_lo, upper) < std::min(scan.log_r_hi, lower);

  const double l = static_cast<double>(params.l);
  const double kt = static_cast<double>(params.kt);
  scan.log_cor_bound = 6.0 * k * (std::log(2.0) + 1.0) + 2.0 * kt - k * std::log(L) +
                       4.0 * kt * std::log(ln_nt) + (l - 1.0) * (std::log(kt) - ln_nt);
  scan.log_cor_bound_sc = 2.0 * l * std::log(std::log(kE * static_cast<double>(params.nt) / l)) + 8.0 * (l + 1.0) +
                          (l - 1.0) * std::log(l + 1.0) - (l + 1.0) * std::log(L) - (l - 3.0) * ln_nt;

  if (!scan.vacuous && points > 0) {
    for (unsigned i = 0; i < points; ++i) {
      RegimeRow row;
      row.log_r = points == 1 ? scan.log_r_lo
                              : scan.log_r_lo + (scan.log_r_hi - scan.log_r_lo) * static_cast<double>(i) /
                                                    static_cast<double>(points - 1);
      row.margin_case1 = row.log_r - scan.log_threshold_case1;
      row.margin_case2 = row.log_r - scan.log_threshold_case2;
      row.margin_53 = scan.log_bound_53 - row.log_r;
      row.case1 = scan.case1_applicable && row.margin_case1 >= 0.0;
      row.case2 = scan.case2_applicable && row.margin_case2 >= 0.0;
      row.pairwise = scan.pairwise_applicable && row.margin_53 >= 0.0;
      row.covered = row.case1 || row.case2 || row.pairwise;
      scan.rows.push_back(row);
    }
  }
  return scan;
}

std::vector<std::int64_t> log_grid(std::int64_t lo, std::int64_t hi, unsigned per_decade) {
  if (lo < 1 || hi < lo) throw ValidationError("grid needs 1 <= lo <= hi");
  if (per_decade == 0) throw ValidationError("grid needs at least one point per decade");
  std::vector<std::int64_t> out;
  const double a = std::log10(static_cast<double>(lo));
  const double b = std::log10(static_cast<double>(hi));
  const auto steps = static_cast<std::int64_t>(std::ceil((b - a) * per_decade - 1e-9));
  for (std::int64_t i = 0; i <= steps; ++i) {
    const double e = std::min(b, a + static_cast<double>(i) / per_decade);
    const auto v = std::clamp<std::int64_t>(std::llround(std::pow(10.0, e)), lo, hi);
    if (out.empty() || out.back() != v) out.push_back(v);
  }
  if (out.back() != hi) out.push_back(hi);
  return out;
}

RegimeGridScan regime_grid_scan(const std::vector<std::int64_t>& nt_grid, std::int64_t kt, std::int64_t l, double L,
                                unsigned points) {
  RegimeGridScan out;
  for (auto nt : nt_grid) CliqueParams{nt, kt, l}.validate();
  out.scans = run_trials(nt_grid.size(), [&](std::uint64_t i) {
    return regime_coverage_scan(CliqueParams{nt_grid[i], kt, l}, L, points);
  });
  for (const auto& s : out.scans) {
    if (s.gap) out.any_gap = true;
    if (!out.smallest_gap_free_nt && s.gap_free()) out.smallest_gap_free_nt = s.params.nt;
  }
  return out;
}

}  // namespace tcover
