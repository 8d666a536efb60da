#include "tcover/random_cover.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "tcover/combinatorics.hpp"
#include "tcover/errors.hpp"

namespace tcover {

void CoverParams::validate() const {
  if (s < 1) throw ValidationError("cover: s must be >= 1");
  if (!(L > 1.0)) throw ValidationError("cover: L must be > 1");
}

unsigned default_s(const Instance& inst) {
  const double s = ceil_tolerant(std::log(static_cast<double>(inst.n())) / inst.k());
  return static_cast<unsigned>(std::max(1.0, s));
}

double default_log_t(const Instance& inst, unsigned s) {
  const double log_p = inst.shape().log_p();
  return -static_cast<double>(s) * inst.k() * log_p + std::log(static_cast<double>(inst.n()));
}

std::optional<std::uint64_t> default_t(const Instance& inst, unsigned s) {
  const double log_t = default_log_t(inst, s);
  if (log_t > std::log(static_cast<double>(kMaxMaterializedT))) return std::nullopt;
  return static_cast<std::uint64_t>(ceil_tolerant(std::exp(log_t)));
}

unsigned UnionTrace::y_sum() const {
  unsigned acc = 0;
  for (unsigned v : y) acc += v;
  return acc;
}

UnionTrace sample_union(const Instance& inst, unsigned s, Rng& rng) {
  UnionTrace trace;
  trace.y.reserve(s);
  const auto& edges = inst.edges();
  for (unsigned j = 0; j < s; ++j) {
    const Subset e = edges[uniform_index(rng, edges.size())];
    trace.y.push_back(overlap(e, trace.set));
    trace.set = trace.set | e;
  }
  return trace;
}

SubsetFamily CoverSample::family() const { return SubsetFamily(unions); }

CoverSample sample_cover(const Instance& inst, const CoverParams& params, Rng& rng) {
  params.validate();
  if (params.t < 1) throw ValidationError("sample_cover: t must be >= 1");
  if (params.t > kMaxMaterializedT) {
    throw TooLarge("sample_cover: t = " + std::to_string(params.t) + " exceeds the materialization cap");
  }
  CoverSample sample;
  sample.unions.reserve(params.t);
  sample.y_traces.reserve(params.t);
  sample.sizes.reserve(params.t);
  for (std::uint64_t i = 0; i < params.t; ++i) {
    UnionTrace u = sample_union(inst, params.s, rng);
    sample.sizes.push_back(u.set.size());
    sample.unions.push_back(u.set);
    sample.y_traces.push_back(std::move(u.y));
  }
  return sample;
}

CoverSample sample_cover(const Instance& inst, const CoverParams& params) {
  Rng rng = make_rng(params.seed, 0);
  return sample_cover(inst, params, rng);
}

WilsonInterval wilson(std::uint64_t successes, std::uint64_t trials, double z) {
  if (trials == 0) return {0.0, 0.0, 1.0, 0.5};
  const double n = static_cast<double>(trials);
  const double phat = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (phat + z2 / (2.0 * n)) / denom;
  const double half = z * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n)) / denom;
  return {center, std::max(0.0, center - half), std::min(1.0, center + half), half / z};
}

namespace {

bool union_list_covers(const std::vector<Subset>& unions, const UpsetSummary& summary) {
  for (Subset s : summary.minimal) {
    const bool hit = std::any_of(unions.begin(), unions.end(), [s](Subset e) { return e.is_subset_of(s); });
    if (!hit) return false;
  }
  return true;
}

void require_materializable(const Instance& inst, const CoverParams& params, const char* who) {
  if (inst.n() > kMaxEnumerableGroundSize) {
    throw TooLarge(std::string(who) + ": exact cover checks need n <= 24");
  }
  if (params.t > kMaxMaterializedT) {
    throw TooLarge(std::string(who) + ": t exceeds the materialization cap");
  }
}

}  // namespace

CoverageEstimate coverage_probability(const Instance& inst, const CoverParams& params, std::uint64_t trials) {
  params.validate();
  require_materializable(inst, params, "coverage_probability");
  const UpsetSummary summary = minimal_elements(inst);

  CoverageEstimate est;
  est.trials = trials;
  est.m = summary.m();

  const double log_p = inst.shape().log_p();
  const double psk = std::exp(static_cast<double>(params.s) * inst.k() * log_p);
  const double t = static_cast<double>(params.t);
  const double m = static_cast<double>(est.m);
  est.analytic_bound = 1.0 - m * std::exp(t * std::log1p(-std::min(psk, 1.0)));
  if (psk >= 1.0) est.analytic_bound = params.t > 0 ? 1.0 : 1.0 - m;
  est.analytic_exp_bound = m > 0 ? 1.0 - std::exp(std::log(m) - psk * t) : 1.0;

  if (params.t == 0) {
    // G is empty; it covers only an empty upset
    est.successes = summary.m() == 0 ? trials : 0;
  } else {
    const auto hits = run_trials(trials, [&](std::uint64_t i) -> std::uint8_t {
      Rng rng = make_rng(params.seed, i);
      const CoverSample sample = sample_cover(inst, params, rng);
      return union_list_covers(sample.unions, summary) ? 1 : 0;
    });
    for (auto h : hits) est.successes += h;
  }
  const WilsonInterval w = wilson(est.successes, trials);
  est.estimate = trials ? static_cast<double>(est.successes) / static_cast<double>(trials) : 0.0;
  est.wilson_low = w.low;
  est.wilson_high = w.high;
  est.wilson_se = w.se;
  return est;
}

ConditionalTransfer conditional_transfer(const Instance& inst, const CoverParams& params, std::uint64_t trials) {
  params.validate();
  require_materializable(inst, params, "conditional_transfer");
  if (params.t < 1) throw ValidationError("conditional_transfer: t must be >= 1");
  const UpsetSummary summary = minimal_elements(inst);
  const double q = solve_p(inst) / params.L;

  struct Outcome {
    std::uint8_t covered;
    double weight;
  };
  const auto outcomes = run_trials(trials, [&](std::uint64_t i) {
    Rng rng = make_rng(params.seed, i);
    const CoverSample sample = sample_cover(inst, params, rng);
    return Outcome{static_cast<std::uint8_t>(union_list_covers(sample.unions, summary) ? 1 : 0),
                   weight_family(sample.family(), q).to_double()};
  });

  ConditionalTransfer ct;
  ct.trials = trials;
  double sum_w = 0.0;
  double sum_wc = 0.0;
  double sum_wc2 = 0.0;
  for (const auto& o : outcomes) {
    sum_w += o.weight;
    if (o.covered) {
      ++ct.covered;
      sum_wc += o.weight;
      sum_wc2 += o.weight * o.weight;
    }
  }
  const double n = static_cast<double>(trials);
  ct.p_covers = trials ? static_cast<double>(ct.covered) / n : 0.0;
  ct.mean_weight = trials ? sum_w / n : 0.0;
  if (ct.covered > 0) {
    const double c = static_cast<double>(ct.covered);
    ct.mean_weight_given_cover = sum_wc / c;
    const double var = ct.covered > 1 ? std::max(0.0, (sum_wc2 - c * ct.mean_weight_given_cover *
                                                                      ct.mean_weight_given_cover) /
                                                           (c - 1.0))
                                      : 0.0;
    ct.std_error_given_cover = std::sqrt(var / c);
    ct.transfer_bound = ct.mean_weight / ct.p_covers;
  } else {
    ct.transfer_bound = std::numeric_limits<double>::infinity();
  }
  return ct;
}

WeightEstimate expected_cover_weight_log_t(const Instance& inst, unsigned s, double log_t, double L,
                                           std::uint64_t trials, std::uint64_t seed) {
  if (s < 1) throw ValidationError("expected_cover_weight: s must be >= 1");
  if (!(L > 1.0)) throw ValidationError("expected_cover_weight: L must be > 1");
  WeightEstimate est;
  est.log_t = log_t;
  const double log_q = inst.shape().log_p() - std::log(L);
  const LogReal t = LogReal::from_log(log_t);

  if (s == 1) {
    est.exact = true;
    est.estimate = t * LogReal::from_log(inst.k() * log_q);
    est.size_histogram[inst.k()] = 0;
    return est;
  }

  est.trials = trials;
  if (trials == 0) return est;
  const auto sizes = run_trials(trials, [&](std::uint64_t i) {
    Rng rng = make_rng(seed, i);
    return sample_union(inst, s, rng).set.size();
  });
  for (unsigned sz : sizes) ++est.size_histogram[sz];

  std::vector<LogReal> first;
  std::vector<LogReal> second;
  for (auto [sz, count] : est.size_histogram) {
    const LogReal c = LogReal::from_double(static_cast<double>(count));
    first.push_back(c * LogReal::from_log(sz * log_q));
    second.push_back(c * LogReal::from_log(2.0 * sz * log_q));
  }
  const LogReal n = LogReal::from_double(static_cast<double>(trials));
  const LogReal mean = log_sum_exp(first) / n;
  est.estimate = t * mean;
  if (trials > 1) {
    LogReal var = (log_sum_exp(second) / n - mean * mean) *
                  LogReal::from_double(static_cast<double>(trials) / static_cast<double>(trials - 1));
    if (var.sign() < 0) var = LogReal::zero();
    est.std_error = t * (var / n).pow(0.5);
  }
  return est;
}

WeightEstimate expected_cover_weight(const Instance& inst, const CoverParams& params, std::uint64_t trials,
                                     bool with_transfer) {
  params.validate();
  if (params.t == 0) {
    WeightEstimate est;
    est.exact = true;
    est.log_t = -std::numeric_limits<double>::infinity();
    return est;
  }
  WeightEstimate est = expected_cover_weight_log_t(inst, params.s, std::log(static_cast<double>(params.t)),
                                                   params.L, trials, params.seed);
  if (with_transfer) est.transfer = conditional_transfer(inst, params, trials);
  return est;
}

S1Result s1_construction(const Instance& inst, double c, double L, std::uint64_t seed, MinimalCount source) {
  if (!(c > 1.0)) throw ValidationError("s1_construction: c must be > 1");
  if (!(L > 1.0)) throw ValidationError("s1_construction: L must be > 1");
  const double p = solve_p(inst);
  const double k = inst.k();
  const double ln_n = std::log(static_cast<double>(inst.n()));

  S1Result out;
  out.report.id = "s1";
  out.report.warnings = inst.assumption_warnings(L);

  const bool enumerate =
      source == MinimalCount::exact || (source == MinimalCount::automatic && inst.n() <= kMaxEnumerableGroundSize);
  if (enumerate) {
    out.m = LogReal::from_double(static_cast<double>(minimal_elements(inst).m()));
    out.m_exact = true;
  } else {
    namespace mp = boost::multiprecision;
    const Rational& r = inst.r();
    BigInt rc = mp::numerator(r) / mp::denominator(r);
    if (rc * mp::denominator(r) < mp::numerator(r)) ++rc;
    out.m = log_binomial(static_cast<std::int64_t>(inst.d()), rc.convert_to<std::int64_t>());
    out.report.notes.push_back("m bounded by C(d, ceil r) instead of enumerated");
  }
  const LogReal ln_2m = LogReal::from_double(std::log(2.0) + out.m.log_abs());

  out.t = ceil_tolerant(std::exp(-k * std::log(p) + std::log(ln_2m.to_double())));
  std::ostringstream tn;
  tn << "t = ceil(p^-k ln(2m)) = " << out.t << ", s = 1";
  out.report.notes.push_back(tn.str());

  const LogReal Lk = LogReal::from_double(L).pow(k);
  const LogReal two_c_k = LogReal::from_double(2.0 * c).pow(k);

  if (ln_n > 0.0) {
    const double needed = (inst.log_r() + std::log(ln_n)) / std::log(c);
    out.report.add(evaluate_point("k >= log_c(r) + log_c(ln n)", 0, LogReal::from_double(needed),
                                  LogReal::from_double(k)));
  } else {
    out.report.notes.push_back("n = 1: log_c(ln n) is -inf, hypothesis holds vacuously");
  }
  out.report.add(evaluate_point("L >= 2c", 0, LogReal::from_double(2.0 * c), LogReal::from_double(L)));

  const LogReal chain_bound =
      LogReal::from_double(k) * LogReal::from_log(inst.log_r()) * LogReal::from_double(ln_n) / two_c_k;
  out.report.add(evaluate_point("ln(2m)/L^k <= k r ln(n)/(2c)^k", 0, ln_2m / Lk, chain_bound));
  out.report.add(evaluate_point("k r ln(n)/(2c)^k <= 1/2", 0, chain_bound, LogReal::from_double(0.5)));

  ConditionPoint integer_t = evaluate_point("t (p/L)^k <= 1/2 with rounded t", 0,
                                            LogReal::from_double(out.t) * LogReal::from_double(p / L).pow(k),
                                            LogReal::from_double(0.5));
  integer_t.informational = true;
  out.report.add(integer_t);

  if (out.t <= static_cast<double>(kMaxMaterializedT)) {
    CoverParams params{1, static_cast<std::uint64_t>(out.t), L, seed};
    out.sample = sample_cover(inst, params);
  } else {
    out.report.notes.push_back("t too large to materialize; cover sample omitted");
  }
  return out;
}

}  // namespace tcover
