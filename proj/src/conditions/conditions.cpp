#include "tcover/conditions.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <set>
#include <sstream>

#include "tcover/errors.hpp"
#include "tcover/random_cover.hpp"

namespace tcover {

namespace {

constexpr double kE = std::numbers::e;
constexpr std::uint64_t kMaxDpWork = 10'000'000;
constexpr std::uint64_t kMaxPointwiseK = 1'000'000;

std::string fmt(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

void add_shape_warnings(ConditionReport& report, const InstanceShape& shape, double L) {
  const double k = static_cast<double>(shape.k);
  if (shape.k < 2) report.warnings.push_back("k < 2");
  if (k > shape.log_n) report.warnings.push_back("k exceeds ln n = " + fmt(shape.log_n));
  if (shape.log_r > shape.log_d) report.warnings.push_back("r > d: the upset is empty");
  if (shape.log_r < k * std::log(L)) {
    report.warnings.push_back("r < L^k: G := E already satisfies the target");
  }
}

// Reachable unions after `steps` draws, with the number of draw sequences
// reaching each.
std::map<std::uint64_t, BigInt> union_states(const Instance& inst, unsigned steps) {
  std::map<std::uint64_t, BigInt> states{{0, BigInt(1)}};
  for (unsigned j = 0; j < steps; ++j) {
    if (states.size() * inst.d() > kMaxDpWork) {
      throw TooLarge("union-state enumeration exceeds " + std::to_string(kMaxDpWork) + " transitions");
    }
    std::map<std::uint64_t, BigInt> next;
    for (const auto& [bits, count] : states) {
      for (Subset e : inst.edges()) next[bits | e.bits()] += count;
    }
    states = std::move(next);
  }
  return states;
}

ConditionPoint law_point(const std::string& label, std::int64_t index, const OverlapLaw& law, std::int64_t v,
                         const LogReal& factor, const LogReal& rhs) {
  const LogReal lhs = law.log_prob(v) * factor;
  if (law.kind() != OverlapLaw::Kind::empirical) return evaluate_point(label, index, lhs, rhs);
  const auto [lo, hi] = law.interval(v);
  return evaluate_interval(label, index, lhs, LogReal::from_double(lo) * factor, LogReal::from_double(hi) * factor,
                           rhs);
}

}  // namespace

OverlapLaw pair_overlap_law(const Instance& inst) {
  const std::size_t d = inst.d();
  if (d > kMaxPairEnumerationEdges) {
    throw TooLarge("pair_overlap_law: d = " + std::to_string(d) + " exceeds 10^4");
  }
  std::vector<std::uint64_t> counts(inst.k() + 1, 0);
  const auto& edges = inst.edges();
  for (std::size_t i = 0; i < d; ++i) {
    ++counts[inst.k()];  // e = e'
    for (std::size_t j = i + 1; j < d; ++j) counts[overlap(edges[i], edges[j])] += 2;
  }
  const BigInt total = BigInt(d) * d;
  std::vector<Rational> probs;
  probs.reserve(counts.size());
  for (auto c : counts) probs.emplace_back(BigInt(c), total);
  return OverlapLaw::exact(std::move(probs));
}

OverlapLaw sum_overlap_law(const Instance& inst, unsigned s, std::uint64_t trials, std::uint64_t seed) {
  if (s < 1) throw ValidationError("sum_overlap_law: s must be >= 1");
  const std::size_t top = static_cast<std::size_t>(s - 1) * inst.k();
  const auto sums = run_trials(trials, [&](std::uint64_t i) {
    Rng rng = make_rng(seed, i);
    return sample_union(inst, s, rng).y_sum();
  });
  std::vector<std::uint64_t> counts(top + 1, 0);
  for (unsigned v : sums) ++counts[v];
  return OverlapLaw::empirical(std::move(counts));
}

OverlapLaw exact_sum_overlap_law(const Instance& inst, unsigned s) {
  if (s < 1) throw ValidationError("exact_sum_overlap_law: s must be >= 1");
  const auto states = union_states(inst, s);
  const std::size_t top = static_cast<std::size_t>(s - 1) * inst.k();
  std::vector<BigInt> counts(top + 1, BigInt(0));
  const unsigned full = s * inst.k();
  for (const auto& [bits, count] : states) counts[full - Subset(bits).size()] += count;
  BigInt total(1);
  for (unsigned j = 0; j < s; ++j) total *= inst.d();
  std::vector<Rational> probs;
  probs.reserve(counts.size());
  for (const auto& c : counts) probs.emplace_back(c, total);
  return OverlapLaw::exact(std::move(probs));
}

std::vector<Rational> max_conditional_tail(const Instance& inst, unsigned s) {
  if (s < 1) throw ValidationError("max_conditional_tail: s must be >= 1");
  const unsigned k = inst.k();
  std::vector<Rational> best(k + 1, Rational(0));
  best[0] = 1;
  const auto states = union_states(inst, s - 1);
  const auto d = static_cast<unsigned long long>(inst.d());
  std::vector<std::uint64_t> by_overlap(k + 1);
  for (const auto& entry : states) {
    const Subset u(entry.first);
    std::fill(by_overlap.begin(), by_overlap.end(), 0);
    for (Subset e : inst.edges()) ++by_overlap[overlap(e, u)];
    std::uint64_t at_least = 0;
    for (unsigned y = k; y >= 1; --y) {
      at_least += by_overlap[y];
      const Rational frac{BigInt(at_least), BigInt(d)};
      if (frac > best[y]) best[y] = frac;
    }
  }
  return best;
}

ConditionReport check_thm_two(const InstanceShape& shape, const OverlapLaw& law, double L) {
  if (!(L > 1.0)) throw ValidationError("check_thm_two: L must be > 1");
  const std::int64_t k = static_cast<std::int64_t>(shape.k);
  if (law.max_value() > k) throw ValidationError("check_thm_two: law must live on [0, k]");
  ConditionReport report;
  report.id = "thm-two";
  add_shape_warnings(report, shape, L);
  if (L < 2.0 * kE) report.warnings.push_back("L < 2e: hypothesis L >= 2e not met");
  report.notes.push_back(std::string("overlap law kind: ") + to_string(law.kind()));
  if (law.kind() == OverlapLaw::Kind::empirical) {
    report.notes.push_back("empirical law with " + std::to_string(law.samples()) + " samples, z = 3 Wilson bands");
  }
  const LogReal rhs = LogReal::from_double(L).pow(static_cast<double>(k));
  for (std::int64_t y = 1; y <= k - 1; ++y) {
    const double frac = static_cast<double>(y) / static_cast<double>(k);
    const LogReal factor = LogReal::from_log((2.0 - frac) * shape.log_r + frac * shape.log_d);
    report.add(law_point("P(Y2=y) r^(2-y/k) d^(y/k) <= L^k", y, law, y, factor, rhs));
  }
  return report;
}

ConditionReport check_thm_two(const Instance& inst, const OverlapLaw& law, double L) {
  return check_thm_two(inst.shape(), law, L);
}

ConditionReport check_thm_one(const InstanceShape& shape, const OverlapLaw& law, unsigned s, double L) {
  if (s < 1) throw ValidationError("check_thm_one: s must be >= 1");
  if (!(L > 1.0)) throw ValidationError("check_thm_one: L must be > 1");
  const double k = static_cast<double>(shape.k);
  const std::int64_t top = static_cast<std::int64_t>(s - 1) * static_cast<std::int64_t>(shape.k);
  if (law.max_value() > top) throw ValidationError("check_thm_one: law must live on [0, (s-1)k]");

  ConditionReport report;
  report.id = "thm-one";
  add_shape_warnings(report, shape, L);
  if (L < 2.0 * kE) report.warnings.push_back("L < 2e: hypothesis L >= 2e not met");
  const double ln_n = shape.log_n;
  if (static_cast<double>(s) * k < ln_n) {
    report.warnings.push_back("s k = " + fmt(s * k) + " < ln n = " + fmt(ln_n));
  }
  const double log_t = -static_cast<double>(s) * k * shape.log_p() + shape.log_n;
  report.notes.push_back("t = p^(-s k) n = " + LogReal::from_log(log_t).to_string(10) + " (analytic)");
  report.notes.push_back(std::string("overlap law kind: ") + to_string(law.kind()));

  const double log_base = shape.log_d + k - shape.log_r;  // ln(d e^k / r)
  const double log_ratio = std::log(L / (2.0 * kE));
  for (std::int64_t m = 0; m <= top; ++m) {
    const LogReal factor = LogReal::from_log(log_base * static_cast<double>(m) / k);
    const LogReal rhs = LogReal::from_log(log_ratio * static_cast<double>(top - m));
    ConditionPoint p = law_point("P(sum Y = m) (d e^k/r)^(m/k) <= (L/2e)^((s-1)k-m)", m, law, m, factor, rhs);
    p.informational = m == 0;
    report.add(std::move(p));
  }
  return report;
}

ConditionReport check_thm_one(const Instance& inst, const OverlapLaw& law, unsigned s, double L) {
  return check_thm_one(inst.shape(), law, s, L);
}

ConditionReport check_thm_one_pointwise(const TailBound& tail, const InstanceShape& shape, double L) {
  if (!(L > 1.0)) throw ValidationError("check_thm_one_pointwise: L must be > 1");
  if (shape.k > kMaxPointwiseK) throw TooLarge("check_thm_one_pointwise: k too large to scan");
  const double k = static_cast<double>(shape.k);
  ConditionReport report;
  report.id = "thm-one-pointwise";
  add_shape_warnings(report, shape, L);
  if (L < 4.0 * kE) report.warnings.push_back("L < 4e: (L/4e)^(k-y) < 1");
  const double log_base = shape.log_d + k * std::log(2.0) + k - shape.log_r;  // ln(d 2^k e^k / r)
  const double log_ratio = std::log(L / (4.0 * kE));
  for (std::uint64_t y = 1; y <= shape.k; ++y) {
    const LogReal lhs = tail(y) * LogReal::from_log(log_base * static_cast<double>(y) / k);
    const LogReal rhs = LogReal::from_log(log_ratio * static_cast<double>(shape.k - y));
    report.add(evaluate_point("P(Y_s >= y | hist) (d 2^k e^k/r)^(y/k) <= (L/4e)^(k-y)",
                              static_cast<std::int64_t>(y), lhs, rhs));
  }
  return report;
}

}  // namespace tcover
