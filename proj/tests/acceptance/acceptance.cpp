// Acceptance suite: one line per criterion, nonzero exit if any fails.
#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <string>
#include <vector>

#include "tcover/cliques.hpp"
#include "tcover/combinatorics.hpp"
#include "tcover/conditions.hpp"
#include "tcover/explicit_cover.hpp"
#include "tcover/hypergeom.hpp"
#include "tcover/random_cover.hpp"
#include "tcover/regimes.hpp"
#include "tcover/upset.hpp"

using namespace tcover;

namespace {

constexpr double kE = std::numbers::e;

// 4-cycle, r = 2
Instance instance_a() { return Instance(4, 2, {Subset{0, 1}, Subset{1, 2}, Subset{2, 3}, Subset{0, 3}}, 2); }

// triangles of K5 on its 10 pairs, r = 2
Instance instance_b() { return build_clique_instance({5, 3, 2}, 2); }

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  const char* name;
  double budget_s;
  std::function<Outcome()> run;
};

std::vector<std::uint64_t> masks_of_size(unsigned n, unsigned size) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    if (static_cast<unsigned>(std::popcount(m)) == size) out.push_back(m);
  }
  return out;
}

Outcome clique_pair_law() {
  const OverlapLaw law = exact_pair_law_cliques({5, 3, 2});
  const bool expected = law.exact_prob(0) == Rational(3, 10) && law.exact_prob(1) == Rational(6, 10) &&
                        law.exact_prob(2) == 0 && law.exact_prob(3) == Rational(1, 10);
  // every ordered pair of triangles; shared vertex pairs = C(shared vertices, 2)
  const auto triangles = masks_of_size(5, 3);
  std::map<std::uint64_t, std::uint64_t> counts;
  for (auto a : triangles) {
    for (auto b : triangles) {
      const auto shared = static_cast<std::uint64_t>(std::popcount(a & b));
      ++counts[shared * (shared - (shared > 0)) / 2];
    }
  }
  bool brute = triangles.size() * triangles.size() == 100;
  for (std::uint64_t y = 0; y <= 3; ++y) brute = brute && law.exact_prob(y) == Rational(counts[y], 100);
  return {expected && brute, "P = {0: 3/10, 1: 6/10, 3: 1/10}, 100 ordered pairs enumerated"};
}

Outcome coverage() {
  const Instance a = instance_a();
  CoverParams params;
  params.s = 1;
  params.t = 5;
  params.seed = 2024;
  const CoverageEstimate est = coverage_probability(a, params, 10'000);
  const bool pass = est.estimate >= 0.5 - 3 * est.wilson_se && est.analytic_bound >= 0.5;
  char buf[160];
  std::snprintf(buf, sizeof buf, "coverage %.4f (se %.4f), analytic bound %.4f", est.estimate, est.wilson_se,
                est.analytic_bound);
  return {pass, buf};
}

Outcome explicit_cover() {
  const Instance a = instance_a();
  const ExplicitCover cover = build_explicit_cover(a);
  if (!cover.g0 || !cover.g1) return {false, "families not materialized"};
  bool shape = cover.g0->size() == 4 && cover.g1->size() == 1 && (*cover.g1)[0] == Subset{0, 1, 2, 3};
  for (const auto& s : *cover.g0) shape = shape && s.size() == 3;

  // every subset of X in the upset must contain a member of G0 u G1
  const SubsetFamily all = cover.combined();
  bool covered = true;
  for (std::uint64_t s = 0; s < 16; ++s) {
    std::size_t inside = 0;
    for (auto e : a.edges()) inside += (e.bits() & ~s) == 0;
    if (inside < 2) continue;
    bool hit = false;
    for (const auto& f : all) hit = hit || (f.bits() & ~s) == 0;
    covered = covered && hit;
  }

  const ExplicitCoverWeights w = explicit_cover_weights(a, 2 * kE);
  // q_upper >= p/L = 1/(2e sqrt 2): weights at q_upper bound those at p/L
  const bool upper_ok = to_double(w.q_upper) >= 1.0 / (2 * kE * std::sqrt(2.0));
  const bool weights = w.w0_exact_upper && w.w1_exact_upper && *w.w0_exact_upper <= Rational(1, 2) &&
                       *w.w1_exact_upper <= Rational(1, 2);
  char buf[200];
  std::snprintf(buf, sizeof buf, "w0 <= %.6f, w1 <= %.6f at q = %s", w.w0_exact_upper ? to_double(*w.w0_exact_upper) : -1.0,
                w.w1_exact_upper ? to_double(*w.w1_exact_upper) : -1.0, format_rational(w.q_upper).c_str());
  return {shape && covered && upper_ok && weights, buf};
}

Outcome f_analysis_all() {
  std::size_t checked = 0;
  for (std::int64_t kt = 3; kt <= 30; ++kt) {
    for (std::int64_t l = 2; l < kt; ++l) {
      const FAnalysis f = f_analysis(kt, l);
      // independent recomputation of the endpoints
      const Rational fl = Rational(l) - Rational(kt) / Rational(binomial(kt, l));
      const Rational flast = Rational(kt - 1) - Rational(kt) * Rational(binomial(kt - 1, l)) / Rational(binomial(kt, l));
      if (!f.ok() || f.values.front().second != fl || f.values.back().second != flast || flast != l - 1 ||
          fl < l - 1) {
        return {false, "failed at kt=" + std::to_string(kt) + " l=" + std::to_string(l)};
      }
      ++checked;
    }
  }
  return {true, std::to_string(checked) + " (kt, l) pairs"};
}

Outcome tail_bound() {
  std::size_t cases = 0;
  for (std::int64_t nt = 1; nt <= 100; ++nt) {
    for (std::int64_t kt = 1; kt <= std::min<std::int64_t>(8, nt); ++kt) {
      for (std::int64_t mt = 0; mt <= nt; ++mt) {
        const HypergeomLaw law = hypergeom(nt, mt, kt);
        for (std::int64_t yt = 1; yt <= kt; ++yt) {
          const Rational exact = law.tail(yt);
          const double log_bound = yt * (std::log(static_cast<double>(mt) / nt) + std::log(kE * kt / yt));
          ++cases;
          if (exact == 0) continue;
          if (log_of(exact) > log_bound + 1e-12) {
            return {false, "nt=" + std::to_string(nt) + " mt=" + std::to_string(mt) + " kt=" + std::to_string(kt) +
                               " yt=" + std::to_string(yt)};
          }
        }
      }
    }
  }
  // the library's own check on a slice
  for (std::int64_t mt = 0; mt <= 40; ++mt) {
    for (std::int64_t yt = 1; yt <= 8; ++yt) {
      if (!tail_bound_check(40, mt, 8, yt).pass) return {false, "tail_bound_check disagrees"};
    }
  }
  return {true, std::to_string(cases) + " cases"};
}

Outcome domination() {
  const CliqueParams p{20, 3, 2};
  const auto traces = run_trials(100'000, [&](std::uint64_t i) {
    Rng rng = make_rng(606, i);
    const CliqueTrace t = sample_clique_trace(p, 4, rng);
    std::uint64_t bad = 0;
    for (std::size_t j = 0; j < t.y.size(); ++j) {
      const std::uint64_t cap = t.yt[j] < p.l ? 0 : binomial_u64(t.yt[j], p.l);
      bad += t.y[j] > cap;
    }
    return bad;
  });
  std::uint64_t violations = 0;
  for (auto v : traces) violations += v;
  return {violations == 0, std::to_string(violations) + " violations in 100000 traces"};
}

Outcome exact_vs_empirical() {
  double worst = 0.0;
  for (const Instance& inst : {instance_a(), instance_b()}) {
    const OverlapLaw sampled = sum_overlap_law(inst, 2, 100'000, 77);
    worst = std::max(worst, sampled.total_variation(pair_overlap_law(inst)));
  }
  char buf[80];
  std::snprintf(buf, sizeof buf, "max total variation %.5f", worst);
  return {worst <= 0.02, buf};
}

Outcome numerics() {
  double worst = 0.0;
  for (std::int64_t a = 0; a <= 60; ++a) {
    for (std::int64_t b = 0; b <= a; ++b) {
      const double exact = to_double(binomial(a, b));
      const double approx = log_binomial(a, b).to_double();
      worst = std::max(worst, std::fabs(approx - exact) / exact);
    }
  }
  bool sums = true;
  for (std::int64_t n = 1; n <= 40; ++n) {
    for (std::int64_t m = 0; m <= n; ++m) {
      for (std::int64_t k = 1; k <= n; ++k) {
        const HypergeomLaw law = hypergeom(n, m, k);
        Rational total = 0;
        for (std::int64_t v = law.min_value(); v <= law.max_value(); ++v) total += law.pmf(v);
        sums = sums && total == 1;
      }
    }
  }
  char buf[120];
  std::snprintf(buf, sizeof buf, "max relative error %.3g, pmf sums exact: %s", worst, sums ? "yes" : "no");
  return {worst <= 1e-10 && sums, buf};
}

Outcome regime_scan() {
  const auto grid = log_grid(1000, 1'000'000'000, 4);
  const double big_L = std::pow(2.0, 12) * std::exp(16.0);
  const RegimeGridScan hi = regime_grid_scan(grid, 3, 2, big_L, 64);
  const RegimeGridScan lo = regime_grid_scan(grid, 3, 2, 1.01, 64);
  std::string detail = "smallest gap-free nt at L=big: ";
  detail += hi.smallest_gap_free_nt ? std::to_string(*hi.smallest_gap_free_nt) : "none";
  detail += std::string(", gap at L=1.01: ") + (lo.any_gap ? "yes" : "no");
  return {hi.smallest_gap_free_nt.has_value() && lo.any_gap, detail};
}

Outcome conditional_transfer_check() {
  CoverParams params;
  params.s = 1;
  params.t = 5;
  params.seed = 99;
  const ConditionalTransfer ct = conditional_transfer(instance_a(), params, 10'000);
  const bool pass = ct.covered > 0 && ct.mean_weight_given_cover <= ct.transfer_bound + 3 * ct.std_error_given_cover;
  char buf[160];
  std::snprintf(buf, sizeof buf, "E[w | covers] %.5f vs E[w]/P(covers) %.5f (se %.5f)", ct.mean_weight_given_cover,
                ct.transfer_bound, ct.std_error_given_cover);
  return {pass, buf};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "exact clique pair law", 1, clique_pair_law},
      {2, "coverage probability", 5, coverage},
      {3, "explicit cover", 1, explicit_cover},
      {4, "f-analysis", 5, f_analysis_all},
      {5, "hypergeometric tail bound", 60, tail_bound},
      {6, "domination invariant", 30, domination},
      {7, "exact vs empirical overlap law", 30, exact_vs_empirical},
      {8, "numerics", 5, numerics},
      {9, "regime scanner sanity", 60, regime_scan},
      {10, "conditional transfer", 10, conditional_transfer_check},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& ex) {
      o = {false, std::string("exception: ") + ex.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs <= c.budget_s;
    const bool pass = o.pass && in_time;
    failures += !pass;
    std::printf("[%s] %d %s (%.2f s of %.0f s) %s%s\n", pass ? "PASS" : "FAIL", c.id, c.name, secs, c.budget_s,
                o.detail.c_str(), in_time ? "" : " [over time budget]");
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
