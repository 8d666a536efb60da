#include "tcover/explicit_cover.hpp"

#include <cmath>

#include "tcover/combinatorics.hpp"
#include "tcover/conditions.hpp"
#include "tcover/errors.hpp"
#include "tcover/upset.hpp"

namespace tcover {

namespace {

// All unions of `r` pairwise disjoint edges, by backtracking over index
// combinations in increasing order.
void disjoint_unions(const std::vector<Subset>& edges, std::size_t start, std::uint64_t left, Subset acc,
                     std::vector<Subset>& out) {
  if (left == 0) {
    out.push_back(acc);
    return;
  }
  for (std::size_t i = start; i + left <= edges.size(); ++i) {
    if (edges[i].intersects(acc)) continue;
    disjoint_unions(edges, i + 1, left - 1, acc | edges[i], out);
  }
}

}  // namespace

SubsetFamily ExplicitCover::combined() const {
  SubsetFamily out;
  if (g0) out = out | *g0;
  if (g1) out = out | *g1;
  return out;
}

ExplicitCover build_explicit_cover(const Instance& inst) {
  if (!inst.r_is_integer()) throw ValidationError("explicit cover needs an integer r");
  const auto& edges = inst.edges();
  const std::size_t d = inst.d();
  const unsigned k = inst.k();
  ExplicitCover cover;

  if (d <= kMaxG0Edges) {
    std::vector<Subset> g0;
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = i + 1; j < d; ++j) {
        const unsigned y = overlap(edges[i], edges[j]);
        if (y > 0 && y < k) g0.push_back(edges[i] | edges[j]);
      }
    }
    cover.g0 = SubsetFamily(std::move(g0));
  }

  const BigInt r = numerator(inst.r());
  if (r > BigInt(d)) {
    cover.g1 = SubsetFamily();
  } else if (binomial(static_cast<std::int64_t>(d), static_cast<std::int64_t>(r)) <=
             BigInt(kMaxDisjointTupleEnumeration)) {
    std::vector<Subset> g1;
    disjoint_unions(edges, 0, static_cast<std::uint64_t>(r), Subset(), g1);
    cover.g1 = SubsetFamily(std::move(g1));
  }
  return cover;
}

ExplicitCoverWeights explicit_cover_weights(const Instance& inst, double L) {
  if (!(L > 1.0)) throw ValidationError("explicit_cover_weights: L must be > 1");
  const double p = solve_p(inst);
  const double q = p / L;
  const ExplicitCover cover = build_explicit_cover(inst);
  const unsigned k = inst.k();
  const std::int64_t r = static_cast<std::int64_t>(numerator(inst.r()));

  ExplicitCoverWeights out;
  out.q_upper = rational_upper_bound(q);
  out.report.id = "explicit-cover";
  for (auto& w : inst.assumption_warnings(L)) out.report.warnings.push_back(std::move(w));
  if (L < 2.0 * std::exp(1.0)) out.report.warnings.push_back("L < 2e: hypothesis L >= 2e not met");

  const LogReal log_q = LogReal::from_double(q);
  if (cover.g0) {
    out.w0 = weight_family(*cover.g0, q);
    out.w0_materialized = true;
    out.w0_exact_upper = weight_family_exact(*cover.g0, out.q_upper);
  } else {
    const OverlapLaw law = pair_overlap_law(inst);
    const LogReal d2 = LogReal::from(BigInt(inst.d())).pow(2.0);
    for (unsigned y = 1; y < k; ++y) {
      out.w0 += law.log_prob(y) * d2 * log_q.pow(static_cast<double>(2 * k - y));
    }
    out.report.notes.push_back("w(G0) from sum_y P(Y2=y) d^2 (p/L)^(2k-y)");
  }
  if (cover.g1) {
    out.w1 = weight_family(*cover.g1, q);
    out.w1_materialized = true;
    out.w1_exact_upper = weight_family_exact(*cover.g1, out.q_upper);
  } else {
    out.w1 = log_binomial(static_cast<std::int64_t>(inst.d()), r) * log_q.pow(static_cast<double>(r) * k);
    out.report.notes.push_back("w(G1) from C(d, r) (p/L)^(rk)");
  }
  out.total = out.w0 + out.w1;

  const LogReal half = LogReal::from_double(0.5);
  out.report.add(evaluate_point("w(G0, p/L) <= 1/2", 0, out.w0, half));
  out.report.add(evaluate_point("w(G1, p/L) <= 1/2", 1, out.w1, half));
  ConditionPoint total = evaluate_point("w(G0 u G1, p/L) <= 1", 2, out.total, LogReal::one());
  total.informational = true;
  out.report.add(std::move(total));
  ConditionPoint closed = evaluate_point("e^r / L^(rk) <= 1/2", 3,
                                         LogReal::from_log(static_cast<double>(r) -
                                                           static_cast<double>(r) * k * std::log(L)),
                                         half);
  closed.informational = true;
  out.report.add(std::move(closed));
  return out;
}

}  // namespace tcover
