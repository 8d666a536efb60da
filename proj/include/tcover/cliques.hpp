#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tcover/big.hpp"
#include "tcover/instance.hpp"
#include "tcover/log_real.hpp"
#include "tcover/overlap_law.hpp"
#include "tcover/rng.hpp"

namespace tcover {

/// Clique hypergraph: ground set = l-subsets of [nt], one edge per
/// kt-subset T holding all l-subsets of T. n = C(nt,l), k = C(kt,l), d = C(nt,kt).
struct CliqueParams {
  std::int64_t nt = 0;
  std::int64_t kt = 0;
  std::int64_t l = 0;

  /// nt > kt > l >= 2, and k must fit 64 bits.
  void validate() const;

  std::uint64_t k() const;
  BigInt n() const;
  BigInt d() const;
  double log_n() const;
  double log_d() const;
  InstanceShape shape(double log_r) const;

  /// k <= ln n, reported rather than enforced.
  std::vector<std::string> warnings() const;
};

/// Position of an l-subset of vertices in colex order, sum_i C(c_i, i) over
/// its members c_1 < ... < c_l. Ground-set indices follow this order.
std::uint64_t colex_rank(const std::vector<std::int64_t>& members);

/// Throws TooLarge when C(nt, l) > 64.
Instance build_clique_instance(const CliqueParams& params, const Rational& r);

/// Smallest yt with C(yt, l) >= y; 0 for y = 0.
std::int64_t ytilde_map(std::uint64_t y, std::int64_t l);

/// Law of Y_2 = C(|T n T'|, l) for independent uniform kt-sets; overlaps
/// below l contribute to 0. Values not of the form C(yt, l) carry zero mass.
OverlapLaw exact_pair_law_cliques(const CliqueParams& params);

struct VertexChainState {
  unsigned step = 0;
  /// Law of |T_1 u ... u T_step|.
  std::map<std::int64_t, Rational> union_size_pmf;
  /// Law of the vertex overlap |T_step n (T_1 u ... u T_{step-1})|.
  std::map<std::int64_t, Rational> overlap_pmf;
};

/// Exact forward recursion: given the union size m, the next overlap is
/// hypergeometric(nt, m, kt) whatever the union's shape.
std::vector<VertexChainState> vertex_union_chain(const CliqueParams& params, unsigned s);

struct TailCheck {
  Rational exact;
  LogReal bound;
  bool pass = false;
};

/// P(Yt >= yt) for Yt ~ hypergeometric(nt, mt, kt) against (mt/nt)^yt (e kt/yt)^yt.
TailCheck tail_bound_check(std::int64_t nt, std::int64_t mt, std::int64_t kt, std::int64_t yt);
TailCheck tail_bound_check(const CliqueParams& params, std::int64_t mt, std::int64_t yt);

/// (4 e kt ln^2(nt) / nt)^yt, the bound after substituting mt <= 4 ln^2(nt).
LogReal specialized_tail_bound(std::int64_t nt, std::int64_t kt, std::int64_t yt);

struct FAnalysis {
  std::int64_t kt = 0;
  std::int64_t l = 0;
  /// f(yt) = yt - kt C(yt,l)/C(kt,l) for yt = l..kt-1.
  std::vector<std::pair<std::int64_t, Rational>> values;
  bool f_l_at_least = false;   // f(l) >= l-1
  bool f_last_equal = false;   // f(kt-1) = l-1
  bool concave = false;        // second differences <= 0

  bool ok() const { return f_l_at_least && f_last_equal && concave; }
};

FAnalysis f_analysis(std::int64_t kt, std::int64_t l);

struct CliqueTrace {
  std::vector<std::uint64_t> y;    // Y_j, in l-subsets
  std::vector<std::int64_t> yt;    // vertex overlaps
  std::vector<std::int64_t> mt;    // vertex union sizes after step j
};

/// Draws s uniform kt-sets of [nt] and records both overlap sequences.
/// Works without materializing the instance, so nt may be large.
CliqueTrace sample_clique_trace(const CliqueParams& params, unsigned s, Rng& rng);

}  // namespace tcover
