#include "tcover/cliques.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "tcover/combinatorics.hpp"
#include "tcover/errors.hpp"
#include "tcover/hypergeom.hpp"

namespace tcover {

namespace {

constexpr std::uint64_t kMaxLawSize = std::uint64_t{1} << 20;

// Next integer with the same popcount.
std::uint64_t gosper_next(std::uint64_t x) {
  const std::uint64_t c = x & -x;
  const std::uint64_t r = x + c;
  return (((r ^ x) >> 2) / c) | r;
}

std::vector<std::uint64_t> masks_of_size(unsigned width, unsigned size) {
  std::vector<std::uint64_t> out;
  if (size == 0 || size > width) return out;
  const std::uint64_t limit = width >= 64 ? 0 : std::uint64_t{1} << width;
  std::uint64_t x = (std::uint64_t{1} << size) - 1;
  while (true) {
    out.push_back(x);
    if (x >> (width - size) == (std::uint64_t{1} << size) - 1) break;
    x = gosper_next(x);
    if (limit && x >= limit) break;
  }
  return out;
}

bool contains_all(const std::vector<std::int64_t>& sorted, const std::vector<std::int64_t>& items) {
  return std::includes(sorted.begin(), sorted.end(), items.begin(), items.end());
}

}  // namespace

void CliqueParams::validate() const {
  if (!(nt > kt && kt > l && l >= 2)) {
    throw ValidationError("clique parameters need nt > kt > l >= 2, got (" + std::to_string(nt) + ", " +
                          std::to_string(kt) + ", " + std::to_string(l) + ")");
  }
  try {
    (void)binomial_u64(static_cast<std::uint64_t>(kt), static_cast<std::uint64_t>(l));
  } catch (const std::overflow_error&) {
    throw TooLarge("k = C(kt, l) exceeds 64 bits");
  }
}

std::uint64_t CliqueParams::k() const {
  return binomial_u64(static_cast<std::uint64_t>(kt), static_cast<std::uint64_t>(l));
}
BigInt CliqueParams::n() const { return binomial(nt, l); }
BigInt CliqueParams::d() const { return binomial(nt, kt); }
double CliqueParams::log_n() const { return log_binomial(nt, l).log_abs(); }
double CliqueParams::log_d() const { return log_binomial(nt, kt).log_abs(); }

InstanceShape CliqueParams::shape(double log_r) const {
  return InstanceShape{k(), log_n(), log_d(), log_r};
}

std::vector<std::string> CliqueParams::warnings() const {
  std::vector<std::string> out;
  if (static_cast<double>(k()) > log_n()) {
    std::ostringstream os;
    os << "k = C(kt,l) = " << k() << " exceeds ln C(nt,l) = " << log_n();
    out.push_back(os.str());
  }
  return out;
}

std::uint64_t colex_rank(const std::vector<std::int64_t>& members) {
  std::vector<std::int64_t> sorted(members);
  std::sort(sorted.begin(), sorted.end());
  std::uint64_t rank = 0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    rank += binomial_u64(static_cast<std::uint64_t>(sorted[i]), i + 1);
  }
  return rank;
}

Instance build_clique_instance(const CliqueParams& params, const Rational& r) {
  params.validate();
  const BigInt n_big = params.n();
  if (n_big > BigInt(kMaxGroundSize)) {
    throw TooLarge("clique instance has C(nt,l) = " + n_big.str() + " > 64 ground elements");
  }
  const auto nt = static_cast<unsigned>(params.nt);
  // Gosper's order over vertex masks is colex order, so position = colex rank.
  const auto ground = masks_of_size(nt, static_cast<unsigned>(params.l));
  const auto cliques = masks_of_size(nt, static_cast<unsigned>(params.kt));
  std::vector<Subset> edges;
  edges.reserve(cliques.size());
  for (std::uint64_t t : cliques) {
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < ground.size(); ++i) {
      if ((ground[i] & ~t) == 0) bits |= std::uint64_t{1} << i;
    }
    edges.emplace_back(bits);
  }
  return Instance(static_cast<unsigned>(ground.size()), static_cast<unsigned>(params.k()), std::move(edges), r);
}

std::int64_t ytilde_map(std::uint64_t y, std::int64_t l) {
  if (y == 0) return 0;
  std::int64_t yt = l;
  while (binomial_u64(static_cast<std::uint64_t>(yt), static_cast<std::uint64_t>(l)) < y) ++yt;
  return yt;
}

OverlapLaw exact_pair_law_cliques(const CliqueParams& params) {
  params.validate();
  const std::uint64_t k = params.k();
  if (k > kMaxLawSize) throw TooLarge("exact_pair_law_cliques: k exceeds 2^20");
  const HypergeomLaw law = hypergeom(params.nt, params.kt, params.kt);
  std::vector<Rational> probs(k + 1, Rational(0));
  for (std::int64_t yt = law.min_value(); yt <= law.max_value(); ++yt) {
    const std::uint64_t y =
        yt < params.l ? 0 : binomial_u64(static_cast<std::uint64_t>(yt), static_cast<std::uint64_t>(params.l));
    probs[y] += law.pmf(yt);
  }
  return OverlapLaw::exact(std::move(probs));
}

std::vector<VertexChainState> vertex_union_chain(const CliqueParams& params, unsigned s) {
  params.validate();
  if (s < 1) throw ValidationError("vertex_union_chain: s must be >= 1");
  std::vector<VertexChainState> out;
  VertexChainState first;
  first.step = 1;
  first.union_size_pmf[params.kt] = 1;
  first.overlap_pmf[0] = 1;
  out.push_back(first);
  std::map<std::int64_t, HypergeomLaw> cache;
  for (unsigned j = 2; j <= s; ++j) {
    VertexChainState next;
    next.step = j;
    for (const auto& [m, pm] : out.back().union_size_pmf) {
      auto it = cache.find(m);
      if (it == cache.end()) it = cache.emplace(m, hypergeom(params.nt, m, params.kt)).first;
      const HypergeomLaw& law = it->second;
      for (std::int64_t yt = law.min_value(); yt <= law.max_value(); ++yt) {
        const Rational mass = pm * law.pmf(yt);
        if (mass == 0) continue;
        next.overlap_pmf[yt] += mass;
        next.union_size_pmf[m + params.kt - yt] += mass;
      }
    }
    out.push_back(std::move(next));
  }
  return out;
}

LogReal specialized_tail_bound(std::int64_t nt, std::int64_t kt, std::int64_t yt) {
  const double ln_n = std::log(static_cast<double>(nt));
  const double base = std::log(4.0 * std::numbers::e * static_cast<double>(kt)) + 2.0 * std::log(ln_n) -
                      std::log(static_cast<double>(nt));
  return LogReal::from_log(base * static_cast<double>(yt));
}

TailCheck tail_bound_check(std::int64_t nt, std::int64_t mt, std::int64_t kt, std::int64_t yt) {
  if (mt < 0 || mt > nt) throw ValidationError("tail_bound_check: need 0 <= mt <= nt");
  if (yt < 0) throw ValidationError("tail_bound_check: yt must be >= 0");
  TailCheck out;
  out.exact = hypergeom(nt, mt, kt).tail(yt);
  if (yt == 0) {
    out.bound = LogReal::one();
  } else if (mt == 0) {
    out.bound = LogReal::zero();
  } else {
    const double y = static_cast<double>(yt);
    out.bound = LogReal::from_log(y * (std::log(static_cast<double>(mt) / static_cast<double>(nt)) + 1.0 +
                                       std::log(static_cast<double>(kt) / y)));
  }
  if (out.exact == 0) {
    out.pass = true;
  } else if (out.bound.is_zero()) {
    out.pass = false;
  } else {
    out.pass = log_of(out.exact) <= out.bound.log_abs() + 1e-12;
  }
  return out;
}

TailCheck tail_bound_check(const CliqueParams& params, std::int64_t mt, std::int64_t yt) {
  params.validate();
  return tail_bound_check(params.nt, mt, params.kt, yt);
}

FAnalysis f_analysis(std::int64_t kt, std::int64_t l) {
  if (!(kt > l && l >= 2)) throw ValidationError("f_analysis: need kt > l >= 2");
  FAnalysis out;
  out.kt = kt;
  out.l = l;
  const BigInt ck = binomial(kt, l);
  for (std::int64_t yt = l; yt <= kt - 1; ++yt) {
    out.values.emplace_back(yt, Rational(yt) - Rational(BigInt(kt) * binomial(yt, l), ck));
  }
  out.f_l_at_least = out.values.front().second >= Rational(l - 1);
  out.f_last_equal = out.values.back().second == Rational(l - 1);
  out.concave = true;
  for (std::size_t i = 1; i + 1 < out.values.size(); ++i) {
    const Rational second = out.values[i + 1].second - 2 * out.values[i].second + out.values[i - 1].second;
    if (second > 0) out.concave = false;
  }
  return out;
}

CliqueTrace sample_clique_trace(const CliqueParams& params, unsigned s, Rng& rng) {
  params.validate();
  if (s < 1) throw ValidationError("sample_clique_trace: s must be >= 1");
  const std::uint64_t k = params.k();
  if (k > kMaxLawSize) throw TooLarge("sample_clique_trace: k exceeds 2^20");
  const auto kt = static_cast<std::size_t>(params.kt);
  const auto l = static_cast<std::size_t>(params.l);
  std::vector<std::vector<std::int64_t>> cliques;
  std::vector<std::int64_t> uni;
  CliqueTrace trace;
  for (unsigned j = 0; j < s; ++j) {
    // Floyd's sampling of kt distinct vertices.
    std::vector<std::int64_t> t;
    t.reserve(kt);
    for (std::int64_t v = params.nt - params.kt; v < params.nt; ++v) {
      const auto pick = static_cast<std::int64_t>(uniform_index(rng, static_cast<std::size_t>(v) + 1));
      t.push_back(std::find(t.begin(), t.end(), pick) == t.end() ? pick : v);
    }
    std::sort(t.begin(), t.end());

    std::int64_t yt = 0;
    for (auto v : t) yt += std::binary_search(uni.begin(), uni.end(), v);
    std::uint64_t y = 0;
    if (!cliques.empty()) {
      // count l-subsets of t lying inside some earlier clique
      std::vector<std::size_t> idx(l);
      for (std::size_t i = 0; i < l; ++i) idx[i] = i;
      std::vector<std::int64_t> sub(l);
      while (true) {
        for (std::size_t i = 0; i < l; ++i) sub[i] = t[idx[i]];
        for (const auto& c : cliques) {
          if (contains_all(c, sub)) {
            ++y;
            break;
          }
        }
        std::size_t i = l;
        while (i > 0 && idx[i - 1] == kt - l + i - 1) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t q = i; q < l; ++q) idx[q] = idx[q - 1] + 1;
      }
    }
    std::vector<std::int64_t> merged;
    std::set_union(uni.begin(), uni.end(), t.begin(), t.end(), std::back_inserter(merged));
    uni = std::move(merged);
    trace.y.push_back(y);
    trace.yt.push_back(yt);
    trace.mt.push_back(static_cast<std::int64_t>(uni.size()));
    cliques.push_back(std::move(t));
  }
  return trace;
}

}  // namespace tcover
