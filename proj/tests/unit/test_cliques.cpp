#include <doctest.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>

#include "fixtures.hpp"
#include "tcover/cliques.hpp"
#include "tcover/combinatorics.hpp"
#include "tcover/conditions.hpp"
#include "tcover/errors.hpp"

using namespace tcover;

namespace {

std::vector<std::uint64_t> vertex_sets(unsigned nt, unsigned size) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << nt); ++m) {
    if (static_cast<unsigned>(std::popcount(m)) == size) out.push_back(m);
  }
  return out;
}

}  // namespace

TEST_CASE("clique instance sizes") {
  const Instance b = build_clique_instance({5, 3, 2}, 2);
  CHECK(b.n() == 10);
  CHECK(b.k() == 3);
  CHECK(b.d() == 10);
  // pairs {0,1},{0,2},{1,2} hold colex ranks 0,1,2
  CHECK(b.edges().front() == Subset{0, 1, 2});
  const Instance c = build_clique_instance({6, 4, 2}, 1);
  CHECK(c.n() == 15);
  CHECK(c.k() == 6);
  CHECK(c.d() == 15);
  CHECK_THROWS_AS(build_clique_instance({3, 3, 2}, 1), ValidationError);
  CHECK_THROWS_AS(build_clique_instance({4, 3, 1}, 1), ValidationError);
  CHECK_THROWS_AS(build_clique_instance({12, 3, 2}, 1), TooLarge);
}

TEST_CASE("colex rank is a bijection onto 0..C(nt,l)-1") {
  for (std::int64_t nt = 3; nt <= 9; ++nt) {
    for (std::int64_t l = 1; l <= 4 && l <= nt; ++l) {
      std::vector<std::uint64_t> ranks;
      for (std::uint64_t m : vertex_sets(static_cast<unsigned>(nt), static_cast<unsigned>(l))) {
        std::vector<std::int64_t> members;
        for (unsigned v = 0; v < nt; ++v) {
          if ((m >> v) & 1) members.push_back(v);
        }
        ranks.push_back(colex_rank(members));
      }
      // increasing masks are colex order
      for (std::size_t i = 0; i < ranks.size(); ++i) CHECK(ranks[i] == i);
    }
  }
}

TEST_CASE("edges are the pair sets of the cliques") {
  const CliqueParams p{6, 3, 2};
  const Instance inst = build_clique_instance(p, 1);
  const auto pairs = vertex_sets(6, 2);
  const auto triples = vertex_sets(6, 3);
  REQUIRE(inst.edges().size() == triples.size());
  for (std::size_t i = 0; i < triples.size(); ++i) {
    Subset expected;
    for (std::size_t j = 0; j < pairs.size(); ++j) {
      if ((pairs[j] & ~triples[i]) == 0) expected = expected.with(static_cast<unsigned>(j));
    }
    CHECK(inst.edges()[i] == expected);
  }
}

TEST_CASE("ytilde map") {
  CHECK(ytilde_map(0, 2) == 0);
  CHECK(ytilde_map(1, 2) == 2);
  CHECK(ytilde_map(3, 2) == 3);
  CHECK(ytilde_map(4, 2) == 4);
  CHECK(ytilde_map(6, 2) == 4);
  CHECK(ytilde_map(7, 2) == 5);
  CHECK(ytilde_map(1, 3) == 3);
  CHECK(ytilde_map(5, 3) == 5);
}

TEST_CASE("exact clique pair law equals enumeration") {
  const OverlapLaw b = exact_pair_law_cliques({5, 3, 2});
  CHECK(b.exact_prob(0) == Rational(3, 10));
  CHECK(b.exact_prob(1) == Rational(6, 10));
  CHECK(b.exact_prob(2) == 0);
  CHECK(b.exact_prob(3) == Rational(1, 10));
  CHECK(b == pair_overlap_law(build_clique_instance({5, 3, 2}, 1)));

  const OverlapLaw c = exact_pair_law_cliques({6, 4, 2});
  CHECK(c.exact_prob(3) == Rational(8, 15));
  CHECK(c == pair_overlap_law(build_clique_instance({6, 4, 2}, 1)));
  CHECK(c.exact_total() == 1);

  CHECK(exact_pair_law_cliques({100, 3, 2}).prob(0) > 0.99);
}

TEST_CASE("two cliques overlap in exactly C(vertex overlap, l) pairs") {
  for (CliqueParams p : {CliqueParams{5, 3, 2}, CliqueParams{6, 4, 2}}) {
    const Instance inst = build_clique_instance(p, 1);
    const auto sets = vertex_sets(static_cast<unsigned>(p.nt), static_cast<unsigned>(p.kt));
    for (std::size_t i = 0; i < sets.size(); ++i) {
      for (std::size_t j = 0; j < sets.size(); ++j) {
        const auto yt = std::popcount(sets[i] & sets[j]);
        const std::uint64_t expected = yt < p.l ? 0 : binomial_u64(yt, p.l);
        CHECK(overlap(inst.edges()[i], inst.edges()[j]) == expected);
      }
    }
  }
}

TEST_CASE("vertex union chain") {
  const auto one = vertex_union_chain({7, 3, 2}, 1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].union_size_pmf.at(3) == 1);

  const auto two = vertex_union_chain({5, 3, 2}, 2);
  CHECK(two[1].overlap_pmf.at(1) == Rational(3, 10));
  CHECK(two[1].overlap_pmf.at(2) == Rational(6, 10));
  CHECK(two[1].overlap_pmf.at(3) == Rational(1, 10));
}

TEST_CASE("vertex union chain against exhaustive triples") {
  const CliqueParams p{6, 3, 2};
  const auto chain = vertex_union_chain(p, 3);
  const auto sets = vertex_sets(6, 3);
  std::map<std::int64_t, std::uint64_t> union_counts;
  std::map<std::int64_t, std::uint64_t> overlap_counts;
  for (auto a : sets) {
    for (auto b : sets) {
      for (auto c : sets) {
        ++union_counts[std::popcount(a | b | c)];
        ++overlap_counts[std::popcount(c & (a | b))];
      }
    }
  }
  const std::uint64_t total = sets.size() * sets.size() * sets.size();
  for (const auto& [m, count] : union_counts) CHECK(chain[2].union_size_pmf.at(m) == Rational(count, total));
  for (const auto& [y, count] : overlap_counts) CHECK(chain[2].overlap_pmf.at(y) == Rational(count, total));
  for (const auto& st : chain) {
    Rational sum = 0;
    for (const auto& [m, pm] : st.union_size_pmf) {
      CHECK(m >= p.kt);
      CHECK(m <= static_cast<std::int64_t>(st.step) * p.kt);
      sum += pm;
    }
    CHECK(sum == 1);
  }
}

TEST_CASE("vertex union chain against Monte Carlo") {
  const CliqueParams p{20, 3, 2};
  const auto chain = vertex_union_chain(p, 3);
  Rational mean_exact = 0;
  for (const auto& [m, pm] : chain[2].union_size_pmf) mean_exact += pm * m;
  Rational overlaps = 0;
  for (unsigned j = 1; j < 3; ++j) {
    for (const auto& [y, pm] : chain[j].overlap_pmf) overlaps += pm * y;
  }
  CHECK(mean_exact == 9 - overlaps);

  const std::uint64_t runs = 100'000;
  const auto traces = run_trials(runs, [&](std::uint64_t i) {
    Rng rng = make_rng(12, i);
    return sample_clique_trace(p, 3, rng);
  });
  double sum = 0.0;
  double sq = 0.0;
  std::map<std::int64_t, std::uint64_t> last;
  for (const auto& t : traces) {
    const double m = static_cast<double>(t.mt.back());
    sum += m;
    sq += m * m;
    ++last[t.yt[2]];
  }
  const double mean = sum / runs;
  const double se = std::sqrt((sq / runs - mean * mean) / runs);
  CHECK(std::fabs(mean - to_double(mean_exact)) <= 3 * se);
  for (const auto& [y, pm] : chain[2].overlap_pmf) {
    const double pe = to_double(pm);
    const double got = static_cast<double>(last[y]) / runs;
    CHECK(std::fabs(got - pe) <= 3 * std::sqrt(pe * (1 - pe) / runs) + 1e-12);
  }
}

TEST_CASE("clique traces respect the domination bound") {
  const CliqueParams p{20, 3, 2};
  std::uint64_t violations = 0;
  for (std::uint64_t i = 0; i < 5000; ++i) {
    Rng rng = make_rng(4, i);
    const CliqueTrace t = sample_clique_trace(p, 4, rng);
    CHECK(t.y[0] == 0);
    CHECK(t.yt[0] == 0);
    for (std::size_t j = 0; j < 4; ++j) {
      const std::uint64_t cap = t.yt[j] < p.l ? 0 : binomial_u64(t.yt[j], p.l);
      if (t.y[j] > cap) ++violations;
    }
    // with one earlier clique the bound is attained
    const std::uint64_t second = t.yt[1] < p.l ? 0 : binomial_u64(t.yt[1], p.l);
    CHECK(t.y[1] == second);
  }
  CHECK(violations == 0);
}

TEST_CASE("sampled clique overlaps follow the exact pair law") {
  const CliqueParams p{7, 3, 2};
  const OverlapLaw exact = exact_pair_law_cliques(p);
  std::vector<std::uint64_t> counts(4, 0);
  for (std::uint64_t i = 0; i < 50'000; ++i) {
    Rng rng = make_rng(31, i);
    ++counts[sample_clique_trace(p, 2, rng).y[1]];
  }
  CHECK(OverlapLaw::empirical(counts).total_variation(exact) < 0.02);
}

TEST_CASE("hypergeometric tail bound") {
  const TailCheck a = tail_bound_check(20, 6, 3, 2);
  CHECK(a.exact == Rational(230, 1140));
  CHECK(a.bound.to_double() == doctest::Approx(std::pow(6.0 / 20.0, 2) * std::pow(std::exp(1.0) * 3 / 2, 2)));
  CHECK(a.bound.to_double() == doctest::Approx(1.496).epsilon(1e-3));
  CHECK(a.pass);
  CHECK(tail_bound_check(50, 10, 4, 3).pass);
  const TailCheck z = tail_bound_check(50, 10, 4, 0);
  CHECK(z.exact == 1);
  CHECK(z.bound == LogReal::one());
  CHECK(z.pass);
  CHECK(tail_bound_check(10, 0, 3, 1).pass);
  CHECK_THROWS(tail_bound_check(10, 11, 3, 1));
}

TEST_CASE("tail bound holds on a small grid") {
  for (std::int64_t nt = 2; nt <= 30; ++nt) {
    for (std::int64_t kt = 1; kt <= std::min<std::int64_t>(8, nt); ++kt) {
      const std::int64_t top = std::min<std::int64_t>(nt, static_cast<std::int64_t>(std::ceil(4 * std::pow(std::log(nt), 2))));
      for (std::int64_t mt = 0; mt <= top; ++mt) {
        for (std::int64_t yt = 1; yt <= kt; ++yt) REQUIRE(tail_bound_check(nt, mt, kt, yt).pass);
      }
    }
  }
}

TEST_CASE("f analysis") {
  const FAnalysis f32 = f_analysis(3, 2);
  REQUIRE(f32.values.size() == 1);
  CHECK(f32.values[0].second == 1);
  const FAnalysis f52 = f_analysis(5, 2);
  CHECK(f52.values.front().second == Rational(3, 2));
  CHECK(f52.values.back().second == 1);
  CHECK(f52.ok());
  for (std::int64_t kt = 3; kt <= 30; ++kt) {
    for (std::int64_t l = 2; l < kt; ++l) CHECK(f_analysis(kt, l).ok());
  }
  CHECK_THROWS(f_analysis(2, 2));
}

TEST_CASE("clique parameters") {
  const CliqueParams p{1'000'000, 3, 2};
  CHECK(p.k() == 3);
  CHECK(p.log_d() == doctest::Approx(log_of(p.d())));
  CHECK(p.log_n() == doctest::Approx(std::log(1e6 * (1e6 - 1) / 2)));
  CHECK(p.warnings().empty());
  CHECK_FALSE(CliqueParams{6, 5, 2}.warnings().empty());
}
