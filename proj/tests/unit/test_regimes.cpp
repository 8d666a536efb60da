#include <doctest.h>

#include <cmath>
#include <numbers>

#include "tcover/errors.hpp"
#include "tcover/regimes.hpp"

using namespace tcover;

namespace {

constexpr double kE = std::numbers::e;

bool has_note(const ConditionReport& r, const std::string& prefix) {
  for (const auto& n : r.notes) {
    if (n.rfind(prefix, 0) == 0) return true;
  }
  return false;
}

std::size_t count_prefixed(const ConditionReport& r, const std::string& prefix) {
  std::size_t c = 0;
  for (const auto& p : r.points) {
    if (p.label.rfind(prefix, 0) == 0) ++c;
  }
  return c;
}

}  // namespace

TEST_CASE("general many-unions threshold") {
  const CliqueParams p{1'000'000, 3, 2};
  // 9 ln 2 + 9 + 6 ln ln 10^6
  CHECK(log_threshold_52(p, RegimeCase::general) == doctest::Approx(30.993076111895572).epsilon(1e-12));
  const double L = 4 * kE;
  const auto above = regime_check_52(p, LogReal::from_log(32.0), L, RegimeCase::general);
  CHECK(above.id == "regime-unions-general");
  CHECK(above.overall() == Verdict::pass);
  CHECK(count_prefixed(above, "pointwise: ") > 0);
  CHECK_FALSE(has_note(above, "regime empty"));
  const auto below = regime_check_52(p, LogReal::from_log(30.0), L, RegimeCase::general);
  CHECK(below.overall() == Verdict::fail);
  CHECK(below.find("2^(3k) e^(3k) ln^(2kt)(nt) <= r", 0)->verdict == Verdict::fail);
  // wrong L alone fails the hypothesis
  CHECK(regime_check_52(p, LogReal::from_log(32.0), 2 * kE, RegimeCase::general).find("4e <= L", 0)->verdict ==
        Verdict::fail);
}

TEST_CASE("many-unions regime is empty for small nt") {
  const CliqueParams p{10, 3, 2};
  const auto report = regime_check_52(p, LogReal::from_double(120.0), 4 * kE, RegimeCase::general);
  CHECK(has_note(report, "regime empty"));
  CHECK(report.overall() == Verdict::fail);
}

TEST_CASE("succinct threshold") {
  const CliqueParams p{10'000, 4, 3};
  // 3 ln ln(e 10^4 / 3) + ln 10^4 + 12
  CHECK(log_threshold_52(p, RegimeCase::succinct) == doctest::Approx(27.839027524264242).epsilon(1e-12));
  const auto report = regime_check_52(p, LogReal::from_log(29.0), 4 * kE, RegimeCase::succinct);
  CHECK(report.id == "regime-unions-succinct");
  CHECK(report.find("(ln(e nt/l))^l nt e^(3(l+1)) <= r", 0)->verdict == Verdict::pass);
  CHECK(report.find("r <= d", 0)->verdict == Verdict::pass);
  CHECK(regime_check_52(p, LogReal::from_log(27.0), 4 * kE, RegimeCase::succinct)
            .find("(ln(e nt/l))^l nt e^(3(l+1)) <= r", 0)
            ->verdict == Verdict::fail);
  CHECK_THROWS_AS(regime_check_52({10'000, 5, 3}, LogReal::from_log(29.0), 4 * kE, RegimeCase::succinct),
                  ValidationError);
}

TEST_CASE("pairwise regime") {
  CHECK_THROWS_AS(regime_check_53({5, 3, 2}, LogReal::zero(), 2 * kE), ValidationError);
  CHECK_THROWS_AS(regime_check_52({5, 3, 2}, LogReal::from_double(0.5), 4 * kE, RegimeCase::general),
                  ValidationError);

  const CliqueParams big{1000, 4, 2};
  CHECK(std::exp(log_bound_53(big, 2 * kE)) == doctest::Approx(46.5334775380671).epsilon(1e-10));
  const auto ok = regime_check_53(big, LogReal::from_double(3.0), 2 * kE);
  CHECK(ok.id == "regime-pairwise");
  CHECK(ok.overall() == Verdict::pass);
  CHECK(count_prefixed(ok, "pairwise: ") == 5);

  const CliqueParams small{5, 3, 2};
  CHECK(std::exp(log_bound_53(small, 2 * kE)) == doctest::Approx(0.8147561464869016).epsilon(1e-10));
  const auto bad = regime_check_53(small, LogReal::from_double(2.0), 2 * kE);
  CHECK(bad.find("r <= sqrt(L^k nt^(l-1) / (e^(2kt) kt^(l-1)))", 0)->verdict == Verdict::fail);
  CHECK(bad.overall() == Verdict::fail);
}

TEST_CASE("coverage scan") {
  const double big_L = std::pow(2.0, 12) * std::exp(16.0);
  const RegimeScan vac = regime_coverage_scan({1000, 3, 2}, big_L, 16);
  CHECK(vac.vacuous);
  CHECK(vac.rows.empty());
  CHECK_FALSE(vac.gap);
  CHECK(vac.bounds_overlap);
  CHECK(vac.gap_free());

  const RegimeScan low = regime_coverage_scan({1000, 3, 2}, 1.01, 16);
  CHECK_FALSE(low.vacuous);
  CHECK(low.gap);
  CHECK_FALSE(low.gap_free());
  REQUIRE(low.rows.size() == 16);
  for (const auto& row : low.rows) CHECK_FALSE(row.covered);
  CHECK(low.rows.front().log_r == doctest::Approx(3 * std::log(1.01)));
  CHECK(low.rows.back().log_r == doctest::Approx(low.log_r_hi));

  // L = 4e at nt = 10^6: r between L^k and the general threshold sits above B
  const RegimeScan mid = regime_coverage_scan({1'000'000, 3, 2}, 4 * kE, 64);
  CHECK(mid.gap);
  bool some_uncovered = false;
  bool some_covered = false;
  for (const auto& row : mid.rows) (row.covered ? some_covered : some_uncovered) = true;
  CHECK(some_uncovered);
  CHECK(some_covered);

  CHECK_THROWS_AS(regime_coverage_scan({1000, 3, 2}, 1.0, 4), ValidationError);
}

TEST_CASE("log grid") {
  CHECK(log_grid(1000, 1'000'000, 1) == std::vector<std::int64_t>{1000, 10'000, 100'000, 1'000'000});
  const auto g = log_grid(1000, 5000, 4);
  CHECK(g.front() == 1000);
  CHECK(g.back() == 5000);
  for (std::size_t i = 1; i < g.size(); ++i) CHECK(g[i] > g[i - 1]);
  CHECK(log_grid(7, 7, 3) == std::vector<std::int64_t>{7});
  CHECK_THROWS_AS(log_grid(0, 10, 1), ValidationError);
  CHECK_THROWS_AS(log_grid(10, 1, 1), ValidationError);
}

TEST_CASE("grid scan") {
  const double big_L = std::pow(2.0, 12) * std::exp(16.0);
  const auto grid = log_grid(1000, 1'000'000, 2);
  const RegimeGridScan hi = regime_grid_scan(grid, 3, 2, big_L, 8);
  REQUIRE(hi.scans.size() == grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) CHECK(hi.scans[i].params.nt == grid[i]);
  REQUIRE(hi.smallest_gap_free_nt.has_value());
  CHECK(*hi.smallest_gap_free_nt == 1000);
  CHECK_FALSE(hi.any_gap);

  const RegimeGridScan lo = regime_grid_scan(grid, 3, 2, 1.01, 8);
  CHECK(lo.any_gap);
  CHECK_FALSE(lo.smallest_gap_free_nt.has_value());
}
