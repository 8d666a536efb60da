#include "tcover/upset.hpp"

#include <map>
#include <vector>

#include "tcover/combinatorics.hpp"
#include "tcover/errors.hpp"

namespace tcover {

namespace {

// Smallest integer count c with c >= r.
std::uint64_t count_threshold(const Rational& r) {
  namespace mp = boost::multiprecision;
  BigInt c = mp::numerator(r) / mp::denominator(r);
  if (c * mp::denominator(r) < mp::numerator(r)) ++c;
  if (c > BigInt(UINT64_MAX)) return UINT64_MAX;
  return c.convert_to<std::uint64_t>();
}

}  // namespace

std::size_t edges_inside(const Instance& inst, Subset s) {
  std::size_t count = 0;
  for (Subset e : inst.edges()) count += e.is_subset_of(s) ? 1 : 0;
  return count;
}

bool upset_contains(const Instance& inst, Subset s) {
  return Rational(static_cast<unsigned long long>(edges_inside(inst, s))) >= inst.r();
}

UpsetSummary minimal_elements(const Instance& inst) {
  const unsigned n = inst.n();
  if (n > kMaxEnumerableGroundSize) {
    throw TooLarge("minimal_elements: n = " + std::to_string(n) + " exceeds the enumeration limit of " +
                   std::to_string(kMaxEnumerableGroundSize));
  }
  const std::uint64_t threshold = count_threshold(inst.r());
  const std::size_t total = std::size_t{1} << n;

  // counts[S] = number of edges inside S, via a subset-sum transform
  std::vector<std::uint32_t> counts(total, 0);
  for (Subset e : inst.edges()) ++counts[e.bits()];
  for (unsigned bit = 0; bit < n; ++bit) {
    const std::size_t mask = std::size_t{1} << bit;
    for (std::size_t s = 0; s < total; ++s) {
      if (s & mask) counts[s] += counts[s ^ mask];
    }
  }

  std::vector<Subset> minimal;
  for (std::size_t s = 0; s < total; ++s) {
    if (counts[s] < threshold) continue;
    bool is_minimal = true;
    for (std::size_t rest = s; rest != 0; rest &= rest - 1) {
      const std::size_t lowest = rest & (~rest + 1);
      if (counts[s ^ lowest] >= threshold) {
        is_minimal = false;
        break;
      }
    }
    if (is_minimal) minimal.emplace_back(static_cast<std::uint64_t>(s));
  }
  return UpsetSummary{SubsetFamily(std::move(minimal))};
}

bool covers(const SubsetFamily& family, const UpsetSummary& summary) {
  for (Subset s : summary.minimal) {
    if (!family.generates(s)) return false;
  }
  return true;
}

bool covers(const SubsetFamily& family, const Instance& inst) { return covers(family, minimal_elements(inst)); }

LogReal weight_family(const SubsetFamily& family, double q) {
  if (q < 0.0 || q > 1.0) throw std::domain_error("weight_family: q must lie in [0,1]");
  std::map<unsigned, std::size_t> by_size;
  for (Subset s : family) ++by_size[s.size()];
  std::vector<LogReal> terms;
  terms.reserve(by_size.size());
  const LogReal base = LogReal::from_double(q);
  for (auto [size, count] : by_size) {
    terms.push_back(LogReal::from_double(static_cast<double>(count)) * base.pow(size));
  }
  return log_sum_exp(terms);
}

Rational weight_family_exact(const SubsetFamily& family, const Rational& q) {
  std::map<unsigned, std::size_t> by_size;
  for (Subset s : family) ++by_size[s.size()];
  Rational total(0);
  for (auto [size, count] : by_size) {
    Rational power(1);
    for (unsigned i = 0; i < size; ++i) power *= q;
    total += power * static_cast<unsigned long long>(count);
  }
  return total;
}

std::uint64_t sperner_bound(unsigned n) { return binomial_u64(n, n / 2); }

}  // namespace tcover
