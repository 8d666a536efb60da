#pragma once

#include <cstdint>

#include "tcover/family.hpp"
#include "tcover/instance.hpp"

namespace tcover {

inline constexpr unsigned kMaxEnumerableGroundSize = 24;

struct UpsetSummary {
  SubsetFamily minimal;
  std::size_t m() const { return minimal.size(); }
};

/// S is in <g> iff at least r edges lie inside S (exact rational compare).
bool upset_contains(const Instance& inst, Subset s);

/// Number of edges inside s.
std::size_t edges_inside(const Instance& inst, Subset s);

/// Enumerates all 2^n subsets. Throws TooLarge for n > 24.
UpsetSummary minimal_elements(const Instance& inst);

/// <g> is a subset of <G>: every minimal element of <g> contains a member of G.
bool covers(const SubsetFamily& family, const UpsetSummary& summary);
bool covers(const SubsetFamily& family, const Instance& inst);

/// w(G, q) = sum over members of q^|S|.
LogReal weight_family(const SubsetFamily& family, double q);
Rational weight_family_exact(const SubsetFamily& family, const Rational& q);

/// C(n, floor(n/2)).
std::uint64_t sperner_bound(unsigned n);

}  // namespace tcover
