#pragma once

#include <vector>

#include "tcover/cliques.hpp"
#include "tcover/instance.hpp"
#include "tcover/upset.hpp"

namespace fixtures {

// 4-cycle on {0,1,2,3}, r = 2.
inline tcover::Instance instance_a(tcover::Rational r = 2) {
  using tcover::Subset;
  return tcover::Instance(4, 2, {Subset{0, 1}, Subset{1, 2}, Subset{2, 3}, Subset{0, 3}}, r);
}

// Triangles of K5 over its 10 vertex pairs.
inline tcover::Instance instance_b(tcover::Rational r = 2) {
  return tcover::build_clique_instance(tcover::CliqueParams{5, 3, 2}, r);
}

// Minimal upset members by checking every subset and every proper subset.
inline std::vector<tcover::Subset> brute_minimal(const tcover::Instance& inst) {
  std::vector<tcover::Subset> out;
  const std::uint64_t full = std::uint64_t{1} << inst.n();
  auto in_upset = [&](std::uint64_t s) {
    std::size_t inside = 0;
    for (auto e : inst.edges()) inside += (e.bits() & ~s) == 0;
    return tcover::Rational(inside) >= inst.r();
  };
  for (std::uint64_t s = 0; s < full; ++s) {
    if (!in_upset(s)) continue;
    bool minimal = true;
    for (std::uint64_t sub = (s - 1) & s; sub != s; sub = (sub - 1) & s) {
      if (in_upset(sub)) {
        minimal = false;
        break;
      }
      if (sub == 0) break;
    }
    if (minimal) out.emplace_back(s);
  }
  return out;
}

}  // namespace fixtures
