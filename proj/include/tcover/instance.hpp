#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tcover/big.hpp"
#include "tcover/log_real.hpp"
#include "tcover/subset.hpp"

namespace tcover {

class GroundSet {
 public:
  explicit GroundSet(unsigned n);
  unsigned size() const { return n_; }
  Subset all() const { return Subset::full(n_); }
  bool holds(Subset s) const { return s.is_subset_of(all()); }

 private:
  unsigned n_;
};

/// The numbers the analytic checkers need. Clique instances far beyond any
/// materializable size are described by a shape alone.
struct InstanceShape {
  std::uint64_t k = 0;
  double log_n = 0.0;
  double log_d = 0.0;
  double log_r = 0.0;

  double log_p() const { return (log_r - log_d) / static_cast<double>(k); }
};

/// A k-uniform hypergraph with the uniform weight g = 1/r on its edges.
class Instance {
 public:
  Instance(unsigned n, unsigned k, std::vector<Subset> edges, Rational r);

  const GroundSet& ground() const { return ground_; }
  unsigned n() const { return ground_.size(); }
  unsigned k() const { return k_; }
  std::size_t d() const { return edges_.size(); }
  const Rational& r() const { return r_; }
  const std::vector<Subset>& edges() const { return edges_; }

  double log_r() const { return log_of(r_); }
  InstanceShape shape() const;
  bool r_is_integer() const;

  /// Violations of ln n >= k >= 2, r <= d and, when L is given, r >= L^k.
  /// Desk-scale instances routinely break these; callers attach them to
  /// reports instead of failing.
  std::vector<std::string> assumption_warnings(std::optional<double> L = std::nullopt) const;

 private:
  GroundSet ground_;
  unsigned k_;
  std::vector<Subset> edges_;
  Rational r_;
};

/// w(g, q) = (d / r) q^k.
LogReal weight_g(const Instance& inst, double q);
Rational weight_g_exact(const Instance& inst, const Rational& q);

/// p = (r / d)^(1/k), the unique p with w(g, p) = 1. Throws EmptyUpset if r > d.
double solve_p(const Instance& inst);

/// r < L^k: the construction is unnecessary, G := E already works.
bool below_weight_threshold(const Instance& inst, double L);

/// Shared ceiling for formula-derived s and t: values within 1e-9 relative
/// of an integer are taken as that integer, so (10/2)^2 * 10 stays 250.
double ceil_tolerant(double x);

}  // namespace tcover
