#include "tcover/instance.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "tcover/errors.hpp"

namespace tcover {

GroundSet::GroundSet(unsigned n) : n_(n) {
  if (n < 1) throw ValidationError("ground set must be nonempty");
  if (n > kMaxGroundSize) {
    throw TooLarge("ground set of " + std::to_string(n) + " elements exceeds the 64-element limit");
  }
}

Instance::Instance(unsigned n, unsigned k, std::vector<Subset> edges, Rational r)
    : ground_(n), k_(k), edges_(std::move(edges)), r_(std::move(r)) {
  if (k_ < 1 || k_ > n) throw ValidationError("edge size k must satisfy 1 <= k <= n");
  if (edges_.empty()) throw ValidationError("instance needs at least one edge (d >= 1)");
  if (r_ <= 0) throw ValidationError("weight denominator r must be positive");
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Subset e = edges_[i];
    if (!ground_.holds(e)) throw ValidationError("edge " + std::to_string(i) + " has an index >= n");
    if (e.size() != k_) {
      throw ValidationError("edge " + std::to_string(i) + " " + e.to_string() + " has " +
                            std::to_string(e.size()) + " members, expected k=" + std::to_string(k_));
    }
  }
  std::vector<Subset> sorted(edges_);
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw ValidationError("edges must be pairwise distinct");
  }
}

InstanceShape Instance::shape() const {
  return InstanceShape{k_, std::log(static_cast<double>(n())), std::log(static_cast<double>(d())), log_r()};
}

bool Instance::r_is_integer() const { return boost::multiprecision::denominator(r_) == 1; }

std::vector<std::string> Instance::assumption_warnings(std::optional<double> L) const {
  std::vector<std::string> out;
  const double ln_n = std::log(static_cast<double>(n()));
  if (k_ < 2) out.push_back("k = " + std::to_string(k_) + " < 2");
  if (static_cast<double>(k_) > ln_n) {
    std::ostringstream os;
    os << "k = " << k_ << " exceeds ln n = " << ln_n;
    out.push_back(os.str());
  }
  if (r_ > static_cast<unsigned long long>(d())) out.push_back("r > d: the upset is empty");
  if (L && below_weight_threshold(*this, *L)) {
    std::ostringstream os;
    os << "r < L^k = " << std::pow(*L, k_) << ": G := E already satisfies the target";
    out.push_back(os.str());
  }
  return out;
}

LogReal weight_g(const Instance& inst, double q) {
  if (q < 0.0 || q > 1.0) throw std::domain_error("weight_g: q must lie in [0,1]");
  const LogReal ratio = LogReal::from_log(std::log(static_cast<double>(inst.d())) - inst.log_r());
  return ratio * LogReal::from_double(q).pow(inst.k());
}

Rational weight_g_exact(const Instance& inst, const Rational& q) {
  Rational power(1);
  for (unsigned i = 0; i < inst.k(); ++i) power *= q;
  return Rational(static_cast<unsigned long long>(inst.d())) / inst.r() * power;
}

double solve_p(const Instance& inst) {
  if (inst.r() > static_cast<unsigned long long>(inst.d())) {
    throw EmptyUpset("r > d: <g> is empty, no p satisfies w(g,p) = 1");
  }
  return std::exp(inst.shape().log_p());
}

bool below_weight_threshold(const Instance& inst, double L) {
  return inst.log_r() < static_cast<double>(inst.k()) * std::log(L);
}

double ceil_tolerant(double x) {
  const double nearest = std::round(x);
  if (std::fabs(x - nearest) <= 1e-9 * std::max(1.0, std::fabs(x))) return nearest;
  return std::ceil(x);
}

}  // namespace tcover
