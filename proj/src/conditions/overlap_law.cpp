#include "tcover/overlap_law.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "tcover/random_cover.hpp"

namespace tcover {

OverlapLaw OverlapLaw::exact(std::vector<Rational> probs) {
  OverlapLaw law;
  law.kind_ = Kind::exact;
  law.size_ = probs.size();
  law.exact_ = std::move(probs);
  return law;
}

OverlapLaw OverlapLaw::dominating(std::vector<Rational> probs) {
  OverlapLaw law = exact(std::move(probs));
  law.kind_ = Kind::dominating;
  return law;
}

OverlapLaw OverlapLaw::empirical(std::vector<std::uint64_t> counts) {
  OverlapLaw law;
  law.kind_ = Kind::empirical;
  law.size_ = counts.size();
  for (auto c : counts) law.samples_ += c;
  law.counts_ = std::move(counts);
  return law;
}

double OverlapLaw::prob(std::int64_t v) const {
  if (v < 0 || v > max_value()) return 0.0;
  const auto i = static_cast<std::size_t>(v);
  if (kind_ == Kind::empirical) {
    return samples_ ? static_cast<double>(counts_[i]) / static_cast<double>(samples_) : 0.0;
  }
  return to_double(exact_[i]);
}

LogReal OverlapLaw::log_prob(std::int64_t v) const {
  if (v < 0 || v > max_value()) return LogReal::zero();
  if (kind_ == Kind::empirical) return LogReal::from_double(prob(v));
  return LogReal::from(exact_[static_cast<std::size_t>(v)]);
}

Rational OverlapLaw::exact_prob(std::int64_t v) const {
  if (kind_ == Kind::empirical) throw std::logic_error("OverlapLaw: empirical law has no exact masses");
  if (v < 0 || v > max_value()) return Rational(0);
  return exact_[static_cast<std::size_t>(v)];
}

std::uint64_t OverlapLaw::count(std::int64_t v) const {
  if (kind_ != Kind::empirical || v < 0 || v > max_value()) return 0;
  return counts_[static_cast<std::size_t>(v)];
}

std::pair<double, double> OverlapLaw::interval(std::int64_t v, double z) const {
  if (kind_ != Kind::empirical) {
    const double p = prob(v);
    return {p, p};
  }
  const WilsonInterval w = wilson(count(v), samples_, z);
  return {w.low, w.high};
}

std::vector<std::int64_t> OverlapLaw::support() const {
  std::vector<std::int64_t> out;
  for (std::int64_t v = 0; v <= max_value(); ++v) {
    const bool positive = kind_ == Kind::empirical ? count(v) > 0 : exact_[static_cast<std::size_t>(v)] > 0;
    if (positive) out.push_back(v);
  }
  return out;
}

Rational OverlapLaw::exact_total() const {
  Rational total(0);
  for (const auto& p : exact_) total += p;
  return total;
}

double OverlapLaw::total_variation(const OverlapLaw& other) const {
  const std::int64_t top = std::max(max_value(), other.max_value());
  double acc = 0.0;
  for (std::int64_t v = 0; v <= top; ++v) acc += std::fabs(prob(v) - other.prob(v));
  return 0.5 * acc;
}

const char* to_string(OverlapLaw::Kind kind) {
  switch (kind) {
    case OverlapLaw::Kind::exact:
      return "exact";
    case OverlapLaw::Kind::empirical:
      return "empirical";
    case OverlapLaw::Kind::dominating:
      return "dominating";
  }
  return "?";
}

}  // namespace tcover
