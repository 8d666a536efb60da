#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "tcover/big.hpp"
#include "tcover/log_real.hpp"

namespace tcover {

/// Law of an overlap variable (Y_2, Y_j or a sum of them) over the dense
/// support 0..max_value. Values of probability zero are explicit entries.
class OverlapLaw {
 public:
  enum class Kind { exact, empirical, dominating };

  static OverlapLaw exact(std::vector<Rational> probs);
  /// A pointwise upper bound rather than a law; masses need not sum to 1.
  static OverlapLaw dominating(std::vector<Rational> probs);
  static OverlapLaw empirical(std::vector<std::uint64_t> counts);

  Kind kind() const { return kind_; }
  std::int64_t max_value() const { return static_cast<std::int64_t>(size_) - 1; }
  /// Number of draws behind an empirical law; 0 otherwise.
  std::uint64_t samples() const { return samples_; }

  double prob(std::int64_t v) const;
  LogReal log_prob(std::int64_t v) const;
  /// Throws std::logic_error for empirical laws.
  Rational exact_prob(std::int64_t v) const;
  std::uint64_t count(std::int64_t v) const;
  /// Wilson interval at the given z for empirical laws; the point mass twice otherwise.
  std::pair<double, double> interval(std::int64_t v, double z = 3.0) const;

  /// Values carrying positive mass.
  std::vector<std::int64_t> support() const;
  Rational exact_total() const;
  double total_variation(const OverlapLaw& other) const;

  friend bool operator==(const OverlapLaw&, const OverlapLaw&) = default;

 private:
  Kind kind_ = Kind::exact;
  std::size_t size_ = 0;
  std::vector<Rational> exact_;
  std::vector<std::uint64_t> counts_;
  std::uint64_t samples_ = 0;
};

const char* to_string(OverlapLaw::Kind kind);

}  // namespace tcover
