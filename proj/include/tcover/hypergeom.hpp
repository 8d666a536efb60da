#pragma once

#include <cstdint>
#include <vector>

#include "tcover/big.hpp"

namespace tcover {

/// Law of the number of marked items in a uniform draw without replacement:
/// `draws` items out of `population`, of which `marked` are marked.
///
/// The pmf is held as integer numerators over the common denominator
/// C(population, draws), so sums and tails are exact without rational
/// normalization.
class HypergeomLaw {
 public:
  HypergeomLaw(std::int64_t population, std::int64_t marked, std::int64_t draws);

  std::int64_t population() const { return population_; }
  std::int64_t marked() const { return marked_; }
  std::int64_t draws() const { return draws_; }
  std::int64_t min_value() const;
  std::int64_t max_value() const;

  Rational pmf(std::int64_t value) const;
  /// P(X >= value).
  Rational tail(std::int64_t value) const;
  Rational mean() const;
  Rational total() const;

  const BigInt& numerator(std::int64_t value) const;
  const BigInt& denominator() const { return denominator_; }

 private:
  std::int64_t population_;
  std::int64_t marked_;
  std::int64_t draws_;
  std::vector<BigInt> numerators_;  // index = overlap value, 0..max_value
  BigInt denominator_;
};

HypergeomLaw hypergeom(std::int64_t population, std::int64_t marked, std::int64_t draws);

}  // namespace tcover
