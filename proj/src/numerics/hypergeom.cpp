#include "tcover/hypergeom.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "tcover/combinatorics.hpp"
#include "tcover/errors.hpp"

namespace tcover {

HypergeomLaw::HypergeomLaw(std::int64_t population, std::int64_t marked, std::int64_t draws)
    : population_(population), marked_(marked), draws_(draws) {
  if (marked < 0 || marked > population) {
    throw ValidationError("hypergeom: need 0 <= marked <= population (marked=" +
                          std::to_string(marked) + ", population=" + std::to_string(population) + ")");
  }
  if (draws < 1 || draws > population) {
    throw ValidationError("hypergeom: need 1 <= draws <= population (draws=" +
                          std::to_string(draws) + ", population=" + std::to_string(population) + ")");
  }
  const std::int64_t top = std::min(draws, marked);
  numerators_.reserve(static_cast<std::size_t>(top + 1));
  for (std::int64_t v = 0; v <= top; ++v) {
    numerators_.push_back(binomial(marked, v) * binomial(population - marked, draws - v));
  }
  denominator_ = binomial(population, draws);
}

std::int64_t HypergeomLaw::min_value() const {
  return std::max<std::int64_t>(0, draws_ + marked_ - population_);
}

std::int64_t HypergeomLaw::max_value() const { return std::min(draws_, marked_); }

const BigInt& HypergeomLaw::numerator(std::int64_t value) const {
  static const BigInt kZero(0);
  if (value < 0 || value > max_value()) return kZero;
  return numerators_[static_cast<std::size_t>(value)];
}

Rational HypergeomLaw::pmf(std::int64_t value) const { return Rational(numerator(value), denominator_); }

Rational HypergeomLaw::tail(std::int64_t value) const {
  BigInt acc(0);
  for (std::int64_t v = std::max<std::int64_t>(value, 0); v <= max_value(); ++v) acc += numerator(v);
  return Rational(acc, denominator_);
}

Rational HypergeomLaw::mean() const {
  BigInt acc(0);
  for (std::int64_t v = 1; v <= max_value(); ++v) acc += numerator(v) * v;
  return Rational(acc, denominator_);
}

Rational HypergeomLaw::total() const { return tail(0); }

HypergeomLaw hypergeom(std::int64_t population, std::int64_t marked, std::int64_t draws) {
  return HypergeomLaw(population, marked, draws);
}

}  // namespace tcover
