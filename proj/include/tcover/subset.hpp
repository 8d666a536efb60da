#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace tcover {

inline constexpr unsigned kMaxGroundSize = 64;

/// A subset of {0, ..., n-1}, n <= 64, as a bit vector.
class Subset {
 public:
  constexpr Subset() = default;
  constexpr explicit Subset(std::uint64_t bits) : bits_(bits) {}
  Subset(std::initializer_list<unsigned> indices);

  static Subset from_indices(std::span<const unsigned> indices);
  static constexpr Subset full(unsigned n) {
    return Subset(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr unsigned size() const { return static_cast<unsigned>(std::popcount(bits_)); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(unsigned i) const { return (bits_ >> i) & 1u; }
  constexpr bool is_subset_of(Subset other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(Subset other) const { return (bits_ & other.bits_) != 0; }
  /// Highest member index + 1, or 0 for the empty set.
  constexpr unsigned span_width() const { return 64u - static_cast<unsigned>(std::countl_zero(bits_)); }

  constexpr Subset with(unsigned i) const { return Subset(bits_ | (std::uint64_t{1} << i)); }
  constexpr Subset without(unsigned i) const { return Subset(bits_ & ~(std::uint64_t{1} << i)); }

  std::vector<unsigned> indices() const;
  std::string to_string() const;

  friend constexpr Subset operator|(Subset a, Subset b) { return Subset(a.bits_ | b.bits_); }
  friend constexpr Subset operator&(Subset a, Subset b) { return Subset(a.bits_ & b.bits_); }
  friend constexpr bool operator==(Subset, Subset) = default;
  friend constexpr auto operator<=>(Subset, Subset) = default;

 private:
  std::uint64_t bits_ = 0;
};

inline unsigned overlap(Subset a, Subset b) { return (a & b).size(); }

}  // namespace tcover
