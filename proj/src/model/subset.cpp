#include "tcover/subset.hpp"

#include <stdexcept>

namespace tcover {

Subset::Subset(std::initializer_list<unsigned> indices)
    : Subset(from_indices(std::span<const unsigned>(indices.begin(), indices.size()))) {}

Subset Subset::from_indices(std::span<const unsigned> indices) {
  std::uint64_t bits = 0;
  for (unsigned i : indices) {
    if (i >= kMaxGroundSize) throw std::out_of_range("Subset: element index " + std::to_string(i) + " >= 64");
    bits |= std::uint64_t{1} << i;
  }
  return Subset(bits);
}

std::vector<unsigned> Subset::indices() const {
  std::vector<unsigned> out;
  out.reserve(size());
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(static_cast<unsigned>(std::countr_zero(b)));
  return out;
}

std::string Subset::to_string() const {
  std::string out = "{";
  bool first = true;
  for (unsigned i : indices()) {
    if (!first) out += ",";
    out += std::to_string(i);
    first = false;
  }
  return out + "}";
}

}  // namespace tcover
