#pragma once

#include <cstddef>
#include <vector>

#include "tcover/subset.hpp"

namespace tcover {

/// A finite family of subsets. Duplicates are dropped on construction and
/// members are kept in ascending bit order, so equal families compare equal.
class SubsetFamily {
 public:
  SubsetFamily() = default;
  explicit SubsetFamily(std::vector<Subset> sets);

  std::size_t size() const { return sets_.size(); }
  bool empty() const { return sets_.empty(); }
  const Subset& operator[](std::size_t i) const { return sets_[i]; }
  auto begin() const { return sets_.begin(); }
  auto end() const { return sets_.end(); }
  const std::vector<Subset>& sets() const { return sets_; }

  bool contains(Subset s) const;
  /// True iff some member is contained in s, i.e. s lies in the upset.
  bool generates(Subset s) const;
  bool is_antichain() const;

  friend SubsetFamily operator|(const SubsetFamily& a, const SubsetFamily& b);
  friend bool operator==(const SubsetFamily&, const SubsetFamily&) = default;

 private:
  std::vector<Subset> sets_;
};

}  // namespace tcover
