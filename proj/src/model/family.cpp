#include "tcover/family.hpp"

#include <algorithm>

namespace tcover {

SubsetFamily::SubsetFamily(std::vector<Subset> sets) : sets_(std::move(sets)) {
  std::sort(sets_.begin(), sets_.end());
  sets_.erase(std::unique(sets_.begin(), sets_.end()), sets_.end());
}

bool SubsetFamily::contains(Subset s) const { return std::binary_search(sets_.begin(), sets_.end(), s); }

bool SubsetFamily::generates(Subset s) const {
  return std::any_of(sets_.begin(), sets_.end(), [s](Subset g) { return g.is_subset_of(s); });
}

bool SubsetFamily::is_antichain() const {
  for (std::size_t i = 0; i < sets_.size(); ++i) {
    for (std::size_t j = 0; j < sets_.size(); ++j) {
      if (i != j && sets_[i].is_subset_of(sets_[j])) return false;
    }
  }
  return true;
}

SubsetFamily operator|(const SubsetFamily& a, const SubsetFamily& b) {
  std::vector<Subset> merged(a.sets_);
  merged.insert(merged.end(), b.sets_.begin(), b.sets_.end());
  return SubsetFamily(std::move(merged));
}

}  // namespace tcover
