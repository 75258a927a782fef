#include "sparsead/index_set.hpp"

#include <algorithm>

namespace sparsead {

IndexSet::IndexSet(std::initializer_list<int> xs) : IndexSet(std::vector<int>(xs)) {}

IndexSet::IndexSet(std::vector<int> xs) : xs_(std::move(xs)) {
  std::sort(xs_.begin(), xs_.end());
  xs_.erase(std::unique(xs_.begin(), xs_.end()), xs_.end());
}

IndexSet IndexSet::full(int count) {
  IndexSet s;
  s.xs_.resize(count);
  for (int i = 0; i < count; ++i) s.xs_[i] = i;
  return s;
}

bool IndexSet::contains(int x) const {
  return std::binary_search(xs_.begin(), xs_.end(), x);
}

void IndexSet::insert(int x) {
  auto it = std::lower_bound(xs_.begin(), xs_.end(), x);
  if (it == xs_.end() || *it != x) xs_.insert(it, x);
}

void IndexSet::union_with(const IndexSet& other) {
  if (other.empty()) return;
  std::vector<int> merged;
  merged.reserve(xs_.size() + other.xs_.size());
  std::set_union(xs_.begin(), xs_.end(), other.xs_.begin(), other.xs_.end(),
                 std::back_inserter(merged));
  xs_ = std::move(merged);
}

}  // namespace sparsead
