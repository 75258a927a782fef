#pragma once

#include <initializer_list>
#include <vector>

namespace sparsead {

// Strictly increasing, duplicate-free set of 0-based indices.
class IndexSet {
 public:
  IndexSet() = default;
  IndexSet(std::initializer_list<int> xs);
  explicit IndexSet(std::vector<int> xs);  // sorts and dedups

  static IndexSet full(int count);  // {0, 1, ..., count-1}

  bool contains(int x) const;
  void insert(int x);
  void union_with(const IndexSet& other);

  int size() const { return static_cast<int>(xs_.size()); }
  bool empty() const { return xs_.empty(); }
  const std::vector<int>& indices() const { return xs_; }

  auto begin() const { return xs_.begin(); }
  auto end() const { return xs_.end(); }

  bool operator==(const IndexSet&) const = default;

 private:
  std::vector<int> xs_;
};

}  // namespace sparsead
