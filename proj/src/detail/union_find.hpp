#pragma once

#include <numeric>
#include <utility>
#include <vector>

namespace hypertrees::detail {

class UnionFind {
 public:
  explicit UnionFind(int size) : parent_(size), rank_(size, 0), components_(size) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  /// Returns the surviving representative, or -1 if x and y were already joined.
  int unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return -1;
    if (rank_[x] < rank_[y]) std::swap(x, y);
    parent_[y] = x;
    if (rank_[x] == rank_[y]) ++rank_[x];
    --components_;
    return x;
  }

  int components() const noexcept { return components_; }

 private:
  std::vector<int> parent_;
  std::vector<int> rank_;
  int components_;
};

}  // namespace hypertrees::detail
