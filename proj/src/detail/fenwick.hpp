#pragma once

#include <bit>
#include <cassert>
#include <vector>

namespace hypertrees::detail {

/// Indicator set over {0..size-1} with rank and select in O(log size).
class OrderStatisticSet {
 public:
  explicit OrderStatisticSet(int size) : tree_(size + 1, 0), size_(size) {}

  void insert(int i) { add(i, +1); }
  void erase(int i) { add(i, -1); }

  /// Number of members strictly below i.
  int rank(int i) const {
    int sum = 0;
    for (int j = i; j > 0; j -= j & -j) sum += tree_[j];
    return sum;
  }

  /// Member with exactly r members below it (0-based select).
  int select(int r) const {
    int pos = 0;
    for (int step = static_cast<int>(std::bit_floor(static_cast<unsigned>(size_))); step > 0;
         step >>= 1) {
      if (pos + step <= size_ && tree_[pos + step] <= r) {
        pos += step;
        r -= tree_[pos];
      }
    }
    assert(pos < size_);
    return pos;
  }

 private:
  void add(int i, int delta) {
    for (int j = i + 1; j <= size_; j += j & -j) tree_[j] += delta;
  }

  std::vector<int> tree_;
  int size_;
};

}  // namespace hypertrees::detail
