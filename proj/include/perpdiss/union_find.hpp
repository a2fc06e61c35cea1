#pragma once

#include <numeric>
#include <vector>

namespace perpdiss {

// Plain union-find over 0..n-1; copyable so callers can snapshot during DFS.
class UnionFind {
 public:
  explicit UnionFind(int n = 0) : parent_(n), count_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a), b = find(b);
    if (a == b) return false;
    if (a < b) std::swap(a, b);
    parent_[a] = b;  // smaller index becomes the root
    --count_;
    return true;
  }
  int count() const { return count_; }

 private:
  std::vector<int> parent_;
  int count_;
};

}  // namespace perpdiss
