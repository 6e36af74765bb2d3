#pragma once

#include <numeric>
#include <vector>

namespace stabring {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n = 0) : parent_(n), sets_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // Returns true when x and y were in different sets.
  bool unite(std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    if (y < x) std::swap(x, y);
    parent_[y] = x;  // smaller index stays the root
    --sets_;
    return true;
  }

  std::size_t set_count() const { return sets_; }
  std::size_t size() const { return parent_.size(); }

 private:
  std::vector<std::size_t> parent_;
  std::size_t sets_;
};

}  // namespace stabring
