#pragma once

// Shared scan order for the quadraticity deciders: multidegrees a in
// {0..k}^n in lexicographic order, skipping vectors where two adjacent
// vertices together need more than k colors.

#include <algorithm>
#include <vector>

#include "stabring/graph.hpp"

namespace stabring::detail {

template <typename Visit>
bool scan_multidegrees_from(const Graph& g, int k, int v, std::vector<int>& a, Visit& visit) {
  if (v == g.order()) return visit(a);
  int cap = k;
  for (VertexMask m = g.neighbors(v) & low_mask(v); m; m &= m - 1) cap = std::min(cap, k - a[lowest(m)]);
  for (int c = 0; c <= cap; ++c) {
    a[v] = c;
    if (!scan_multidegrees_from(g, k, v + 1, a, visit)) return false;
  }
  a[v] = 0;
  return true;
}

// visit(const std::vector<int>&) returns false to stop the scan. The zero
// vector is skipped: its fiber is the single monomial x_0^k.
template <typename Visit>
void scan_multidegrees(const Graph& g, int k, Visit&& visit) {
  std::vector<int> a(g.order(), 0);
  auto skip_zero = [&](const std::vector<int>& vec) {
    for (int c : vec)
      if (c) return visit(vec);
    return true;
  };
  scan_multidegrees_from(g, k, 0, a, skip_zero);
}

}  // namespace stabring::detail
