#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "stabring/graph.hpp"

namespace stabring {

// Canonical adjacency code: two graphs are isomorphic iff their codes are
// equal. Computed by a pruned search over vertex orders consistent with a
// refined degree partition; intended for desk scale (n <= ~12).
struct CanonicalForm {
  int n = 0;
  std::vector<VertexMask> rows;  // rows[p] = neighbors of position p among positions < p

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

struct CanonicalFormHash {
  std::size_t operator()(const CanonicalForm& c) const noexcept;
};

CanonicalForm canonical_form(const Graph& g);
// The canonical labeling of g, i.e. g relabeled so that its own code is `rows`.
Graph canonical_graph(const Graph& g);
bool isomorphic(const Graph& a, const Graph& b);

// Every graph on exactly n vertices up to isomorphism, in a fixed order
// (edge count, then canonical code). Grows graphs one vertex at a time.
std::vector<Graph> graphs_of_order(int n, bool connected_only);
// Same, for all orders 1..max_n.
std::vector<Graph> graphs_up_to(int max_n, bool connected_only);

}  // namespace stabring
