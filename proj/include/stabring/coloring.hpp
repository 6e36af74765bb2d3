#pragma once

// Proper k-colorings and Kempe switchings.
//
// A k-coloring is any proper map V -> {1..k}; colors may go unused. Colorings
// are compared as raw assignment vectors, so enumeration order and partition
// reports are deterministic.

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "stabring/graph.hpp"

namespace stabring {

struct Coloring {
  int k = 0;
  std::vector<int> colors;  // colors[v] in 1..k

  friend bool operator==(const Coloring&, const Coloring&) = default;
  friend auto operator<=>(const Coloring& a, const Coloring& b) { return a.colors <=> b.colors; }
};

bool is_proper(const Graph& g, const Coloring& f);
// Throws Error(argument) unless f is a proper k-coloring of g.
void require_proper(const Graph& g, const Coloring& f);

// Vertices of color c.
VertexMask color_class(const Coloring& f, int c);

// Visits every proper k-coloring once, in lexicographic order of the
// assignment vector. The visitor returns false to stop early.
void for_each_coloring(const Graph& g, int k, const std::function<bool(const Coloring&)>& visit);
std::vector<Coloring> enumerate_colorings(const Graph& g, int k);
std::uint64_t count_colorings(const Graph& g, int k);

// Connected components of g[vertices], ordered by minimum vertex.
std::vector<VertexMask> components_within(const Graph& g, VertexMask vertices);

// Components of the subgraph induced by the colors i and j (1 <= i < j <= k).
std::vector<VertexMask> kempe_components(const Graph& g, const Coloring& f, int i, int j);

// Exchanges i and j on `component`, which must be one of
// kempe_components(g, f, i, j).
Coloring kempe_switch(const Graph& g, const Coloring& f, int i, int j, VertexMask component);

struct KempePartition {
  std::vector<Coloring> colorings;  // lexicographic
  std::vector<int> class_of;        // class id per coloring, numbered by first occurrence
  int class_count = 0;

  std::vector<int> class_sizes() const;
  // Index of the first coloring of each class.
  std::vector<int> representatives() const;
};

// Materializes all k^n-bounded colorings; desk scale only.
KempePartition kempe_classes(const Graph& g, int k);
bool all_kempe_equivalent(const Graph& g, int k);

std::string format_coloring(const Coloring& f);  // "1,2,1"
Coloring parse_coloring(std::string_view text, int k);

}  // namespace stabring
