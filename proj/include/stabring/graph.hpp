#pragma once

// Simple undirected graphs on at most 64 vertices, stored as adjacency
// bitsets, plus the constructions used throughout the library: induced
// subgraphs, complements, even-pair contraction and replication graphs.
//
// Vertices are 0-based in the C++ API. Everything that leaves the library as
// text (CLI, JSON, CSV, edge lists) is 1-based.

#include <bit>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace stabring {

using VertexMask = std::uint64_t;

inline constexpr int kMaxVertices = 64;

inline VertexMask bit(int v) { return VertexMask{1} << v; }
inline VertexMask low_mask(int n) { return n >= 64 ? ~VertexMask{0} : (bit(n) - 1); }
inline int popcount(VertexMask m) { return std::popcount(m); }
inline int lowest(VertexMask m) { return std::countr_zero(m); }

// Vertices of a mask in increasing order.
std::vector<int> mask_vertices(VertexMask m);
VertexMask vertices_mask(std::span<const int> vertices);

class Graph {
 public:
  Graph() = default;
  // Edgeless graph on n vertices.
  explicit Graph(int n);

  // Builds from 0-based edges. Rejects loops, out-of-range endpoints and
  // duplicate edges.
  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);
  // Builds from adjacency rows; rows must be symmetric and loop-free.
  static Graph from_rows(std::vector<VertexMask> rows);

  static Graph complete(int n);
  static Graph cycle(int n);
  static Graph path(int n);

  int order() const { return static_cast<int>(rows_.size()); }
  int size() const;  // number of edges
  bool adjacent(int u, int v) const { return (rows_[u] >> v) & 1U; }
  VertexMask neighbors(int v) const { return rows_[v]; }
  VertexMask all() const { return low_mask(order()); }
  const std::vector<VertexMask>& rows() const { return rows_; }
  int degree(int v) const { return popcount(rows_[v]); }

  bool is_complete() const;
  bool is_connected() const;
  std::vector<std::pair<int, int>> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<VertexMask> rows_;
};

struct InducedSubgraph {
  Graph graph;
  std::vector<int> labels;  // labels[new vertex] = original vertex
};

// Vertices are taken in increasing order and relabeled 0..|S|-1.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const int> vertices);
Graph induced(const Graph& g, VertexMask vertices);

Graph complement(const Graph& g);

// Contracts the non-adjacent pair {x, y}: both are removed and a new vertex z
// adjacent to N(x) ∪ N(y) is added. z takes the label min(x, y); vertices
// above max(x, y) shift down by one.
Graph contract_pair(const Graph& g, int x, int y);

struct ReplicationVector {
  std::vector<int> counts;

  int size() const { return static_cast<int>(counts.size()); }
  int total() const;
  static ReplicationVector ones(int n) { return {std::vector<int>(n, 1)}; }
  friend bool operator==(const ReplicationVector&, const ReplicationVector&) = default;
};

struct ReplicationGraph {
  Graph base;
  ReplicationVector a;
  Graph graph;
  std::vector<int> origin;            // origin[copy] = base vertex
  std::vector<VertexMask> copies;     // copies[base vertex] = its clique in graph

  // Copies are laid out base vertex by base vertex, so the copies of i occupy
  // a contiguous block starting at first_copy(i).
  int first_copy(int base_vertex) const { return copies[base_vertex] ? lowest(copies[base_vertex]) : -1; }
};

// Blows each vertex i up into a clique of a_i copies; a_i = 0 deletes i.
ReplicationGraph replication(const Graph& g, const ReplicationVector& a);

int clique_number(const Graph& g);
bool is_k_colorable(const Graph& g, int k);
int chromatic_number(const Graph& g);

}  // namespace stabring
