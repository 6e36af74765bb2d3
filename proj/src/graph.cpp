#include "stabring/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "stabring/error.hpp"

namespace stabring {

std::vector<int> mask_vertices(VertexMask m) {
  std::vector<int> out;
  out.reserve(popcount(m));
  for (; m; m &= m - 1) out.push_back(lowest(m));
  return out;
}

VertexMask vertices_mask(std::span<const int> vertices) {
  VertexMask m = 0;
  for (int v : vertices) m |= bit(v);
  return m;
}

namespace {

void check_order(int n) {
  if (n < 0) throw Error(ErrorKind::validation, "negative vertex count");
  if (n > kMaxVertices)
    throw Error(ErrorKind::limit, "graphs are limited to " + std::to_string(kMaxVertices) + " vertices");
}

}  // namespace

Graph::Graph(int n) {
  check_order(n);
  rows_.assign(n, 0);
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw Error(ErrorKind::validation, "edge endpoint out of range");
    if (u == v) throw Error(ErrorKind::validation, "self-loop at vertex " + std::to_string(u + 1));
    if (g.adjacent(u, v))
      throw Error(ErrorKind::validation,
                  "duplicate edge " + std::to_string(u + 1) + " " + std::to_string(v + 1));
    g.rows_[u] |= bit(v);
    g.rows_[v] |= bit(u);
  }
  return g;
}

Graph Graph::from_rows(std::vector<VertexMask> rows) {
  const int n = static_cast<int>(rows.size());
  check_order(n);
  for (int v = 0; v < n; ++v) {
    if (rows[v] & ~low_mask(n)) throw Error(ErrorKind::validation, "adjacency row out of range");
    if (rows[v] & bit(v)) throw Error(ErrorKind::validation, "self-loop");
    for (VertexMask m = rows[v]; m; m &= m - 1)
      if (!((rows[lowest(m)] >> v) & 1U)) throw Error(ErrorKind::validation, "asymmetric adjacency");
  }
  Graph g;
  g.rows_ = std::move(rows);
  return g;
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (int v = 0; v < n; ++v) g.rows_[v] = low_mask(n) & ~bit(v);
  return g;
}

Graph Graph::cycle(int n) {
  if (n < 3) throw Error(ErrorKind::argument, "cycles need at least 3 vertices");
  std::vector<std::pair<int, int>> e;
  for (int v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
  return from_edges(n, e);
}

Graph Graph::path(int n) {
  std::vector<std::pair<int, int>> e;
  for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return from_edges(n, e);
}

int Graph::size() const {
  int twice = 0;
  for (VertexMask r : rows_) twice += popcount(r);
  return twice / 2;
}

bool Graph::is_complete() const {
  for (int v = 0; v < order(); ++v)
    if (rows_[v] != (all() & ~bit(v))) return false;
  return true;
}

bool Graph::is_connected() const {
  if (order() == 0) return true;
  VertexMask seen = 1, frontier = 1;
  while (frontier) {
    VertexMask next = 0;
    for (VertexMask m = frontier; m; m &= m - 1) next |= rows_[lowest(m)];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == all();
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < order(); ++u)
    for (VertexMask m = rows_[u] & ~low_mask(u + 1); m; m &= m - 1) out.emplace_back(u, lowest(m));
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const int> vertices) {
  VertexMask s = 0;
  for (int v : vertices) {
    if (v < 0 || v >= g.order())
      throw Error(ErrorKind::argument, "vertex " + std::to_string(v + 1) + " is not in the graph");
    s |= bit(v);
  }
  return {induced(g, s), mask_vertices(s)};
}

Graph induced(const Graph& g, VertexMask s) {
  const std::vector<int> keep = mask_vertices(s & g.all());
  std::vector<VertexMask> rows(keep.size(), 0);
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = 0; j < keep.size(); ++j)
      if (g.adjacent(keep[i], keep[j])) rows[i] |= bit(static_cast<int>(j));
  return Graph::from_rows(std::move(rows));
}

Graph complement(const Graph& g) {
  std::vector<VertexMask> rows(g.order());
  for (int v = 0; v < g.order(); ++v) rows[v] = ~g.neighbors(v) & g.all() & ~bit(v);
  return Graph::from_rows(std::move(rows));
}

Graph contract_pair(const Graph& g, int x, int y) {
  const int n = g.order();
  if (x < 0 || y < 0 || x >= n || y >= n) throw Error(ErrorKind::argument, "contraction vertex out of range");
  if (x == y) throw Error(ErrorKind::argument, "cannot contract a vertex with itself");
  if (g.adjacent(x, y)) throw Error(ErrorKind::argument, "cannot contract adjacent vertices");
  const int z = std::min(x, y), gone = std::max(x, y);

  // Relabel: old vertex v -> v (v < gone), v - 1 (v > gone); gone merges into z.
  auto squeeze = [gone](VertexMask m) {
    const VertexMask below = m & low_mask(gone);
    const VertexMask above = gone + 1 >= 64 ? 0 : (m >> (gone + 1)) << gone;
    return below | above;
  };
  std::vector<VertexMask> rows;
  rows.reserve(n - 1);
  const VertexMask zn = (g.neighbors(x) | g.neighbors(y)) & ~bit(x) & ~bit(y);
  for (int v = 0; v < n; ++v) {
    if (v == gone) continue;
    VertexMask r;
    if (v == z) {
      r = squeeze(zn);
    } else {
      VertexMask old = g.neighbors(v);
      const bool touches = old & (bit(x) | bit(y));
      old &= ~bit(x) & ~bit(y);
      r = squeeze(old);
      if (touches) r |= bit(z);
    }
    rows.push_back(r);
  }
  return Graph::from_rows(std::move(rows));
}

int ReplicationVector::total() const { return std::accumulate(counts.begin(), counts.end(), 0); }

ReplicationGraph replication(const Graph& g, const ReplicationVector& a) {
  if (a.size() != g.order())
    throw Error(ErrorKind::validation, "replication vector length " + std::to_string(a.size()) +
                                           " does not match vertex count " + std::to_string(g.order()));
  long long total = 0;
  for (int c : a.counts) {
    if (c < 0) throw Error(ErrorKind::validation, "replication vector has a negative entry");
    total += c;
  }
  if (total > kMaxVertices) throw Error(ErrorKind::limit, "replication graph exceeds 64 vertices");

  ReplicationGraph r{g, a, Graph{}, {}, std::vector<VertexMask>(g.order(), 0)};
  int next = 0;
  for (int i = 0; i < g.order(); ++i) {
    for (int c = 0; c < a.counts[i]; ++c) {
      r.copies[i] |= bit(next++);
      r.origin.push_back(i);
    }
  }
  std::vector<VertexMask> rows(next, 0);
  for (int v = 0; v < next; ++v) {
    const int i = r.origin[v];
    VertexMask row = r.copies[i];
    for (VertexMask m = g.neighbors(i); m; m &= m - 1) row |= r.copies[lowest(m)];
    rows[v] = row & ~bit(v);
  }
  r.graph = Graph::from_rows(std::move(rows));
  return r;
}

namespace {

void max_clique(const Graph& g, VertexMask candidates, int size, int& best) {
  if (!candidates) {
    best = std::max(best, size);
    return;
  }
  while (candidates) {
    if (size + popcount(candidates) <= best) return;
    const int v = lowest(candidates);
    candidates &= candidates - 1;
    max_clique(g, candidates & g.neighbors(v), size + 1, best);
  }
}

bool color_from(const Graph& g, const std::vector<int>& order, std::size_t pos, int k, int used,
                std::vector<int>& color) {
  if (pos == order.size()) return true;
  const int v = order[pos];
  std::uint64_t forbidden = 0;
  for (VertexMask m = g.neighbors(v); m; m &= m - 1)
    if (color[lowest(m)] >= 0) forbidden |= std::uint64_t{1} << color[lowest(m)];
  // A fresh color is interchangeable with every other fresh one.
  const int limit = std::min(k, used + 1);
  for (int c = 0; c < limit; ++c) {
    if ((forbidden >> c) & 1U) continue;
    color[v] = c;
    if (color_from(g, order, pos + 1, k, std::max(used, c + 1), color)) return true;
  }
  color[v] = -1;
  return false;
}

}  // namespace

int clique_number(const Graph& g) {
  int best = 0;
  max_clique(g, g.all(), 0, best);
  return best;
}

bool is_k_colorable(const Graph& g, int k) {
  const int n = g.order();
  if (n == 0) return true;
  if (k <= 0) return false;
  if (k >= n) return true;
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
  std::vector<int> color(n, -1);
  return color_from(g, order, 0, k, 0, color);
}

int chromatic_number(const Graph& g) {
  int k = clique_number(g);
  while (!is_k_colorable(g, k)) ++k;
  return k;
}

}  // namespace stabring
