#include "stabring/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace stabring {

std::size_t CanonicalFormHash::operator()(const CanonicalForm& c) const noexcept {
  std::size_t h = static_cast<std::size_t>(c.n) * 0x9e3779b97f4a7c15ULL;
  for (VertexMask r : c.rows) h = (h ^ r) * 0x100000001b3ULL + (h >> 29);
  return h;
}

namespace {

// Iterated degree refinement. Ranks are assigned from sorted invariant tuples,
// so they are preserved by isomorphisms.
std::vector<int> refined_ranks(const Graph& g) {
  const int n = g.order();
  std::vector<int> rank(n);
  for (int v = 0; v < n; ++v) rank[v] = g.degree(v);
  for (int round = 0; round < n; ++round) {
    std::vector<std::vector<int>> sig(n);
    for (int v = 0; v < n; ++v) {
      sig[v].push_back(rank[v]);
      std::vector<int> nb;
      for (VertexMask m = g.neighbors(v); m; m &= m - 1) nb.push_back(rank[lowest(m)]);
      std::sort(nb.begin(), nb.end());
      sig[v].insert(sig[v].end(), nb.begin(), nb.end());
    }
    std::vector<std::vector<int>> distinct = sig;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    std::vector<int> next(n);
    for (int v = 0; v < n; ++v)
      next[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), sig[v]) - distinct.begin());
    const bool stable = std::set<int>(next.begin(), next.end()).size() == std::set<int>(rank.begin(), rank.end()).size();
    rank = std::move(next);
    if (stable) break;
  }
  return rank;
}

class CanonSearch {
 public:
  explicit CanonSearch(const Graph& g) : g_(g), n_(g.order()), rank_(refined_ranks(g)) {
    std::vector<int> sorted = rank_;
    std::sort(sorted.begin(), sorted.end());
    cell_at_ = sorted;
    perm_.assign(n_, -1);
    cur_.assign(n_, 0);
  }

  void run() { descend(0, 0); }

  std::vector<VertexMask> best_rows() const { return best_; }
  std::vector<int> best_perm() const { return best_perm_; }

 private:
  // Keeps the lexicographically largest row sequence. Candidates within a
  // cell that are twins of an already tried candidate are skipped: swapping
  // them is an automorphism fixing every placed vertex.
  void descend(int p, VertexMask placed) {
    if (p == n_) {
      if (!have_best_ || cur_ > best_) {
        best_ = cur_;
        best_perm_ = perm_;
        have_best_ = true;
      }
      return;
    }
    VertexMask tried = 0;
    for (int v = 0; v < n_; ++v) {
      if ((placed >> v) & 1U || rank_[v] != cell_at_[p]) continue;
      bool twin = false;
      for (VertexMask t = tried; t && !twin; t &= t - 1) {
        const int w = lowest(t);
        twin = (g_.neighbors(v) & ~bit(w)) == (g_.neighbors(w) & ~bit(v));
      }
      if (twin) continue;
      tried |= bit(v);

      VertexMask row = 0;
      for (int q = 0; q < p; ++q)
        if (g_.adjacent(v, perm_[q])) row |= bit(q);
      if (have_best_) {
        const int c = compare_prefix(p);
        if (c < 0) return;
        if (c == 0 && row < best_[p]) continue;
      }
      perm_[p] = v;
      cur_[p] = row;
      descend(p + 1, placed | bit(v));
    }
  }

  int compare_prefix(int p) const {
    for (int q = 0; q < p; ++q) {
      if (cur_[q] < best_[q]) return -1;
      if (cur_[q] > best_[q]) return 1;
    }
    return 0;
  }

  const Graph& g_;
  int n_;
  std::vector<int> rank_;
  std::vector<int> cell_at_;
  std::vector<int> perm_;
  std::vector<VertexMask> cur_;
  std::vector<VertexMask> best_;
  std::vector<int> best_perm_;
  bool have_best_ = false;
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  CanonSearch search(g);
  search.run();
  return {g.order(), search.best_rows()};
}

Graph canonical_graph(const Graph& g) {
  CanonSearch search(g);
  search.run();
  const auto perm = search.best_perm();
  std::vector<int> pos(g.order());
  for (int p = 0; p < g.order(); ++p) pos[perm[p]] = p;
  std::vector<VertexMask> rows(g.order(), 0);
  for (int v = 0; v < g.order(); ++v)
    for (VertexMask m = g.neighbors(v); m; m &= m - 1) rows[pos[v]] |= bit(pos[lowest(m)]);
  return Graph::from_rows(std::move(rows));
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  return canonical_form(a) == canonical_form(b);
}

std::vector<Graph> graphs_of_order(int n, bool connected_only) {
  std::vector<Graph> level{Graph(0)};
  for (int order = 1; order <= n; ++order) {
    std::map<CanonicalForm, Graph> seen;
    for (const Graph& g : level) {
      const int m = g.order();
      for (VertexMask s = 0; s <= low_mask(m); ++s) {
        std::vector<VertexMask> rows = g.rows();
        rows.push_back(s);
        for (VertexMask t = s; t; t &= t - 1) rows[lowest(t)] |= bit(m);
        Graph h = Graph::from_rows(std::move(rows));
        Graph c = canonical_graph(h);
        CanonicalForm code{order, c.rows()};
        for (int p = 0; p < order; ++p) code.rows[p] &= low_mask(p);
        seen.emplace(std::move(code), std::move(c));
        if (s == low_mask(m)) break;
      }
    }
    level.clear();
    for (auto& [code, g] : seen) level.push_back(std::move(g));
  }
  std::vector<Graph> out;
  for (Graph& g : level)
    if (!connected_only || g.is_connected()) out.push_back(std::move(g));
  std::stable_sort(out.begin(), out.end(), [](const Graph& a, const Graph& b) { return a.size() < b.size(); });
  return out;
}

std::vector<Graph> graphs_up_to(int max_n, bool connected_only) {
  std::vector<Graph> out;
  for (int n = 1; n <= max_n; ++n) {
    auto level = graphs_of_order(n, connected_only);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

}  // namespace stabring
