#include "stabring/structure.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <unordered_set>

#include "stabring/error.hpp"
#include "stabring/isomorphism.hpp"

namespace stabring {

namespace {

void check_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) throw Error(ErrorKind::argument, "vertex " + std::to_string(v + 1) + " out of range");
}

// Induced paths from the current tip towards y. Returns false as soon as an
// odd one is found.
bool all_induced_paths_even(const Graph& g, int y, int tip, int length, VertexMask path, VertexMask earlier) {
  if (g.adjacent(tip, y)) return (length + 1) % 2 == 0;
  VertexMask next = g.neighbors(tip) & ~path;
  for (VertexMask m = earlier; m; m &= m - 1) next &= ~g.neighbors(lowest(m));
  for (; next; next &= next - 1) {
    const int w = lowest(next);
    if (!all_induced_paths_even(g, y, w, length + 1, path | bit(w), earlier | bit(tip))) return false;
  }
  return true;
}

}  // namespace

bool is_even_pair(const Graph& g, int x, int y) {
  check_vertex(g, x);
  check_vertex(g, y);
  if (x == y) throw Error(ErrorKind::argument, "even pair needs two distinct vertices");
  if (g.adjacent(x, y)) return false;
  return all_induced_paths_even(g, y, x, 0, bit(x), 0);
}

std::vector<std::pair<int, int>> even_pairs(const Graph& g) {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < g.order(); ++x)
    for (int y = x + 1; y < g.order(); ++y)
      if (is_even_pair(g, x, y)) out.emplace_back(x, y);
  return out;
}

namespace {

// Graph keys for memoization: canonical up to isomorphism while that is
// cheap, exact adjacency otherwise.
constexpr int kCanonicalMemoLimit = 10;

CanonicalForm memo_key(const Graph& g) {
  if (g.order() <= kCanonicalMemoLimit) return canonical_form(g);
  return CanonicalForm{g.order(), g.rows()};
}

class ContractionSearcher {
 public:
  explicit ContractionSearcher(std::uint64_t budget) : budget_(budget) {}

  // found / absent / budget_exhausted for g; on success `steps` holds the
  // contractions in order.
  SearchOutcome search(const Graph& g, std::vector<ContractionStep>& steps) {
    if (g.is_complete()) return SearchOutcome::found;
    if (nodes_ >= budget_) return SearchOutcome::budget_exhausted;
    ++nodes_;
    const CanonicalForm key = memo_key(g);
    if (failed_.count(key)) return SearchOutcome::absent;
    bool exhausted = false;
    for (int x = 0; x < g.order(); ++x) {
      for (int y = x + 1; y < g.order(); ++y) {
        if (!is_even_pair(g, x, y)) continue;
        steps.push_back({g, x, y});
        const SearchOutcome r = search(contract_pair(g, x, y), steps);
        if (r == SearchOutcome::found) return r;
        steps.pop_back();
        if (r == SearchOutcome::budget_exhausted) exhausted = true;
        if (nodes_ >= budget_) return SearchOutcome::budget_exhausted;
      }
    }
    if (exhausted) return SearchOutcome::budget_exhausted;
    failed_.insert(key);
    return SearchOutcome::absent;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::unordered_set<CanonicalForm, CanonicalFormHash> failed_;
};

}  // namespace

ContractionSearch even_contractile_sequence(const Graph& g, std::uint64_t budget) {
  ContractionSearcher searcher(budget);
  std::vector<ContractionStep> steps;
  ContractionSearch out;
  out.outcome = searcher.search(g, steps);
  out.nodes = searcher.nodes();
  if (out.outcome == SearchOutcome::found) {
    Graph last = steps.empty() ? g : contract_pair(steps.back().graph, steps.back().x, steps.back().y);
    out.sequence = ContractionSequence{std::move(steps), std::move(last)};
  }
  return out;
}

bool replay_contraction_sequence(const Graph& g, const ContractionSequence& seq) {
  Graph cur = g;
  for (const ContractionStep& s : seq.steps) {
    if (!(s.graph == cur)) return false;
    if (s.x < 0 || s.y < 0 || s.x >= cur.order() || s.y >= cur.order() || s.x == s.y) return false;
    if (!is_even_pair(cur, s.x, s.y)) return false;
    cur = contract_pair(cur, s.x, s.y);
  }
  return cur == seq.final_graph && cur.is_complete();
}

ContractilityCheck is_perfectly_contractile(const Graph& g, std::uint64_t budget) {
  const int n = g.order();
  if (n > 20) throw Error(ErrorKind::limit, "perfect contractility is checked on at most 20 vertices");
  std::vector<VertexMask> subsets;
  subsets.reserve(std::size_t{1} << n);
  for (VertexMask s = 1; s <= g.all() && s != 0; ++s) subsets.push_back(s);
  // Smallest subgraphs first, so a reported counterexample is minimal.
  std::stable_sort(subsets.begin(), subsets.end(), [](VertexMask a, VertexMask b) { return popcount(a) < popcount(b); });

  ContractilityCheck out;
  std::unordered_set<CanonicalForm, CanonicalFormHash> seen;
  for (VertexMask s : subsets) {
    const Graph h = induced(g, s);
    if (h.is_complete()) continue;
    if (!seen.insert(memo_key(h)).second) continue;
    if (out.nodes >= budget) {
      out.outcome = SearchOutcome::budget_exhausted;
      return out;
    }
    const ContractionSearch r = even_contractile_sequence(h, budget - out.nodes);
    out.nodes += r.nodes;
    if (r.outcome == SearchOutcome::absent) {
      out.outcome = SearchOutcome::absent;
      out.counterexample = mask_vertices(s);
      return out;
    }
    if (r.outcome == SearchOutcome::budget_exhausted) {
      out.outcome = SearchOutcome::budget_exhausted;
      return out;
    }
  }
  out.outcome = SearchOutcome::found;
  return out;
}

namespace {

// Induced cycles of length >= 5 through their minimum vertex `start`, other
// vertices restricted to `allowed` (all larger than start).
void extend_hole(const Graph& g, int start, std::vector<int>& path, VertexMask in_path, VertexMask blocked,
                 Parity parity, const std::function<bool(const std::vector<int>&)>& emit, bool& stop) {
  const int tip = path.back();
  const int len = static_cast<int>(path.size());
  for (VertexMask m = g.neighbors(tip) & ~in_path & ~low_mask(start + 1) & ~blocked; m && !stop; m &= m - 1) {
    const int w = lowest(m);
    if (g.adjacent(w, start)) {
      // w closes the cycle; anything longer through w would have chord w-start.
      if (len + 1 >= 5 && w > path[1]) {
        const bool odd = (len + 1) % 2 == 1;
        if (parity == Parity::any || (parity == Parity::odd) == odd) {
          path.push_back(w);
          if (!emit(path)) stop = true;
          path.pop_back();
        }
      }
      continue;
    }
    path.push_back(w);
    // Vertices adjacent to the previous tip can no longer join the path.
    extend_hole(g, start, path, in_path | bit(w), blocked | (len >= 2 ? g.neighbors(tip) : 0), parity, emit, stop);
    path.pop_back();
  }
}

void for_each_hole(const Graph& g, Parity parity, const std::function<bool(const std::vector<int>&)>& emit) {
  bool stop = false;
  for (int s = 0; s < g.order() && !stop; ++s) {
    for (VertexMask m = g.neighbors(s) & ~low_mask(s + 1); m && !stop; m &= m - 1) {
      const int v1 = lowest(m);
      std::vector<int> path{s, v1};
      // Neighbours of s other than v1 and the closing vertex would be chords.
      extend_hole(g, s, path, bit(s) | bit(v1), 0, parity, emit, stop);
    }
  }
}

std::optional<std::vector<int>> first_hole(const Graph& g, Parity parity) {
  std::optional<std::vector<int>> out;
  for_each_hole(g, parity, [&](const std::vector<int>& c) {
    out = c;
    return false;
  });
  return out;
}

}  // namespace

std::vector<std::vector<int>> find_holes(const Graph& g, Parity parity) {
  std::vector<std::vector<int>> out;
  for_each_hole(g, parity, [&](const std::vector<int>& c) {
    out.push_back(c);
    return true;
  });
  return out;
}

std::vector<std::vector<int>> find_odd_holes(const Graph& g) { return find_holes(g, Parity::odd); }

std::vector<std::vector<int>> find_antiholes(const Graph& g, Parity parity) { return find_holes(complement(g), parity); }

namespace {

std::vector<std::array<int, 3>> triangles(const Graph& g) {
  std::vector<std::array<int, 3>> out;
  for (int a = 0; a < g.order(); ++a)
    for (VertexMask mb = g.neighbors(a) & ~low_mask(a + 1); mb; mb &= mb - 1) {
      const int b = lowest(mb);
      for (VertexMask mc = g.neighbors(a) & g.neighbors(b) & ~low_mask(b + 1); mc; mc &= mc - 1)
        out.push_back({a, b, lowest(mc)});
    }
  return out;
}

// Induced paths from `from` to `to` whose interior avoids `avoid` and is not
// adjacent to anything in `avoid` other than the path's own endpoints.
void induced_paths(const Graph& g, int from, int to, VertexMask avoid, std::vector<std::vector<int>>& out) {
  std::vector<int> path{from};
  std::function<void(VertexMask, VertexMask)> go = [&](VertexMask in_path, VertexMask earlier) {
    const int tip = path.back();
    if (g.adjacent(tip, to)) {
      path.push_back(to);
      out.push_back(path);
      path.pop_back();
      return;
    }
    VertexMask next = g.neighbors(tip) & ~in_path & ~avoid;
    for (VertexMask m = earlier; m; m &= m - 1) next &= ~g.neighbors(lowest(m));
    for (; next; next &= next - 1) {
      const int w = lowest(next);
      // Interior vertices see no triangle vertex besides this path's ends.
      if (g.neighbors(w) & avoid & ~bit(from) & ~bit(to)) continue;
      path.push_back(w);
      go(in_path | bit(w), earlier | bit(tip));
      path.pop_back();
    }
  };
  go(bit(from), 0);
}

bool parity_matches(int edges, Parity parity) {
  if (parity == Parity::any) return true;
  return (edges % 2 == 1) == (parity == Parity::odd);
}

int induced_edge_count(const Graph& g, VertexMask s) {
  int twice = 0;
  for (VertexMask m = s; m; m &= m - 1) twice += popcount(g.neighbors(lowest(m)) & s);
  return twice / 2;
}

void for_each_prism(const Graph& g, Parity parity, const std::function<bool(const PrismWitness&)>& emit) {
  const auto tris = triangles(g);
  std::set<VertexMask> seen;
  static constexpr int kPerms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  for (std::size_t ia = 0; ia < tris.size(); ++ia) {
    const auto& A = tris[ia];
    const VertexMask ma = bit(A[0]) | bit(A[1]) | bit(A[2]);
    for (std::size_t ib = ia + 1; ib < tris.size(); ++ib) {
      const auto& B = tris[ib];
      const VertexMask mb = bit(B[0]) | bit(B[1]) | bit(B[2]);
      if (ma & mb) continue;
      for (const auto& perm : kPerms) {
        std::array<std::vector<std::vector<int>>, 3> cand;
        bool possible = true;
        for (int t = 0; t < 3 && possible; ++t) {
          const int from = A[t], to = B[perm[t]];
          std::vector<std::vector<int>> all;
          induced_paths(g, from, to, ma | mb, all);
          for (auto& p : all) {
            // Path ends may touch only their own triangle plus each other.
            const int len = static_cast<int>(p.size()) - 1;
            if (!parity_matches(len, parity)) continue;
            if (g.neighbors(from) & mb & ~bit(to)) continue;
            if (g.neighbors(to) & ma & ~bit(from)) continue;
            cand[t].push_back(std::move(p));
          }
          possible = !cand[t].empty();
        }
        if (!possible) continue;
        for (const auto& p0 : cand[0]) {
          const VertexMask v0 = vertices_mask(p0);
          for (const auto& p1 : cand[1]) {
            const VertexMask v1 = vertices_mask(p1);
            if (v0 & v1) continue;
            for (const auto& p2 : cand[2]) {
              const VertexMask v2 = vertices_mask(p2);
              if ((v0 | v1) & v2) continue;
              const VertexMask all = ma | mb | v0 | v1 | v2;
              const int expected = 6 + static_cast<int>(p0.size() + p1.size() + p2.size()) - 3;
              if (induced_edge_count(g, all) != expected) continue;
              if (!seen.insert(all).second) continue;
              PrismWitness w;
              w.triangle_a = A;
              w.triangle_b = {B[perm[0]], B[perm[1]], B[perm[2]]};
              w.paths = {p0, p1, p2};
              w.vertices = all;
              if (!emit(w)) return;
            }
          }
        }
      }
    }
  }
}

std::optional<PrismWitness> first_prism(const Graph& g, Parity parity) {
  std::optional<PrismWitness> out;
  for_each_prism(g, parity, [&](const PrismWitness& w) {
    out = w;
    return false;
  });
  return out;
}

}  // namespace

std::vector<PrismWitness> find_prisms(const Graph& g, Parity parity) {
  std::vector<PrismWitness> out;
  for_each_prism(g, parity, [&](const PrismWitness& w) {
    out.push_back(w);
    return true;
  });
  return out;
}

bool is_prism(const Graph& g, const PrismWitness& w, Parity parity) {
  VertexMask used = 0;
  int edges = 0;
  auto fresh = [&](int v) {
    if (v < 0 || v >= g.order() || (used >> v) & 1U) return false;
    used |= bit(v);
    return true;
  };
  for (const auto* tri : {&w.triangle_a, &w.triangle_b}) {
    for (int v : *tri)
      if (!fresh(v)) return false;
    const auto& t = *tri;
    if (!g.adjacent(t[0], t[1]) || !g.adjacent(t[1], t[2]) || !g.adjacent(t[0], t[2])) return false;
    edges += 3;
  }
  for (int t = 0; t < 3; ++t) {
    const auto& p = w.paths[t];
    if (p.size() < 2 || p.front() != w.triangle_a[t] || p.back() != w.triangle_b[t]) return false;
    if (!parity_matches(static_cast<int>(p.size()) - 1, parity)) return false;
    for (std::size_t i = 1; i + 1 < p.size(); ++i)
      if (!fresh(p[i])) return false;
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
      if (!g.adjacent(p[i], p[i + 1])) return false;
    edges += static_cast<int>(p.size()) - 1;
  }
  return used == w.vertices && induced_edge_count(g, used) == edges;
}

Graph dart() {
  const std::pair<int, int> e[] = {{0, 1}, {1, 2}, {0, 4}, {1, 4}, {2, 4}, {3, 4}};
  return Graph::from_edges(5, e);
}

namespace {

void for_each_dart(const Graph& g, const std::function<bool(const std::vector<int>&)>& emit) {
  const int n = g.order();
  if (n < 5) return;
  const CanonicalForm target = canonical_form(dart());
  std::vector<int> pick(5);
  std::function<bool(int, int)> go = [&](int depth, int from) {
    if (depth == 5) {
      const VertexMask s = vertices_mask(pick);
      if (induced_edge_count(g, s) != 6) return true;
      std::array<int, 5> deg{};
      for (int i = 0; i < 5; ++i) deg[i] = popcount(g.neighbors(pick[i]) & s);
      std::sort(deg.begin(), deg.end());
      if (deg != std::array<int, 5>{1, 2, 2, 3, 4}) return true;
      if (canonical_form(induced(g, s)) != target) return true;
      return emit(pick);
    }
    for (int v = from; v <= n - (5 - depth); ++v) {
      pick[depth] = v;
      if (!go(depth + 1, v + 1)) return false;
    }
    return true;
  };
  go(0, 0);
}

}  // namespace

std::vector<std::vector<int>> find_darts(const Graph& g) {
  std::vector<std::vector<int>> out;
  for_each_dart(g, [&](const std::vector<int>& d) {
    out.push_back(d);
    return true;
  });
  return out;
}

bool is_perfect(const Graph& g) {
  return !first_hole(g, Parity::odd) && !first_hole(complement(g), Parity::odd);
}

bool is_weakly_chordal(const Graph& g) { return !first_hole(g, Parity::any) && !first_hole(complement(g), Parity::any); }

std::optional<std::vector<int>> find_meyniel_violation(const Graph& g) {
  // All simple cycles through their minimum vertex, one orientation each.
  std::optional<std::vector<int>> found;
  std::vector<int> path;
  std::function<void(int, VertexMask)> go = [&](int start, VertexMask in_path) {
    const int tip = path.back();
    const int len = static_cast<int>(path.size());
    if (len >= 5 && len % 2 == 1 && g.adjacent(tip, start) && tip > path[1]) {
      const VertexMask s = in_path;
      if (induced_edge_count(g, s) - len < 2) {
        found = path;
        return;
      }
    }
    for (VertexMask m = g.neighbors(tip) & ~in_path & ~low_mask(start + 1); m && !found; m &= m - 1) {
      const int w = lowest(m);
      path.push_back(w);
      go(start, in_path | bit(w));
      path.pop_back();
    }
  };
  for (int s = 0; s < g.order() && !found; ++s) {
    path = {s};
    go(s, bit(s));
  }
  return found;
}

bool is_meyniel(const Graph& g) { return !find_meyniel_violation(g); }

std::vector<std::array<int, 4>> induced_p4s(const Graph& g) {
  std::vector<std::array<int, 4>> out;
  for (int b = 0; b < g.order(); ++b) {
    for (VertexMask mc = g.neighbors(b) & ~low_mask(b + 1); mc; mc &= mc - 1) {
      const int c = lowest(mc);
      const VertexMask as = g.neighbors(b) & ~g.neighbors(c) & ~bit(c);
      const VertexMask ds = g.neighbors(c) & ~g.neighbors(b) & ~bit(b);
      for (VertexMask ma = as; ma; ma &= ma - 1)
        for (VertexMask md = ds & ~g.neighbors(lowest(ma)); md; md &= md - 1)
          out.push_back({lowest(ma), b, c, lowest(md)});
    }
  }
  return out;
}

bool is_perfect_ordering(const Graph& g, std::span<const int> order) {
  const int n = g.order();
  if (static_cast<int>(order.size()) != n) return false;
  std::vector<int> pos(n, -1);
  for (int i = 0; i < n; ++i) {
    if (order[i] < 0 || order[i] >= n || pos[order[i]] >= 0) return false;
    pos[order[i]] = i;
  }
  for (const auto& p : induced_p4s(g))
    if (pos[p[0]] < pos[p[1]] && pos[p[3]] < pos[p[2]]) return false;
  return true;
}

std::optional<std::vector<int>> find_perfect_ordering(const Graph& g) {
  const int n = g.order();
  const auto p4s = induced_p4s(g);
  std::vector<std::vector<int>> touching(n);
  for (std::size_t i = 0; i < p4s.size(); ++i)
    for (int v : p4s[i]) touching[v].push_back(static_cast<int>(i));
  std::vector<int> pos(n, -1), order;
  // Relation "u before v" once at least one of them is placed.
  auto before = [&](int u, int v) { return pos[u] >= 0 && (pos[v] < 0 || pos[u] < pos[v]); };
  std::function<bool()> go = [&]() {
    if (static_cast<int>(order.size()) == n) return true;
    for (int v = 0; v < n; ++v) {
      if (pos[v] >= 0) continue;
      pos[v] = static_cast<int>(order.size());
      bool ok = true;
      for (int i : touching[v]) {
        const auto& p = p4s[i];
        if (before(p[0], p[1]) && before(p[3], p[2])) {
          ok = false;
          break;
        }
      }
      if (ok) {
        order.push_back(v);
        if (go()) return true;
        order.pop_back();
      }
      pos[v] = -1;
    }
    return false;
  };
  if (go()) return order;
  return std::nullopt;
}

int greedy_color_count(const Graph& g, std::span<const int> order) {
  std::vector<int> color(g.order(), -1);
  int used = 0;
  for (int v : order) {
    VertexMask taken = 0;
    for (VertexMask m = g.neighbors(v); m; m &= m - 1)
      if (color[lowest(m)] >= 0) taken |= bit(color[lowest(m)]);
    color[v] = lowest(~taken);
    used = std::max(used, color[v] + 1);
  }
  return used;
}

std::vector<std::pair<int, int>> adjacent_twins(const Graph& g) {
  std::vector<std::pair<int, int>> out;
  for (auto [u, v] : g.edges())
    if ((g.neighbors(u) & ~bit(v)) == (g.neighbors(v) & ~bit(u))) out.emplace_back(u, v);
  return out;
}

namespace {

// Shrinks a non-perfectly-orderable vertex set by deleting vertices while the
// induced subgraph stays non-orderable.
std::vector<int> minimal_unorderable(const Graph& g) {
  VertexMask s = g.all();
  for (int v = 0; v < g.order(); ++v) {
    const VertexMask t = s & ~bit(v);
    if (!find_perfect_ordering(induced(g, t))) s = t;
  }
  return mask_vertices(s);
}

}  // namespace

ClassReport everett_reed_class(const Graph& g) {
  ClassReport r;
  const Graph co = complement(g);
  const auto odd_hole = first_hole(g, Parity::odd);
  const auto odd_antihole = first_hole(co, Parity::odd);
  const auto hole = odd_hole ? odd_hole : first_hole(g, Parity::any);
  const auto antihole = odd_antihole ? odd_antihole : first_hole(co, Parity::any);
  const auto odd_prism = first_prism(g, Parity::odd);
  const auto even_prism = first_prism(g, Parity::even);
  std::optional<std::vector<int>> a_dart;
  for_each_dart(g, [&](const std::vector<int>& d) {
    a_dart = d;
    return false;
  });
  const auto meyniel_cycle = find_meyniel_violation(g);
  const auto ordering = find_perfect_ordering(g);

  auto note = [&](const char* flag, const char* kind, std::vector<int> vertices) {
    std::sort(vertices.begin(), vertices.end());
    r.witnesses.emplace_back(flag, std::move(vertices));
    r.witness_kinds.emplace_back(flag, kind);
  };

  r.perfect = !odd_hole && !odd_antihole;
  if (odd_hole)
    note("perfect", "odd_hole", *odd_hole);
  else if (odd_antihole)
    note("perfect", "odd_antihole", *odd_antihole);

  r.weakly_chordal = !hole && !antihole;
  if (hole)
    note("weakly_chordal", "hole", *hole);
  else if (antihole)
    note("weakly_chordal", "antihole", *antihole);

  r.meyniel = !meyniel_cycle;
  if (meyniel_cycle) note("meyniel", "odd_cycle_few_chords", *meyniel_cycle);

  r.dart_free = !a_dart;
  if (a_dart) note("dart_free", "dart", *a_dart);

  r.even_prism_free = !even_prism;
  if (even_prism) note("even_prism_free", "even_prism", even_prism->vertex_list());

  r.perfectly_orderable = ordering.has_value();
  if (!ordering) note("perfectly_orderable", "not_orderable", minimal_unorderable(g));

  r.everett_reed = !odd_hole && !antihole && !odd_prism;
  if (odd_hole)
    note("everett_reed", "odd_hole", *odd_hole);
  else if (antihole)
    note("everett_reed", "antihole", *antihole);
  else if (odd_prism)
    note("everett_reed", "odd_prism", odd_prism->vertex_list());
  return r;
}

const char* to_string(SearchOutcome o) {
  switch (o) {
    case SearchOutcome::found: return "found";
    case SearchOutcome::absent: return "absent";
    case SearchOutcome::budget_exhausted: return "budget_exhausted";
  }
  return "?";
}

}  // namespace stabring
