#include "stabring/coloring.hpp"

#include <algorithm>
#include <charconv>
#include <deque>

#include "stabring/disjoint_sets.hpp"
#include "stabring/error.hpp"

namespace stabring {

bool is_proper(const Graph& g, const Coloring& f) {
  if (static_cast<int>(f.colors.size()) != g.order()) return false;
  for (int c : f.colors)
    if (c < 1 || c > f.k) return false;
  for (auto [u, v] : g.edges())
    if (f.colors[u] == f.colors[v]) return false;
  return true;
}

void require_proper(const Graph& g, const Coloring& f) {
  if (static_cast<int>(f.colors.size()) != g.order())
    throw Error(ErrorKind::argument, "coloring has " + std::to_string(f.colors.size()) + " entries for " +
                                         std::to_string(g.order()) + " vertices");
  if (!is_proper(g, f)) throw Error(ErrorKind::argument, "coloring is not a proper " + std::to_string(f.k) + "-coloring");
}

VertexMask color_class(const Coloring& f, int c) {
  VertexMask m = 0;
  for (std::size_t v = 0; v < f.colors.size(); ++v)
    if (f.colors[v] == c) m |= bit(static_cast<int>(v));
  return m;
}

namespace {

bool extend(const Graph& g, int v, Coloring& f, const std::function<bool(const Coloring&)>& visit) {
  if (v == g.order()) return visit(f);
  for (int c = 1; c <= f.k; ++c) {
    bool clash = false;
    for (VertexMask m = g.neighbors(v) & low_mask(v); m && !clash; m &= m - 1) clash = f.colors[lowest(m)] == c;
    if (clash) continue;
    f.colors[v] = c;
    if (!extend(g, v + 1, f, visit)) return false;
  }
  f.colors[v] = 0;
  return true;
}

}  // namespace

void for_each_coloring(const Graph& g, int k, const std::function<bool(const Coloring&)>& visit) {
  if (k < 0) throw Error(ErrorKind::argument, "k must be non-negative");
  Coloring f{k, std::vector<int>(g.order(), 0)};
  extend(g, 0, f, visit);
}

std::vector<Coloring> enumerate_colorings(const Graph& g, int k) {
  std::vector<Coloring> out;
  for_each_coloring(g, k, [&](const Coloring& f) {
    out.push_back(f);
    return true;
  });
  return out;
}

std::uint64_t count_colorings(const Graph& g, int k) {
  std::uint64_t count = 0;
  for_each_coloring(g, k, [&](const Coloring&) {
    ++count;
    return true;
  });
  return count;
}

std::vector<VertexMask> components_within(const Graph& g, VertexMask vertices) {
  std::vector<VertexMask> out;
  VertexMask rest = vertices;
  while (rest) {
    VertexMask comp = bit(lowest(rest)), frontier = comp;
    while (frontier) {
      VertexMask next = 0;
      for (VertexMask m = frontier; m; m &= m - 1) next |= g.neighbors(lowest(m));
      next &= vertices & ~comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    rest &= ~comp;
  }
  return out;
}

namespace {

void check_color_pair(const Coloring& f, int i, int j) {
  if (i == j) throw Error(ErrorKind::argument, "Kempe colors must differ");
  if (i < 1 || j < 1 || i > f.k || j > f.k)
    throw Error(ErrorKind::argument, "Kempe colors must lie in 1.." + std::to_string(f.k));
}

}  // namespace

std::vector<VertexMask> kempe_components(const Graph& g, const Coloring& f, int i, int j) {
  check_color_pair(f, i, j);
  return components_within(g, color_class(f, i) | color_class(f, j));
}

Coloring kempe_switch(const Graph& g, const Coloring& f, int i, int j, VertexMask component) {
  const auto comps = kempe_components(g, f, i, j);
  if (std::find(comps.begin(), comps.end(), component) == comps.end())
    throw Error(ErrorKind::argument, "not a Kempe component for colors " + std::to_string(i) + "," + std::to_string(j));
  Coloring out = f;
  for (VertexMask m = component; m; m &= m - 1) {
    int& c = out.colors[lowest(m)];
    c = c == i ? j : i;
  }
  return out;
}

std::vector<int> KempePartition::class_sizes() const {
  std::vector<int> sizes(class_count, 0);
  for (int c : class_of) ++sizes[c];
  return sizes;
}

std::vector<int> KempePartition::representatives() const {
  std::vector<int> reps(class_count, -1);
  for (std::size_t i = 0; i < class_of.size(); ++i)
    if (reps[class_of[i]] < 0) reps[class_of[i]] = static_cast<int>(i);
  return reps;
}

namespace {

// Every coloring reachable from f by one switch, as indices into `all`.
template <typename Visit>
void for_each_switch(const Graph& g, const std::vector<Coloring>& all, const Coloring& f, Visit&& visit) {
  std::vector<VertexMask> classes(f.k + 1, 0);
  for (int v = 0; v < g.order(); ++v) classes[f.colors[v]] |= bit(v);
  for (int i = 1; i <= f.k; ++i) {
    for (int j = i + 1; j <= f.k; ++j) {
      if (!classes[i] && !classes[j]) continue;
      for (VertexMask comp : components_within(g, classes[i] | classes[j])) {
        Coloring h = f;
        for (VertexMask m = comp; m; m &= m - 1) {
          int& c = h.colors[lowest(m)];
          c = c == i ? j : i;
        }
        const auto it = std::lower_bound(all.begin(), all.end(), h);
        visit(static_cast<std::size_t>(it - all.begin()));
      }
    }
  }
}

}  // namespace

KempePartition kempe_classes(const Graph& g, int k) {
  KempePartition p;
  p.colorings = enumerate_colorings(g, k);
  DisjointSets sets(p.colorings.size());
  for (std::size_t idx = 0; idx < p.colorings.size(); ++idx)
    for_each_switch(g, p.colorings, p.colorings[idx], [&](std::size_t other) { sets.unite(idx, other); });
  std::vector<int> label(p.colorings.size(), -1);
  p.class_of.resize(p.colorings.size());
  for (std::size_t idx = 0; idx < p.colorings.size(); ++idx) {
    const std::size_t root = sets.find(idx);
    if (label[root] < 0) label[root] = p.class_count++;
    p.class_of[idx] = label[root];
  }
  return p;
}

bool all_kempe_equivalent(const Graph& g, int k) {
  const std::vector<Coloring> all = enumerate_colorings(g, k);
  if (all.size() <= 1) return true;
  std::vector<char> seen(all.size(), 0);
  std::deque<std::size_t> queue{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!queue.empty()) {
    const std::size_t idx = queue.front();
    queue.pop_front();
    bool done = false;
    for_each_switch(g, all, all[idx], [&](std::size_t other) {
      if (seen[other]) return;
      seen[other] = 1;
      queue.push_back(other);
      done = ++reached == all.size();
    });
    if (done || reached == all.size()) return true;
  }
  return false;
}

std::string format_coloring(const Coloring& f) {
  std::string out;
  for (std::size_t v = 0; v < f.colors.size(); ++v) {
    if (v) out.push_back(',');
    out += std::to_string(f.colors[v]);
  }
  return out;
}

Coloring parse_coloring(std::string_view text, int k) {
  Coloring f{k, {}};
  std::size_t pos = 0;
  while (pos <= text.size() && !text.empty()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::size_t first = pos, last = end;
    while (first < last && (text[first] == ' ' || text[first] == '\t')) ++first;
    while (last > first && (text[last - 1] == ' ' || text[last - 1] == '\t')) --last;
    int c = 0;
    auto [ptr, ec] = std::from_chars(text.data() + first, text.data() + last, c);
    if (first == last || ec != std::errc{} || ptr != text.data() + last)
      throw Error(ErrorKind::parse, "coloring: bad entry at byte " + std::to_string(pos));
    if (c < 1 || c > k) throw Error(ErrorKind::validation, "coloring: color out of range 1.." + std::to_string(k));
    f.colors.push_back(c);
    pos = end + 1;
  }
  return f;
}

}  // namespace stabring
