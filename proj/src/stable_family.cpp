#include <algorithm>

#include "stabring/error.hpp"
#include "stabring/toric.hpp"

namespace stabring {

namespace {

void collect_stable(const Graph& g, int v, VertexMask current, VertexMask blocked, std::vector<VertexMask>& out,
                    std::size_t limit) {
  if (v == g.order()) {
    if (out.size() >= limit) throw Error(ErrorKind::limit, "too many stable sets");
    out.push_back(current);
    return;
  }
  collect_stable(g, v + 1, current, blocked, out, limit);
  if (!((blocked >> v) & 1U)) collect_stable(g, v + 1, current | bit(v), blocked | g.neighbors(v), out, limit);
}

// Same size: the set owning the lowest differing vertex comes first.
bool family_less(VertexMask a, VertexMask b) {
  const int pa = popcount(a), pb = popcount(b);
  if (pa != pb) return pa < pb;
  if (a == b) return false;
  return (a >> lowest(a ^ b)) & 1U;
}

}  // namespace

StableFamily::StableFamily(const Graph& g, std::size_t limit) : n_(g.order()) {
  collect_stable(g, 0, 0, 0, sets_, limit);
  std::sort(sets_.begin(), sets_.end(), family_less);
  index_.reserve(sets_.size());
  for (std::size_t i = 0; i < sets_.size(); ++i) {
    index_.emplace(sets_[i], static_cast<int>(i));
    max_size_ = std::max(max_size_, popcount(sets_[i]));
  }
}

std::optional<int> StableFamily::index_of(VertexMask s) const {
  const auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

StableFamily stable_sets(const Graph& g) { return StableFamily(g); }

Monomial::Monomial(std::vector<int> f) : factors(std::move(f)) { std::sort(factors.begin(), factors.end()); }

ReplicationVector multidegree(const StableFamily& family, const Monomial& m) {
  ReplicationVector a{std::vector<int>(family.vertex_count(), 0)};
  for (int idx : m.factors) {
    if (idx < 0 || idx >= family.size()) throw Error(ErrorKind::argument, "stable set index out of range");
    for (VertexMask s = family.set(idx); s; s &= s - 1) ++a.counts[lowest(s)];
  }
  return a;
}

Monomial coloring_to_monomial(const StableFamily& family, const ReplicationGraph& r, const Coloring& f) {
  if (family.vertex_count() != r.base.order())
    throw Error(ErrorKind::argument, "stable family does not belong to the base graph");
  require_proper(r.graph, f);
  std::vector<VertexMask> projected(f.k, 0);
  for (int v = 0; v < r.graph.order(); ++v) projected[f.colors[v] - 1] |= bit(r.origin[v]);
  std::vector<int> factors;
  factors.reserve(f.k);
  for (VertexMask s : projected) {
    const auto idx = family.index_of(s);
    // A proper coloring of G_a always projects to stable sets.
    if (!idx) throw Error(ErrorKind::validation, "color class " + format_stable_set(s) + " is not stable");
    factors.push_back(*idx);
  }
  return Monomial(std::move(factors));
}

ColoredReplication monomial_to_coloring(const StableFamily& family, const Monomial& m) {
  ColoredReplication out{multidegree(family, m), Coloring{m.degree(), {}}};
  std::vector<int> start(family.vertex_count() + 1, 0);
  for (int i = 0; i < family.vertex_count(); ++i) start[i + 1] = start[i] + out.a.counts[i];
  out.coloring.colors.assign(start.back(), 0);
  std::vector<int> next = start;
  for (int l = 0; l < m.degree(); ++l)
    for (VertexMask s = family.set(m.factors[l]); s; s &= s - 1) out.coloring.colors[next[lowest(s)]++] = l + 1;
  return out;
}

bool binomial_in_ideal(const StableFamily& family, const Binomial& b) {
  if (b.lhs.degree() != b.rhs.degree())
    throw Error(ErrorKind::argument, "binomial sides have degrees " + std::to_string(b.lhs.degree()) + " and " +
                                         std::to_string(b.rhs.degree()));
  return multidegree(family, b.lhs) == multidegree(family, b.rhs);
}

std::string format_stable_set(VertexMask s) {
  std::string out = "{";
  bool first = true;
  for (int v : mask_vertices(s)) {
    if (!first) out.push_back(',');
    out += std::to_string(v + 1);
    first = false;
  }
  out.push_back('}');
  return out;
}

std::string format_monomial(const StableFamily& family, const Monomial& m) {
  std::string out = "[";
  for (int i = 0; i < m.degree(); ++i) {
    if (i) out.push_back(',');
    out += format_stable_set(family.set(m.factors[i]));
  }
  out.push_back(']');
  return out;
}

std::string format_binomial(const StableFamily& family, const Binomial& b) {
  return format_monomial(family, b.lhs) + " - " + format_monomial(family, b.rhs);
}

const char* to_string(QuadraticStatus s) {
  return s == QuadraticStatus::non_quadratic ? "NonQuadratic" : "QuadraticUpToBounds";
}

const char* to_string(DeciderMethod m) {
  switch (m) {
    case DeciderMethod::kempe: return "kempe";
    case DeciderMethod::fiber: return "fiber";
    case DeciderMethod::both: return "both";
  }
  return "?";
}

}  // namespace stabring
