#include <algorithm>

#include "multidegree_scan.hpp"
#include "stabring/disjoint_sets.hpp"
#include "stabring/error.hpp"
#include "stabring/toric.hpp"

namespace stabring {

namespace {

// Colorings of G_a up to permutation of copies and of colors.
//
// Modulo copies, a coloring is a k-column 0/1 matrix over the base vertices:
// column l marks the vertices having a copy of color l, and row j holds a_j
// ones. Rows of adjacent vertices are disjoint. Modulo colors, columns are
// kept in non-increasing lexicographic order (vertex 0 most significant).
class OrbitEnumerator {
 public:
  OrbitEnumerator(const Graph& base, const std::vector<int>& a, int k)
      : base_(base), a_(a), k_(k), rows_(base.order(), 0) {}

  // Each representative is reported as its sorted column masks.
  std::vector<VertexMask> run() {
    const std::uint32_t all_pairs = k_ >= 2 ? (std::uint32_t{1} << (k_ - 1)) - 1 : 0;
    descend(0, all_pairs);
    return std::move(keys_);
  }

 private:
  void descend(int j, std::uint32_t tied) {
    if (j == base_.order()) {
      std::vector<VertexMask> cols(k_, 0);
      for (int v = 0; v < base_.order(); ++v)
        for (std::uint32_t r = rows_[v]; r; r &= r - 1) cols[std::countr_zero(r)] |= bit(v);
      std::sort(cols.begin(), cols.end());
      keys_.insert(keys_.end(), cols.begin(), cols.end());
      return;
    }
    std::uint32_t forbidden = 0;
    for (VertexMask m = base_.neighbors(j) & low_mask(j); m; m &= m - 1) forbidden |= rows_[lowest(m)];
    const std::uint32_t avail = ((std::uint32_t{1} << k_) - 1) & ~forbidden;
    if (a_[j] == 0) {
      rows_[j] = 0;
      descend(j + 1, tied);
      return;
    }
    if (std::popcount(avail) < a_[j]) return;
    for (std::uint32_t sub = avail;; sub = (sub - 1) & avail) {
      if (std::popcount(sub) == a_[j]) {
        // Tied neighbours l, l+1 need bit l >= bit l+1 in this row.
        if (!(tied & ~sub & (sub >> 1))) {
          rows_[j] = sub;
          descend(j + 1, tied & ~(sub ^ (sub >> 1)));
        }
      }
      if (sub == 0) break;
    }
    rows_[j] = 0;
  }

  const Graph& base_;
  const std::vector<int>& a_;
  int k_;
  std::vector<std::uint32_t> rows_;
  std::vector<VertexMask> keys_;
};

struct KeyView {
  const std::vector<VertexMask>* keys;
  int k;
  std::span<const VertexMask> at(std::size_t i) const { return {keys->data() + i * k, static_cast<std::size_t>(k)}; }
  std::size_t size() const { return keys->size() / k; }
};

std::optional<std::size_t> find_key(const KeyView& view, std::span<const VertexMask> key) {
  std::size_t lo = 0, hi = view.size();
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    const auto f = view.at(mid);
    if (std::lexicographical_compare(f.begin(), f.end(), key.begin(), key.end()))
      lo = mid + 1;
    else
      hi = mid;
  }
  if (lo < view.size() && std::ranges::equal(view.at(lo), key)) return lo;
  return std::nullopt;
}

// Sorts keys (groups of k masks) lexicographically.
std::vector<VertexMask> sort_keys(std::vector<VertexMask> flat, int k) {
  const std::size_t count = flat.size() / k;
  std::vector<std::size_t> order(count);
  for (std::size_t i = 0; i < count; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return std::lexicographical_compare(flat.begin() + x * k, flat.begin() + (x + 1) * k, flat.begin() + y * k,
                                        flat.begin() + (y + 1) * k);
  });
  std::vector<VertexMask> out;
  out.reserve(flat.size());
  for (std::size_t i : order) out.insert(out.end(), flat.begin() + i * k, flat.begin() + (i + 1) * k);
  return out;
}

}  // namespace

QuadraticityVerdict is_quadratic_kempe(const Graph& g, int degree_bound) {
  if (degree_bound < 3) throw Error(ErrorKind::argument, "degree bound must be at least 3");
  if (degree_bound > 31) throw Error(ErrorKind::limit, "the Kempe decider supports at most 31 colors");
  const StableFamily family(g);

  QuadraticityVerdict verdict;
  verdict.degree_bound = degree_bound;
  verdict.method = DeciderMethod::kempe;

  for (int k = 3; k <= degree_bound && !verdict.witness; ++k) {
    detail::scan_multidegrees(g, k, [&](const std::vector<int>& a) {
      ++verdict.fibers_checked;
      std::vector<VertexMask> flat = OrbitEnumerator(g, a, k).run();
      if (flat.size() <= static_cast<std::size_t>(k)) return true;
      const std::vector<VertexMask> keys = sort_keys(std::move(flat), k);
      const KeyView view{&keys, k};

      const ReplicationGraph r = replication(g, ReplicationVector{a});
      auto project = [&](VertexMask on_copies) {
        VertexMask out = 0;
        for (VertexMask m = on_copies; m; m &= m - 1) out |= bit(r.origin[lowest(m)]);
        return out;
      };

      DisjointSets sets(view.size());
      std::vector<VertexMask> classes(k), moved(k);
      std::vector<int> next_copy(g.order());
      for (std::size_t idx = 0; idx < view.size() && sets.set_count() > 1; ++idx) {
        // Rebuild a coloring of G_a from the key: color l goes to the lowest
        // unused copy of every vertex in column l.
        const auto key = view.at(idx);
        for (int v = 0; v < g.order(); ++v) next_copy[v] = r.first_copy(v);
        for (int l = 0; l < k; ++l) {
          classes[l] = 0;
          for (VertexMask m = key[l]; m; m &= m - 1) classes[l] |= bit(next_copy[lowest(m)]++);
        }
        for (int i = 0; i < k; ++i) {
          for (int j = i + 1; j < k; ++j) {
            const VertexMask both = classes[i] | classes[j];
            if (!both) continue;
            const auto comps = components_within(r.graph, both);
            if (comps.size() <= 1) continue;  // whole-subgraph switch: same monomial
            for (VertexMask comp : comps) {
              std::copy(key.begin(), key.end(), moved.begin());
              moved[i] = project((classes[i] & ~comp) | (classes[j] & comp));
              moved[j] = project((classes[j] & ~comp) | (classes[i] & comp));
              std::sort(moved.begin(), moved.end());
              const auto other = find_key(view, moved);
              if (!other) throw Error(ErrorKind::validation, "Kempe switch left the fiber");
              sets.unite(idx, *other);
            }
          }
        }
      }
      if (sets.set_count() <= 1) return true;

      // Report in the fiber's monomial order: smallest monomial, and the
      // smallest one in a different Kempe class.
      std::vector<std::pair<Monomial, std::size_t>> monomials;
      monomials.reserve(view.size());
      for (std::size_t idx = 0; idx < view.size(); ++idx) {
        std::vector<int> factors;
        for (VertexMask col : view.at(idx)) factors.push_back(*family.index_of(col));
        monomials.emplace_back(Monomial(std::move(factors)), sets.find(idx));
      }
      std::sort(monomials.begin(), monomials.end());
      std::size_t other = 1;
      while (monomials[other].second == monomials[0].second) ++other;
      verdict.status = QuadraticStatus::non_quadratic;
      verdict.witness = Binomial{monomials[0].first, monomials[other].first};
      verdict.witness_multidegree = ReplicationVector{a};
      return false;
    });
  }
  if (verdict.witness) verdict.witness_verified = verify_witness(family, *verdict.witness);
  return verdict;
}

}  // namespace stabring
