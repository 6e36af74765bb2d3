#include <algorithm>
#include <limits>
#include <unordered_map>

#include "multidegree_scan.hpp"
#include "stabring/disjoint_sets.hpp"
#include "stabring/error.hpp"
#include "stabring/toric.hpp"

namespace stabring {

Fiber::Fiber(int degree, ReplicationVector multidegree) : degree_(degree), multidegree_(std::move(multidegree)) {
  if (degree < 1) throw Error(ErrorKind::argument, "fiber degree must be at least 1");
}

Monomial Fiber::monomial(std::size_t i) const {
  const auto f = factors(i);
  return Monomial(std::vector<int>(f.begin(), f.end()));
}

std::optional<std::size_t> Fiber::find(std::span<const std::uint16_t> key) const {
  std::size_t lo = 0, hi = size();
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    const auto f = factors(mid);
    if (std::lexicographical_compare(f.begin(), f.end(), key.begin(), key.end()))
      lo = mid + 1;
    else
      hi = mid;
  }
  if (lo < size() && std::ranges::equal(factors(lo), key)) return lo;
  return std::nullopt;
}

bool Fiber::contains(const Monomial& m) const {
  if (m.degree() != degree_) return false;
  std::vector<std::uint16_t> key(m.factors.begin(), m.factors.end());
  return find(key).has_value();
}

namespace {

void require_index_range(const StableFamily& family) {
  if (family.size() > std::numeric_limits<std::uint16_t>::max())
    throw Error(ErrorKind::limit, "fiber computations support at most 65535 stable sets");
}

class FiberEnumerator {
 public:
  FiberEnumerator(const StableFamily& family, const ReplicationVector& a, int k, Fiber& out)
      : family_(family), k_(k), remaining_(a.counts), current_(k), out_(out) {
    for (int c : remaining_) sum_ += c;
  }

  void run() {
    for (int c : remaining_)
      if (c < 0 || c > k_) return;
    descend(0, 0);
  }

 private:
  void descend(int depth, int min_index) {
    const int left = k_ - depth;
    if (left == 0) {
      if (sum_ == 0) out_.push(current_);
      return;
    }
    VertexMask support = 0, forced = 0;
    for (std::size_t i = 0; i < remaining_.size(); ++i) {
      const int r = remaining_[i];
      if (r > left) return;
      if (r > 0) support |= bit(static_cast<int>(i));
      if (r == left) forced |= bit(static_cast<int>(i));
    }
    if (sum_ > left * family_.max_set_size()) return;
    if (left == 1) {
      const auto idx = family_.index_of(support);
      if (idx && *idx >= min_index) {
        current_[depth] = static_cast<std::uint16_t>(*idx);
        out_.push(current_);
      }
      return;
    }
    for (int s = min_index; s < family_.size(); ++s) {
      const VertexMask set = family_.set(s);
      const int size = popcount(set);
      // Later factors are at least this large.
      if (size * left > sum_) break;
      if ((set & ~support) || (forced & ~set)) continue;
      for (VertexMask m = set; m; m &= m - 1) --remaining_[lowest(m)];
      sum_ -= size;
      current_[depth] = static_cast<std::uint16_t>(s);
      descend(depth + 1, s);
      sum_ += size;
      for (VertexMask m = set; m; m &= m - 1) ++remaining_[lowest(m)];
    }
  }

  const StableFamily& family_;
  int k_;
  std::vector<int> remaining_;
  int sum_ = 0;
  std::vector<std::uint16_t> current_;
  Fiber& out_;
};

// Degree-2 fibers: pairs {p, q} grouped by the multiset S_p + S_q, which is
// determined by (S_p | S_q, S_p & S_q).
class QuadraticMoves {
 public:
  explicit QuadraticMoves(const StableFamily& family) : m_(family.size()) {
    struct KeyHash {
      std::size_t operator()(const std::pair<VertexMask, VertexMask>& k) const noexcept {
        return std::hash<VertexMask>{}(k.first * 0x9e3779b97f4a7c15ULL ^ k.second);
      }
    };
    std::unordered_map<std::pair<VertexMask, VertexMask>, int, KeyHash> ids;
    group_of_.assign(static_cast<std::size_t>(m_) * m_, -1);
    for (int p = 0; p < m_; ++p) {
      for (int q = p; q < m_; ++q) {
        const VertexMask sp = family.set(p), sq = family.set(q);
        auto [it, fresh] = ids.emplace(std::make_pair(sp | sq, sp & sq), static_cast<int>(groups_.size()));
        if (fresh) groups_.emplace_back();
        groups_[it->second].emplace_back(static_cast<std::uint16_t>(p), static_cast<std::uint16_t>(q));
        group_of_[static_cast<std::size_t>(p) * m_ + q] = it->second;
      }
    }
  }

  // Pairs sharing the degree-2 fiber of {p, q} (p <= q), including itself.
  const std::vector<std::pair<std::uint16_t, std::uint16_t>>& alternatives(int p, int q) const {
    return groups_[group_of_[static_cast<std::size_t>(p) * m_ + q]];
  }

 private:
  int m_;
  std::vector<int> group_of_;
  std::vector<std::vector<std::pair<std::uint16_t, std::uint16_t>>> groups_;
};

void require_moves_size(const StableFamily& family) {
  if (family.size() > 4096) throw Error(ErrorKind::limit, "quadratic moves support at most 4096 stable sets");
}

// Union-find over fiber members joined by quadratic moves. With `stop_early`
// the scan ends as soon as everything is joined.
DisjointSets quadratic_sets(const QuadraticMoves& moves, const Fiber& fiber, bool stop_early) {
  const int k = fiber.degree();
  DisjointSets sets(fiber.size());
  std::vector<std::uint16_t> rest(k), moved(k);
  for (std::size_t idx = 0; idx < fiber.size(); ++idx) {
    if (stop_early && sets.set_count() <= 1) break;
    const auto f = fiber.factors(idx);
    for (int u = 0; u < k; ++u) {
      if (u > 0 && f[u] == f[u - 1]) continue;
      for (int v = u + 1; v < k; ++v) {
        if (v > u + 1 && f[v] == f[v - 1]) continue;
        const auto& alts = moves.alternatives(f[u], f[v]);
        if (alts.size() <= 1) continue;
        // The other k - 2 factors, still sorted.
        int r = 0;
        for (int w = 0; w < k; ++w)
          if (w != u && w != v) rest[r++] = f[w];
        for (auto [p, q] : alts) {
          if (p == f[u] && q == f[v]) continue;
          // Merge rest with the sorted pair (p, q).
          int i = 0, out = 0;
          const std::uint16_t pair[2] = {p, q};
          int j = 0;
          while (i < k - 2 || j < 2) {
            if (j == 2 || (i < k - 2 && rest[i] <= pair[j]))
              moved[out++] = rest[i++];
            else
              moved[out++] = pair[j++];
          }
          const auto other = fiber.find(moved);
          if (other) sets.unite(idx, *other);
        }
      }
    }
  }
  return sets;
}

FiberComponents label_components(DisjointSets& sets) {
  FiberComponents out;
  std::unordered_map<std::size_t, int> label;
  out.component_of.resize(sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i) {
    auto [it, fresh] = label.emplace(sets.find(i), out.count);
    if (fresh) ++out.count;
    out.component_of[i] = it->second;
  }
  return out;
}

}  // namespace

Fiber enumerate_fiber(const StableFamily& family, const ReplicationVector& a, int k) {
  if (k < 1) throw Error(ErrorKind::argument, "fiber degree must be at least 1");
  if (a.size() != family.vertex_count()) throw Error(ErrorKind::argument, "multidegree length mismatch");
  require_index_range(family);
  Fiber fiber(k, a);
  FiberEnumerator(family, a, k, fiber).run();
  return fiber;
}

FiberComponents quadratic_components(const StableFamily& family, const Fiber& fiber) {
  require_moves_size(family);
  const QuadraticMoves moves(family);
  DisjointSets sets = quadratic_sets(moves, fiber, false);
  return label_components(sets);
}

bool fiber_quadratic_connected(const StableFamily& family, const Fiber& fiber) {
  if (fiber.size() <= 1) return true;
  require_moves_size(family);
  const QuadraticMoves moves(family);
  return quadratic_sets(moves, fiber, true).set_count() <= 1;
}

bool verify_witness(const StableFamily& family, const Binomial& witness) {
  if (witness.lhs.degree() != witness.rhs.degree() || witness.lhs.degree() < 1) return false;
  if (witness.lhs == witness.rhs || !binomial_in_ideal(family, witness)) return false;
  const Fiber fiber = enumerate_fiber(family, multidegree(family, witness.lhs), witness.lhs.degree());
  const std::vector<std::uint16_t> lhs(witness.lhs.factors.begin(), witness.lhs.factors.end());
  const std::vector<std::uint16_t> rhs(witness.rhs.factors.begin(), witness.rhs.factors.end());
  const auto i = fiber.find(lhs), j = fiber.find(rhs);
  if (!i || !j) return false;
  const QuadraticMoves moves(family);
  DisjointSets sets = quadratic_sets(moves, fiber, false);
  return sets.find(*i) != sets.find(*j);
}

QuadraticityVerdict is_quadratic_fiber(const Graph& g, int degree_bound) {
  if (degree_bound < 3) throw Error(ErrorKind::argument, "degree bound must be at least 3");
  const StableFamily family(g);
  require_index_range(family);
  require_moves_size(family);
  const QuadraticMoves moves(family);

  QuadraticityVerdict verdict;
  verdict.degree_bound = degree_bound;
  verdict.method = DeciderMethod::fiber;
  for (int k = 3; k <= degree_bound && !verdict.witness; ++k) {
    detail::scan_multidegrees(g, k, [&](const std::vector<int>& a) {
      const Fiber fiber = enumerate_fiber(family, ReplicationVector{a}, k);
      ++verdict.fibers_checked;
      if (fiber.size() <= 1) return true;
      DisjointSets sets = quadratic_sets(moves, fiber, true);
      if (sets.set_count() <= 1) return true;
      // Index 0 is the lexicographically smallest member.
      const std::size_t root = sets.find(0);
      std::size_t other = 1;
      while (sets.find(other) == root) ++other;
      verdict.status = QuadraticStatus::non_quadratic;
      verdict.witness = Binomial{fiber.monomial(0), fiber.monomial(other)};
      verdict.witness_multidegree = ReplicationVector{a};
      return false;
    });
  }
  if (verdict.witness) verdict.witness_verified = verify_witness(family, *verdict.witness);
  return verdict;
}

namespace {

// cover[a] = least number of stable sets summing to the multidegree a, i.e.
// the weighted chromatic number of G_a. Multidegrees with entries 0..top are
// stored in mixed radix (top + 1).
class CoverTable {
 public:
  CoverTable(const StableFamily& family, int top) : n_(family.vertex_count()), radix_(top + 1) {
    double cells = 1;
    for (int i = 0; i < n_; ++i) cells *= radix_;
    if (cells > 64.0 * 1024 * 1024) throw Error(ErrorKind::limit, "degree bound too large for this many vertices");
    place_.resize(n_);
    std::size_t p = 1;
    for (int i = 0; i < n_; ++i, p *= radix_) place_[i] = p;
    cover_.assign(p, 0);
    // Sets maximal in G; intersecting them with a support gives every set
    // maximal within that support.
    std::vector<VertexMask> maximal;
    for (VertexMask s : family.sets()) {
      bool grow = false;
      for (int v = 0; v < n_ && !grow; ++v)
        if (!(s & bit(v)) && family.index_of(s | bit(v))) grow = true;
      if (!grow) maximal.push_back(s);
    }
    std::vector<int> a(n_, 0);
    for (std::size_t idx = 1; idx < cover_.size(); ++idx) {
      for (int i = 0; i < n_; ++i) {
        if (++a[i] < radix_) break;
        a[i] = 0;
      }
      VertexMask support = 0;
      for (int i = 0; i < n_; ++i)
        if (a[i]) support |= bit(i);
      int best = std::numeric_limits<std::uint8_t>::max();
      for (VertexMask m : maximal) {
        const VertexMask s = m & support;
        if (s) best = std::min(best, cover_[idx - offset(s)] + 1);
      }
      cover_[idx] = static_cast<std::uint8_t>(best);
    }
  }

  std::size_t offset(VertexMask s) const {
    std::size_t off = 0;
    for (; s; s &= s - 1) off += place_[lowest(s)];
    return off;
  }
  std::size_t index(const std::vector<int>& a) const {
    std::size_t idx = 0;
    for (int i = 0; i < n_; ++i) idx += a[i] * place_[i];
    return idx;
  }
  int cover(std::size_t idx) const { return cover_[idx]; }

 private:
  int n_;
  int radix_;
  std::vector<std::size_t> place_;
  std::vector<std::uint8_t> cover_;
};

}  // namespace

std::vector<GeneratorDegree> minimal_generator_degrees(const Graph& g, int degree_bound) {
  if (degree_bound < 2) throw Error(ErrorKind::argument, "degree bound must be at least 2");
  const StableFamily family(g);
  const CoverTable table(family, degree_bound);
  std::vector<GeneratorDegree> out;
  std::vector<int> used;
  std::vector<std::size_t> rest;
  for (int k = 2; k <= degree_bound; ++k) {
    GeneratorDegree row{k, 0, 0};
    detail::scan_multidegrees(g, k, [&](const std::vector<int>& a) {
      const std::size_t idx = table.index(a);
      if (table.cover(idx) > k) return true;
      VertexMask support = 0;
      for (int i = 0; i < g.order(); ++i)
        if (a[i]) support |= bit(i);
      // Variables occurring in the fiber, and what is left after removing them.
      used.clear();
      rest.clear();
      for (int s = 0; s < family.size(); ++s) {
        const VertexMask set = family.set(s);
        if (set & ~support) continue;
        const std::size_t r = idx - table.offset(set);
        if (table.cover(r) <= k - 1) {
          used.push_back(s);
          rest.push_back(r);
        }
      }
      if (used.size() <= 1) return true;
      // Two variables are linked when some monomial of the fiber contains both.
      DisjointSets sets(used.size());
      for (std::size_t i = 0; i < used.size(); ++i) {
        const VertexMask si = family.set(used[i]);
        for (std::size_t j = i + 1; j < used.size(); ++j) {
          const VertexMask sj = family.set(used[j]);
          bool fits = true;
          for (VertexMask both = si & sj; both && fits; both &= both - 1) fits = a[lowest(both)] >= 2;
          if (fits && table.cover(rest[i] - table.offset(sj)) <= k - 2) sets.unite(i, j);
        }
      }
      if (sets.set_count() > 1) {
        ++row.fibers;
        row.generators += sets.set_count() - 1;
      }
      return true;
    });
    if (row.fibers) out.push_back(row);
  }
  return out;
}

}  // namespace stabring
