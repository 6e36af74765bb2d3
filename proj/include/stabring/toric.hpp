#pragma once

// The stable set ideal I_G, handled combinatorially.
//
// Variables x_i are indexed by the stable sets S_i of G. A monomial is a
// multiset of stable-set indices; its multidegree counts, for each vertex p,
// how many factors contain p. A homogeneous binomial lies in I_G exactly when
// both sides have the same multidegree, so I_G is spanned fiber by fiber:
// the fiber of (k, a) is the set of all degree-k monomials of multidegree a.
//
// Degree-k monomials correspond to k-colorings of replication graphs: color
// class l of a coloring of G_a projects to the stable set of base vertices
// having a copy of color l. Quadratic generation is decided either by fiber
// connectivity under quadratic moves or by Kempe connectivity of colorings.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "stabring/coloring.hpp"
#include "stabring/graph.hpp"

namespace stabring {

// All stable sets of a graph, including the empty set, ordered by size and
// then lexicographically by sorted vertex list.
class StableFamily {
 public:
  static constexpr std::size_t kDefaultLimit = std::size_t{1} << 22;

  StableFamily() = default;
  explicit StableFamily(const Graph& g, std::size_t limit = kDefaultLimit);

  int vertex_count() const { return n_; }
  int size() const { return static_cast<int>(sets_.size()); }
  VertexMask set(int index) const { return sets_[index]; }
  const std::vector<VertexMask>& sets() const { return sets_; }
  std::optional<int> index_of(VertexMask s) const;
  int max_set_size() const { return max_size_; }

 private:
  int n_ = 0;
  int max_size_ = 0;
  std::vector<VertexMask> sets_;
  std::unordered_map<VertexMask, int> index_;
};

StableFamily stable_sets(const Graph& g);

// Multiset of stable-set indices, kept sorted ascending.
struct Monomial {
  std::vector<int> factors;

  Monomial() = default;
  explicit Monomial(std::vector<int> f);
  int degree() const { return static_cast<int>(factors.size()); }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

struct Binomial {
  Monomial lhs;
  Monomial rhs;
};

ReplicationVector multidegree(const StableFamily& family, const Monomial& m);

// phi_k: the monomial of a k-coloring f of G_a, one factor per color (unused
// colors contribute the empty set). `family` must be stable_sets(r.base).
Monomial coloring_to_monomial(const StableFamily& family, const ReplicationGraph& r, const Coloring& f);

struct ColoredReplication {
  ReplicationVector a;
  Coloring coloring;  // a coloring of G_a, copies laid out as in replication()
};

// Inverse direction: factor l of m becomes color l, given to the lowest
// uncolored copy of each vertex in S_{i_l}.
ColoredReplication monomial_to_coloring(const StableFamily& family, const Monomial& m);

// Same degree required; true iff the multidegrees agree.
bool binomial_in_ideal(const StableFamily& family, const Binomial& b);

// A fiber stored flat: monomial i occupies factors [i*degree, (i+1)*degree),
// monomials sorted lexicographically.
class Fiber {
 public:
  Fiber(int degree, ReplicationVector multidegree);

  int degree() const { return degree_; }
  const ReplicationVector& multidegree() const { return multidegree_; }
  std::size_t size() const { return data_.size() / degree_; }
  std::span<const std::uint16_t> factors(std::size_t i) const {
    return {data_.data() + i * degree_, static_cast<std::size_t>(degree_)};
  }
  Monomial monomial(std::size_t i) const;
  std::optional<std::size_t> find(std::span<const std::uint16_t> factors) const;
  bool contains(const Monomial& m) const;

  // Appends in lexicographic order (enumeration order).
  void push(std::span<const std::uint16_t> factors) { data_.insert(data_.end(), factors.begin(), factors.end()); }

 private:
  int degree_;
  ReplicationVector multidegree_;
  std::vector<std::uint16_t> data_;
};

// All degree-k monomials over `family` with multidegree exactly a.
Fiber enumerate_fiber(const StableFamily& family, const ReplicationVector& a, int k);

struct FiberComponents {
  std::vector<int> component_of;  // numbered by first occurrence
  int count = 0;
};

// Components of the fiber under quadratic moves
// M -> (M / x_p x_q) x_p' x_q' with x_p x_q - x_p' x_q' in I_G.
FiberComponents quadratic_components(const StableFamily& family, const Fiber& fiber);
bool fiber_quadratic_connected(const StableFamily& family, const Fiber& fiber);

enum class QuadraticStatus { non_quadratic, quadratic_up_to_bounds };
enum class DeciderMethod { kempe, fiber, both };

struct QuadraticityVerdict {
  QuadraticStatus status = QuadraticStatus::quadratic_up_to_bounds;
  std::optional<Binomial> witness;
  ReplicationVector witness_multidegree;  // set with the witness
  int degree_bound = 0;
  DeciderMethod method = DeciderMethod::fiber;
  // Witness re-checked by the fiber oracle: in I_G, and its two sides lie
  // in different quadratic-move components of their fiber.
  bool witness_verified = false;
  std::uint64_t fibers_checked = 0;
};

// Scans k = 3..degree_bound and, for each k, every multidegree a in
// {0..k}^n in lexicographic order. The first disconnected fiber yields
// NonQuadratic with the lexicographically smallest monomial and the smallest
// monomial outside its component.
QuadraticityVerdict is_quadratic_fiber(const Graph& g, int degree_bound);

// Same scan over replication graphs G_a: colorings of G_a, taken up to color
// permutation and permutation of copies (the fibers of phi_k), are joined
// by Kempe switchings; two colorings in different Kempe classes witness
// NonQuadratic.
QuadraticityVerdict is_quadratic_kempe(const Graph& g, int degree_bound);

// Re-checks a witness against the fiber model. Used before a verdict leaves
// either decider.
bool verify_witness(const StableFamily& family, const Binomial& witness);

struct GeneratorDegree {
  int degree = 0;
  std::uint64_t fibers = 0;      // fibers needing new generators at this degree
  std::uint64_t generators = 0;  // sum of (components - 1) over those fibers
};

// Degrees 2..degree_bound at which I_G needs minimal generators. A fiber of
// degree k needs (c - 1) new generators where c counts the components of the
// graph joining monomials that share a variable (i.e. that are connected by
// moves of degree < k). Computed without listing the fiber: c also counts the
// components on the variables occurring in it, two variables being joined
// when one monomial holds both, and occurrence is a covering question on G_a.
std::vector<GeneratorDegree> minimal_generator_degrees(const Graph& g, int degree_bound);

std::string format_stable_set(VertexMask s);  // "{1,5}", 1-based
std::string format_monomial(const StableFamily& family, const Monomial& m);
std::string format_binomial(const StableFamily& family, const Binomial& b);
const char* to_string(QuadraticStatus s);
const char* to_string(DeciderMethod m);

}  // namespace stabring
