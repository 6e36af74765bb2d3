#pragma once

// Structural graph theory: even pairs and even-contractile sequences, induced
// holes / antiholes / prisms / darts, and the graph classes built on them.
// Everything here is exhaustive search meant for graphs of about ten vertices.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "stabring/graph.hpp"

namespace stabring {

// Non-adjacent x, y such that every induced x-y path has an even number of
// edges. Adjacent pairs are never even pairs; x == y is an error.
bool is_even_pair(const Graph& g, int x, int y);
std::vector<std::pair<int, int>> even_pairs(const Graph& g);

struct ContractionStep {
  Graph graph;  // the graph before this contraction
  int x = 0;
  int y = 0;
};

struct ContractionSequence {
  std::vector<ContractionStep> steps;
  Graph final_graph;
};

enum class SearchOutcome { found, absent, budget_exhausted };

struct ContractionSearch {
  SearchOutcome outcome = SearchOutcome::absent;
  std::optional<ContractionSequence> sequence;
  std::uint64_t nodes = 0;
};

inline constexpr std::uint64_t kDefaultContractionBudget = 1'000'000;

// Depth-first search over even-pair contractions, trying pairs in
// lexicographic order. Failed graphs are memoized up to isomorphism.
ContractionSearch even_contractile_sequence(const Graph& g, std::uint64_t budget = kDefaultContractionBudget);

// Replays the sequence from g, re-checking every pair; true iff each step
// contracts an even pair of the recorded graph and the result is complete.
bool replay_contraction_sequence(const Graph& g, const ContractionSequence& seq);

struct ContractilityCheck {
  SearchOutcome outcome = SearchOutcome::found;  // found = perfectly contractile
  std::vector<int> counterexample;              // induced subgraph that is not even-contractile
  std::uint64_t nodes = 0;
};

// Every induced subgraph (deduplicated up to isomorphism) must be
// even-contractile. The budget is shared across all subgraphs.
ContractilityCheck is_perfectly_contractile(const Graph& g, std::uint64_t budget = kDefaultContractionBudget);

enum class Parity { any, odd, even };

// Induced cycles of length >= 5, each listed from its minimum vertex in the
// direction of its smaller neighbour.
std::vector<std::vector<int>> find_holes(const Graph& g, Parity parity = Parity::any);
std::vector<std::vector<int>> find_odd_holes(const Graph& g);
// Vertex sets whose complement is a hole, listed in hole order of the complement.
std::vector<std::vector<int>> find_antiholes(const Graph& g, Parity parity = Parity::any);

struct PrismWitness {
  std::array<int, 3> triangle_a{};
  std::array<int, 3> triangle_b{};
  std::array<std::vector<int>, 3> paths;  // paths[t] runs from triangle_a[t] to a vertex of triangle_b
  VertexMask vertices = 0;

  std::vector<int> vertex_list() const { return mask_vertices(vertices); }
};

// Two vertex-disjoint triangles joined by three vertex-disjoint paths, all of
// the requested parity, inducing nothing beyond those edges. One witness per
// vertex set.
std::vector<PrismWitness> find_prisms(const Graph& g, Parity parity);
// Definition-level check used to validate witnesses.
bool is_prism(const Graph& g, const PrismWitness& w, Parity parity);

// The dart: edges 12, 23, 15, 25, 35, 45.
Graph dart();
std::vector<std::vector<int>> find_darts(const Graph& g);

bool is_perfect(const Graph& g);
bool is_weakly_chordal(const Graph& g);

// An odd cycle of length >= 5 with fewer than two chords, if any.
std::optional<std::vector<int>> find_meyniel_violation(const Graph& g);
bool is_meyniel(const Graph& g);

// Induced P4s a-b-c-d, one orientation each.
std::vector<std::array<int, 4>> induced_p4s(const Graph& g);
// No induced P4 abcd with a < b and d < c in the order.
bool is_perfect_ordering(const Graph& g, std::span<const int> order);
std::optional<std::vector<int>> find_perfect_ordering(const Graph& g);
// Colors used by first-fit coloring along `order`.
int greedy_color_count(const Graph& g, std::span<const int> order);

std::vector<std::pair<int, int>> adjacent_twins(const Graph& g);

struct ClassReport {
  bool perfect = false;
  bool weakly_chordal = false;
  bool meyniel = false;
  bool dart_free = false;
  bool even_prism_free = false;
  bool perfectly_orderable = false;
  bool everett_reed = false;  // no odd hole, no antihole, no odd prism

  // For each false flag, a vertex list (0-based) of an induced witness.
  std::vector<std::pair<std::string, std::vector<int>>> witnesses;
  // Witness kind behind each false flag ("odd_hole", "antihole", "odd_prism", ...).
  std::vector<std::pair<std::string, std::string>> witness_kinds;
};

ClassReport everett_reed_class(const Graph& g);

const char* to_string(SearchOutcome o);

}  // namespace stabring
