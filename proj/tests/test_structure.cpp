#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "oracles.hpp"
#include "named_graphs.hpp"
#include "stabring/isomorphism.hpp"
#include "stabring/structure.hpp"

using namespace stabring;

namespace {

std::set<std::vector<int>> as_sets(std::vector<std::vector<int>> cycles) {
  std::set<std::vector<int>> out;
  for (auto& c : cycles) {
    std::sort(c.begin(), c.end());
    out.insert(c);
  }
  return out;
}

oracle::Matrix contract(const oracle::Matrix& m, int x, int y) {
  // Merge y into x, drop y.
  const int n = static_cast<int>(m.size());
  std::vector<int> keep;
  for (int v = 0; v < n; ++v)
    if (v != y) keep.push_back(v);
  oracle::Matrix out = oracle::induced(m, keep);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] == x) {
      for (std::size_t j = 0; j < keep.size(); ++j)
        if (keep[j] != x && m[y][keep[j]]) out[i][j] = out[j][i] = true;
    }
  }
  return out;
}

bool complete(const oracle::Matrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (!m[i][j]) return false;
  return true;
}

// Exhaustive even-pair contraction search.
bool even_contractile(const oracle::Matrix& m, std::map<oracle::Matrix, bool>& memo) {
  if (complete(m)) return true;
  if (auto it = memo.find(m); it != memo.end()) return it->second;
  bool ok = false;
  const int n = static_cast<int>(m.size());
  for (int x = 0; x < n && !ok; ++x)
    for (int y = x + 1; y < n && !ok; ++y)
      if (oracle::even_pair(m, x, y)) ok = even_contractile(contract(m, x, y), memo);
  memo[m] = ok;
  return ok;
}

bool perfect_by_definition(const oracle::Matrix& m) {
  const int n = static_cast<int>(m.size());
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
    const oracle::Matrix h = oracle::induced(m, oracle::members(s, n));
    if (oracle::chromatic_number(h) != oracle::clique_number(h)) return false;
  }
  return true;
}

Graph add_adjacent_twin(const Graph& g, int v) {
  std::vector<std::pair<int, int>> e = g.edges();
  const int t = g.order();
  e.emplace_back(v, t);
  for (int u : mask_vertices(g.neighbors(v))) e.emplace_back(u, t);
  return Graph::from_edges(t + 1, e);
}

}  // namespace

TEST_SUITE("even pairs") {
  TEST_CASE("even pairs agree with path enumeration") {
    for (const Graph& g : graphs_up_to(6, false)) {
      const auto m = oracle::matrix(g);
      std::vector<std::pair<int, int>> ref;
      for (int x = 0; x < g.order(); ++x)
        for (int y = x + 1; y < g.order(); ++y) {
          const bool e = oracle::even_pair(m, x, y);
          CHECK(is_even_pair(g, x, y) == e);
          if (e) ref.emplace_back(x, y);
        }
      CHECK(even_pairs(g) == ref);
    }
  }

  TEST_CASE("small examples") {
    CHECK(even_pairs(Graph::cycle(5)).empty());
    CHECK(is_even_pair(Graph::path(3), 0, 2));
    CHECK_FALSE(is_even_pair(Graph::path(4), 0, 3));
    CHECK_FALSE(is_even_pair(Graph::path(3), 0, 1));
    // Pair (2,7) of the example graph, 1-based.
    CHECK(is_even_pair(fixtures::example_graph(), 1, 6));
  }
}

TEST_SUITE("contraction") {
  TEST_CASE("search agrees with an exhaustive search") {
    std::map<oracle::Matrix, bool> memo;
    for (const Graph& g : graphs_up_to(6, false)) {
      const ContractionSearch s = even_contractile_sequence(g);
      REQUIRE(s.outcome != SearchOutcome::budget_exhausted);
      const bool ref = even_contractile(oracle::matrix(g), memo);
      CHECK((s.outcome == SearchOutcome::found) == ref);
      if (s.sequence) {
        CHECK(replay_contraction_sequence(g, *s.sequence));
        CHECK(s.sequence->final_graph.is_complete());
        Graph cur = g;
        for (const ContractionStep& step : s.sequence->steps) {
          CHECK(step.graph == cur);
          CHECK(oracle::even_pair(oracle::matrix(cur), step.x, step.y));
          cur = contract_pair(cur, step.x, step.y);
        }
        CHECK(cur == s.sequence->final_graph);
      }
    }
  }

  TEST_CASE("replay rejects tampered sequences") {
    const Graph g = fixtures::example_graph();
    const ContractionSearch s = even_contractile_sequence(g);
    REQUIRE(s.sequence.has_value());
    CHECK(s.sequence->steps.size() == 3);
    CHECK(s.sequence->steps[0].x == 1);
    CHECK(s.sequence->steps[0].y == 6);
    CHECK(s.sequence->final_graph == Graph::complete(4));
    ContractionSequence bad = *s.sequence;
    bad.steps[0].x = 0;  // (1,7) 1-based is an edge
    CHECK_FALSE(replay_contraction_sequence(g, bad));
    bad = *s.sequence;
    bad.steps.pop_back();
    CHECK_FALSE(replay_contraction_sequence(g, bad));
  }

  TEST_CASE("budget exhaustion is reported") {
    const ContractionSearch s = even_contractile_sequence(fixtures::odd_prism(), 1);
    CHECK(s.outcome != SearchOutcome::found);
    CHECK(std::string(to_string(SearchOutcome::budget_exhausted)) == "budget_exhausted");
  }

  TEST_CASE("perfect contractility") {
    CHECK(is_perfectly_contractile(Graph::path(4)).outcome == SearchOutcome::found);
    const auto c5 = is_perfectly_contractile(Graph::cycle(5));
    CHECK(c5.outcome == SearchOutcome::absent);
    CHECK(c5.counterexample == std::vector<int>{0, 1, 2, 3, 4});
    const auto prism = is_perfectly_contractile(fixtures::odd_prism());
    CHECK(prism.outcome == SearchOutcome::absent);
    CHECK(prism.counterexample.size() == 6);

    std::map<oracle::Matrix, bool> memo;
    for (const Graph& g : graphs_up_to(5, false)) {
      const auto m = oracle::matrix(g);
      bool ref = true;
      for (std::uint64_t s = 1; s < (std::uint64_t{1} << g.order()) && ref; ++s)
        ref = even_contractile(oracle::induced(m, oracle::members(s, g.order())), memo);
      const auto got = is_perfectly_contractile(g);
      CHECK((got.outcome == SearchOutcome::found) == ref);
      if (!ref) CHECK_FALSE(even_contractile(oracle::induced(m, got.counterexample), memo));
    }
  }
}

TEST_SUITE("holes and prisms") {
  TEST_CASE("holes and antiholes agree with subset scans") {
    for (const Graph& g : graphs_up_to(7, false)) {
      const auto m = oracle::matrix(g);
      const auto holes = find_holes(g);
      CHECK(as_sets(holes) == oracle::hole_sets(m));
      CHECK(as_sets(holes).size() == holes.size());
      CHECK(as_sets(find_odd_holes(g)) == oracle::hole_sets(m, 1));
      CHECK(as_sets(find_holes(g, Parity::even)) == oracle::hole_sets(m, 0));
      CHECK(as_sets(find_antiholes(g)) == oracle::hole_sets(oracle::complement(m)));
      for (const auto& c : holes)
        for (std::size_t i = 0; i < c.size(); ++i) CHECK(g.adjacent(c[i], c[(i + 1) % c.size()]));
    }
  }

  TEST_CASE("prisms agree with a subset scan") {
    std::vector<Graph> graphs = graphs_up_to(7, false);
    graphs.push_back(fixtures::even_prism());
    graphs.push_back(fixtures::example_graph());
    for (const Graph& g : graphs) {
      const auto m = oracle::matrix(g);
      for (auto [parity, code] : {std::pair{Parity::odd, 1}, std::pair{Parity::even, 0}}) {
        std::set<std::vector<int>> got;
        for (const PrismWitness& w : find_prisms(g, parity)) {
          CHECK(is_prism(g, w, parity));
          got.insert(w.vertex_list());
        }
        CHECK(got == oracle::prism_sets(m, code));
      }
    }
    CHECK(find_prisms(fixtures::odd_prism(), Parity::odd).size() >= 1);
    CHECK(find_prisms(fixtures::even_prism(), Parity::even).size() >= 1);
    CHECK(find_prisms(fixtures::even_prism(), Parity::odd).empty());
  }

  TEST_CASE("prism validator rejects non-prisms") {
    const Graph g = fixtures::odd_prism();
    PrismWitness w = find_prisms(g, Parity::odd).front();
    CHECK_FALSE(is_prism(g, w, Parity::even));
    std::swap(w.paths[0], w.paths[1]);
    CHECK_FALSE(is_prism(g, w, Parity::odd));
  }
}

TEST_SUITE("graph classes") {
  TEST_CASE("darts") {
    const auto dm = oracle::matrix(dart());
    CHECK(isomorphic(dart(), fixtures::dart_graph()));
    for (const Graph& g : graphs_up_to(7, false)) {
      const auto m = oracle::matrix(g);
      std::set<std::vector<int>> ref;
      for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.order()); ++s)
        if (std::popcount(s) == 5) {
          const auto vs = oracle::members(s, g.order());
          if (oracle::isomorphic(oracle::induced(m, vs), dm)) ref.insert(vs);
        }
      CHECK(as_sets(find_darts(g)) == ref);
    }
  }

  TEST_CASE("perfect, weakly chordal and Meyniel agree with their definitions") {
    for (const Graph& g : graphs_up_to(6, false)) {
      const auto m = oracle::matrix(g);
      CHECK(is_perfect(g) == perfect_by_definition(m));
      CHECK(is_weakly_chordal(g) ==
            (oracle::hole_sets(m).empty() && oracle::hole_sets(oracle::complement(m)).empty()));
      CHECK(is_meyniel(g) == oracle::meyniel(m));
      CHECK(find_meyniel_violation(g).has_value() == !oracle::meyniel(m));
    }
    CHECK_FALSE(is_perfect(Graph::cycle(5)));
    CHECK(is_perfect(fixtures::example_graph()));
    CHECK_FALSE(is_weakly_chordal(fixtures::example_graph()));
  }

  TEST_CASE("perfect orderings") {
    for (const Graph& g : graphs_up_to(5, false)) {
      const auto m = oracle::matrix(g);
      const auto order = find_perfect_ordering(g);
      CHECK(order.has_value() == oracle::perfectly_orderable(m));
      if (order) {
        CHECK(is_perfect_ordering(g, *order));
        CHECK(oracle::perfect_ordering_by_definition(m, *order));
      }
    }
    CHECK_FALSE(find_perfect_ordering(fixtures::example_graph()).has_value());
    CHECK_FALSE(find_perfect_ordering(Graph::cycle(5)).has_value());
  }

  TEST_CASE("orderings of a fixed graph against the definition") {
    const Graph g = Graph::path(5);
    const auto m = oracle::matrix(g);
    std::vector<int> p{0, 1, 2, 3, 4};
    do {
      CHECK(is_perfect_ordering(g, p) == oracle::perfect_ordering_by_definition(m, p));
      CHECK(greedy_color_count(g, p) == oracle::greedy_colors(m, p));
    } while (std::next_permutation(p.begin(), p.end()));
  }

  TEST_CASE("induced P4s") {
    for (const Graph& g : graphs_up_to(6, false)) {
      std::set<std::vector<int>> seen;
      for (const auto& p : induced_p4s(g)) {
        CHECK(g.adjacent(p[0], p[1]));
        CHECK(g.adjacent(p[1], p[2]));
        CHECK(g.adjacent(p[2], p[3]));
        CHECK_FALSE(g.adjacent(p[0], p[2]));
        CHECK_FALSE(g.adjacent(p[1], p[3]));
        CHECK_FALSE(g.adjacent(p[0], p[3]));
        std::vector<int> s(p.begin(), p.end());
        std::sort(s.begin(), s.end());
        CHECK(seen.insert(s).second);
      }
    }
  }

  TEST_CASE("adjacent twins") {
    for (const Graph& g : graphs_up_to(5, false)) {
      std::vector<std::pair<int, int>> ref;
      for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
          if (g.adjacent(u, v) && (g.neighbors(u) & ~bit(v)) == (g.neighbors(v) & ~bit(u))) ref.emplace_back(u, v);
      CHECK(adjacent_twins(g) == ref);
    }
  }
}

TEST_SUITE("class report") {
  TEST_CASE("flags agree with the oracles") {
    for (const Graph& g : graphs_up_to(7, false)) {
      const auto m = oracle::matrix(g);
      const ClassReport r = everett_reed_class(g);
      const bool er = oracle::hole_sets(m, 1).empty() && oracle::hole_sets(oracle::complement(m)).empty() &&
                      oracle::prism_sets(m, 1).empty();
      CHECK(r.everett_reed == er);
      CHECK(r.even_prism_free == oracle::prism_sets(m, 0).empty());
      CHECK(r.dart_free == find_darts(g).empty());
      CHECK(r.perfect == is_perfect(g));
      CHECK(r.weakly_chordal == is_weakly_chordal(g));
      CHECK(r.meyniel == is_meyniel(g));
      if (g.order() <= 5) CHECK(r.perfectly_orderable == oracle::perfectly_orderable(m));
    }
  }

  TEST_CASE("every false flag carries a valid witness") {
    const auto dm = oracle::matrix(dart());
    for (const Graph& g : graphs_up_to(6, false)) {
      const ClassReport r = everett_reed_class(g);
      const auto m = oracle::matrix(g);
      for (const auto& [flag, kind] : r.witness_kinds) {
        const auto it = std::find_if(r.witnesses.begin(), r.witnesses.end(), [&](const auto& w) { return w.first == flag; });
        REQUIRE(it != r.witnesses.end());
        const std::vector<int>& vs = it->second;
        const auto h = oracle::induced(m, vs);
        if (kind == "odd_hole" || kind == "hole") {
          CHECK(oracle::induces_cycle(m, vs));
          CHECK(vs.size() >= 5);
          if (kind == "odd_hole") CHECK(vs.size() % 2 == 1);
        } else if (kind == "antihole" || kind == "odd_antihole") {
          CHECK(oracle::induces_cycle(oracle::complement(m), vs));
          CHECK(vs.size() >= 5);
        } else if (kind == "odd_prism") {
          CHECK(oracle::prism_sets(m, 1).count(vs));
        } else if (kind == "even_prism") {
          CHECK(oracle::prism_sets(m, 0).count(vs));
        } else if (kind == "dart") {
          CHECK(oracle::isomorphic(h, dm));
        } else if (kind == "odd_cycle_few_chords") {
          CHECK_FALSE(oracle::meyniel(h));
        } else if (kind == "not_orderable") {
          CHECK_FALSE(oracle::perfectly_orderable(h));
        } else {
          FAIL("unknown witness kind " << kind);
        }
      }
      const int false_flags = !r.perfect + !r.weakly_chordal + !r.meyniel + !r.dart_free + !r.even_prism_free +
                              !r.perfectly_orderable + !r.everett_reed;
      CHECK(static_cast<int>(r.witnesses.size()) == false_flags);
    }
  }

  TEST_CASE("the class is hereditary") {
    for (const Graph& g : graphs_of_order(7, false)) {
      if (!everett_reed_class(g).everett_reed) continue;
      for (int v = 0; v < 7; ++v) CHECK(everett_reed_class(induced(g, low_mask(7) & ~bit(v))).everett_reed);
    }
  }

  TEST_CASE("adding an adjacent twin keeps perfection and the class") {
    for (const Graph& g : graphs_up_to(5, false)) {
      const ClassReport r = everett_reed_class(g);
      for (int v = 0; v < g.order(); ++v) {
        const ClassReport t = everett_reed_class(add_adjacent_twin(g, v));
        CHECK(t.perfect == r.perfect);
        CHECK(t.everett_reed == r.everett_reed);
      }
    }
  }

  TEST_CASE("example graph flags") {
    const ClassReport r = everett_reed_class(fixtures::example_graph());
    CHECK(r.perfect);
    CHECK_FALSE(r.everett_reed);
    CHECK_FALSE(r.perfectly_orderable);
    CHECK_FALSE(r.weakly_chordal);
  }
}
