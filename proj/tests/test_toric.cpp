#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "oracles.hpp"
#include "named_graphs.hpp"
#include "stabring/error.hpp"
#include "stabring/isomorphism.hpp"
#include "stabring/toric.hpp"

using namespace stabring;

namespace {

using MaskMono = std::vector<VertexMask>;

std::set<MaskMono> library_fiber(const StableFamily& fam, const std::vector<int>& a, int k) {
  std::set<MaskMono> out;
  const Fiber f = enumerate_fiber(fam, ReplicationVector{a}, k);
  for (std::size_t i = 0; i < f.size(); ++i) {
    MaskMono m;
    for (auto s : f.factors(i)) m.push_back(fam.set(s));
    std::sort(m.begin(), m.end());
    out.insert(m);
  }
  return out;
}

std::set<MaskMono> oracle_fiber(const std::vector<std::uint64_t>& sets, int n, int k, const std::vector<int>& a) {
  std::set<MaskMono> out;
  for (const auto& mono : oracle::fiber(sets, n, k, a)) {
    MaskMono m;
    for (int i : mono) m.push_back(sets[i]);
    std::sort(m.begin(), m.end());
    out.insert(m);
  }
  return out;
}

}  // namespace

TEST_SUITE("stable sets") {
  TEST_CASE("family matches brute force and is ordered by size") {
    for (const Graph& g : graphs_up_to(6, false)) {
      const StableFamily fam(g);
      const auto ref = oracle::stable_sets(oracle::matrix(g));
      REQUIRE(fam.size() == static_cast<int>(ref.size()));
      std::vector<VertexMask> got = fam.sets();
      CHECK(got.front() == 0);
      for (int i = 1; i < fam.size(); ++i) CHECK(popcount(got[i - 1]) <= popcount(got[i]));
      std::sort(got.begin(), got.end());
      CHECK(got == std::vector<VertexMask>(ref.begin(), ref.end()));
      for (int i = 0; i < fam.size(); ++i) CHECK(fam.index_of(fam.set(i)) == i);
    }
    CHECK(StableFamily(Graph::cycle(5)).size() == 11);
    CHECK_FALSE(StableFamily(Graph::cycle(5)).index_of(0b11).has_value());
  }
}

TEST_SUITE("fibers") {
  TEST_CASE("enumerated fibers agree with brute force") {
    const Graph graphs[] = {Graph::cycle(5), Graph::path(4), fixtures::odd_prism(), Graph(3)};
    for (const Graph& g : graphs) {
      const StableFamily fam(g);
      const auto sets = oracle::stable_sets(oracle::matrix(g));
      const int n = g.order();
      for (int k = 1; k <= 3; ++k) {
        std::vector<int> a(n, 0);
        // Walk every a in {0..k}^n.
        while (true) {
          CHECK(library_fiber(fam, a, k) == oracle_fiber(sets, n, k, a));
          int i = n - 1;
          while (i >= 0 && a[i] == k) a[i--] = 0;
          if (i < 0) break;
          ++a[i];
        }
      }
    }
  }

  TEST_CASE("fiber lookup") {
    const StableFamily fam(Graph::cycle(5));
    const Fiber f = enumerate_fiber(fam, ReplicationVector{{1, 1, 1, 1, 1}}, 3);
    REQUIRE(f.size() > 1);
    for (std::size_t i = 0; i < f.size(); ++i) {
      CHECK(f.find(f.factors(i)) == i);
      CHECK(f.contains(f.monomial(i)));
      CHECK(multidegree(fam, f.monomial(i)).counts == std::vector<int>{1, 1, 1, 1, 1});
    }
    for (std::size_t i = 1; i < f.size(); ++i) CHECK(f.monomial(i - 1) < f.monomial(i));
    CHECK_FALSE(f.contains(Monomial({0, 0, 0})));
  }

  TEST_CASE("quadratic components agree with brute force") {
    const Graph graphs[] = {Graph::cycle(5), fixtures::odd_prism(), Graph::path(4), Graph::complete(3)};
    for (const Graph& g : graphs) {
      const StableFamily fam(g);
      const auto sets = oracle::stable_sets(oracle::matrix(g));
      const int n = g.order();
      for (int k = 2; k <= 3; ++k) {
        std::vector<int> a(n, 0);
        while (true) {
          const Fiber f = enumerate_fiber(fam, ReplicationVector{a}, k);
          const auto comps = quadratic_components(fam, f);
          const int ref = f.size() ? oracle::fiber_components(oracle::fiber(sets, n, k, a)) : 0;
          CHECK(comps.count == ref);
          CHECK(fiber_quadratic_connected(fam, f) == (ref <= 1));
          int i = n - 1;
          while (i >= 0 && a[i] == k) a[i--] = 0;
          if (i < 0) break;
          ++a[i];
        }
      }
    }
  }

  TEST_CASE("monomials and colorings of replication graphs correspond") {
    const Graph g = Graph::cycle(5);
    const StableFamily fam(g);
    const ReplicationVector a{{2, 1, 1, 0, 2}};
    const ReplicationGraph r = replication(g, a);
    for (int k = 3; k <= 4; ++k) {
      std::set<Monomial> images;
      for (const Coloring& f : enumerate_colorings(r.graph, k)) {
        const Monomial m = coloring_to_monomial(fam, r, f);
        CHECK(m.degree() == k);
        CHECK(multidegree(fam, m) == a);
        images.insert(m);
        const ColoredReplication back = monomial_to_coloring(fam, m);
        CHECK(back.a == a);
        CHECK(is_proper(r.graph, back.coloring));
        CHECK(coloring_to_monomial(fam, r, back.coloring) == m);
      }
      // phi_k is onto the fiber.
      const Fiber f = enumerate_fiber(fam, a, k);
      CHECK(images.size() == f.size());
    }
  }

  TEST_CASE("binomials in the ideal") {
    const Graph g = fixtures::odd_prism();
    const StableFamily fam(g);
    auto idx = [&](std::initializer_list<int> one_based) {
      VertexMask s = 0;
      for (int v : one_based) s |= bit(v - 1);
      return *fam.index_of(s);
    };
    const Binomial b{Monomial({idx({1, 5}), idx({2, 6}), idx({3, 4})}),
                     Monomial({idx({1, 6}), idx({2, 4}), idx({3, 5})})};
    CHECK(binomial_in_ideal(fam, b));
    CHECK(verify_witness(fam, b));
    CHECK(format_binomial(fam, b) == "[{1,5},{2,6},{3,4}] - [{1,6},{2,4},{3,5}]");
    const Binomial off{Monomial({idx({1, 5}), idx({2, 6})}), Monomial({idx({1, 6}), idx({2, 4})})};
    CHECK_FALSE(binomial_in_ideal(fam, off));
    CHECK_FALSE(verify_witness(fam, off));
    // x_{15} x_{26} - x_{16} x_{25} fails: {2,5} is an edge, not a stable set.
    CHECK_FALSE(fam.index_of(bit(1) | bit(4)).has_value());
  }
}

TEST_SUITE("deciders") {
  TEST_CASE("deciders agree with the brute-force fiber oracle") {
    for (const Graph& g : graphs_up_to(4, false)) {
      const bool ref = oracle::non_quadratic(g, 4);
      const auto fib = is_quadratic_fiber(g, 4);
      const auto kem = is_quadratic_kempe(g, 4);
      CHECK((fib.status == QuadraticStatus::non_quadratic) == ref);
      CHECK(kem.status == fib.status);
    }
    const Graph extra[] = {Graph::cycle(5), fixtures::odd_prism(), fixtures::dart_graph()};
    for (const Graph& g : extra) {
      const bool ref = oracle::non_quadratic(g, 3);
      CHECK((is_quadratic_fiber(g, 3).status == QuadraticStatus::non_quadratic) == ref);
      CHECK((is_quadratic_kempe(g, 3).status == QuadraticStatus::non_quadratic) == ref);
    }
  }

  TEST_CASE("odd prism is not quadratic, witness in degree 3") {
    const Graph g = fixtures::odd_prism();
    for (auto v : {is_quadratic_fiber(g, 3), is_quadratic_kempe(g, 3)}) {
      CHECK(v.status == QuadraticStatus::non_quadratic);
      REQUIRE(v.witness.has_value());
      CHECK(v.witness->lhs.degree() == 3);
      CHECK(v.witness_verified);
      CHECK(verify_witness(StableFamily(g), *v.witness));
    }
  }

  TEST_CASE("example graph witness") {
    const Graph g = fixtures::example_graph();
    const StableFamily fam(g);
    const auto fib = is_quadratic_fiber(g, 4);
    const auto kem = is_quadratic_kempe(g, 4);
    REQUIRE(fib.witness.has_value());
    REQUIRE(kem.witness.has_value());
    CHECK(format_binomial(fam, *fib.witness) == "[{1,5},{2,6},{3,4}] - [{1,6},{2,4},{3,5}]");
    CHECK(format_binomial(fam, *kem.witness) == format_binomial(fam, *fib.witness));
    CHECK(fib.witness_multidegree.counts == std::vector<int>{1, 1, 1, 1, 1, 1, 0});
  }

  TEST_CASE("quadratic graphs report the bound") {
    const Graph graphs[] = {Graph::complete(4), Graph::path(4), Graph::cycle(4), fixtures::star(3)};
    for (const Graph& g : graphs) {
      const auto v = is_quadratic_fiber(g, 5);
      CHECK(v.status == QuadraticStatus::quadratic_up_to_bounds);
      CHECK(v.degree_bound == 5);
      CHECK_FALSE(v.witness.has_value());
      CHECK(v.fibers_checked > 0);
      CHECK(is_quadratic_kempe(g, 5).status == QuadraticStatus::quadratic_up_to_bounds);
    }
    CHECK(std::string(to_string(QuadraticStatus::non_quadratic)) == "NonQuadratic");
    CHECK(std::string(to_string(QuadraticStatus::quadratic_up_to_bounds)) == "QuadraticUpToBounds");
  }

  TEST_CASE("bad bounds") {
    CHECK_THROWS_AS(is_quadratic_kempe(Graph::path(3), 32), Error);
    CHECK_THROWS_AS(minimal_generator_degrees(Graph::path(3), 1), Error);
  }
}

TEST_SUITE("generators") {
  TEST_CASE("two isolated vertices need one quadric") {
    const auto d = minimal_generator_degrees(Graph(2), 4);
    REQUIRE(d.size() == 1);
    CHECK(d[0].degree == 2);
    CHECK(d[0].generators == 1);
  }

  TEST_CASE("higher-degree generators appear exactly when the oracle sees a gap") {
    for (const Graph& g : graphs_up_to(4, false)) {
      const auto d = minimal_generator_degrees(g, 4);
      const bool higher = std::any_of(d.begin(), d.end(), [](const GeneratorDegree& r) { return r.degree > 2; });
      CHECK(higher == oracle::non_quadratic(g, 4));
    }
    const auto prism = minimal_generator_degrees(fixtures::odd_prism(), 3);
    CHECK(std::any_of(prism.begin(), prism.end(), [](const GeneratorDegree& r) { return r.degree == 3; }));
  }

  TEST_CASE("generator counts agree with listing every fiber") {
    std::vector<Graph> graphs = graphs_up_to(4, false);
    graphs.push_back(Graph::cycle(5));
    graphs.push_back(fixtures::odd_prism());
    for (const Graph& g : graphs) {
      const int bound = g.order() <= 4 ? 5 : 3;
      std::map<int, std::uint64_t> got;
      for (const GeneratorDegree& r : minimal_generator_degrees(g, bound)) got[r.degree] = r.generators;
      CHECK(got == oracle::generator_degrees(g, bound));
    }
  }

  TEST_CASE("complete graphs have no relations") {
    CHECK(minimal_generator_degrees(Graph::complete(4), 5).empty());
  }
}
