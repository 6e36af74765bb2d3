#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "named_graphs.hpp"
#include "stabring/coloring.hpp"
#include "stabring/error.hpp"
#include "stabring/isomorphism.hpp"

using namespace stabring;

TEST_SUITE("coloring") {
  TEST_CASE("proper colorings and validation") {
    const Graph g = fixtures::odd_prism();
    CHECK(is_proper(g, fixtures::prism_f()));
    CHECK(is_proper(g, fixtures::prism_g()));
    CHECK_FALSE(is_proper(g, Coloring{3, {1, 1, 2, 3, 2, 3}}));
    CHECK_FALSE(is_proper(g, Coloring{3, {1, 2, 4, 3, 1, 2}}));
    CHECK_FALSE(is_proper(g, Coloring{3, {1, 2, 3}}));
    CHECK_THROWS_AS(require_proper(g, Coloring{3, {1, 1, 2, 3, 2, 3}}), Error);
  }

  TEST_CASE("colorings counted against brute force") {
    std::mt19937 rng(2);
    for (const Graph& g : graphs_up_to(5, false)) {
      const auto m = oracle::matrix(g);
      for (int k = 1; k <= 4; ++k) {
        const auto ref = oracle::colorings(m, k);
        const auto got = enumerate_colorings(g, k);
        REQUIRE(got.size() == ref.size());
        CHECK(count_colorings(g, k) == ref.size());
        for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i].colors == ref[i]);
      }
    }
  }

  TEST_CASE("kempe components and switches") {
    const Graph g = Graph::cycle(6);
    const Coloring f{2, {1, 2, 1, 2, 1, 2}};
    const auto comps = kempe_components(g, f, 1, 2);
    REQUIRE(comps.size() == 1);
    const Coloring h = kempe_switch(g, f, 1, 2, comps[0]);
    CHECK(h.colors == std::vector<int>{2, 1, 2, 1, 2, 1});
    CHECK_THROWS_AS(kempe_components(g, f, 1, 1), Error);
    CHECK_THROWS_AS(kempe_components(g, f, 1, 3), Error);
    CHECK_THROWS_AS(kempe_switch(g, f, 1, 2, 0b11), Error);

    // Path 0-1-2 colored 1,2,3: the {1,3} subgraph has two single-vertex components.
    const Coloring p{3, {1, 2, 3}};
    const auto pc = kempe_components(Graph::path(3), p, 1, 3);
    CHECK(pc.size() == 2);
    CHECK(kempe_switch(Graph::path(3), p, 1, 3, pc[0]).colors == std::vector<int>{3, 2, 3});
  }

  TEST_CASE("kempe classes agree with brute force") {
    for (const Graph& g : graphs_up_to(5, false)) {
      const auto m = oracle::matrix(g);
      for (int k = 1; k <= 4; ++k) {
        int ref_count = 0;
        const auto ref = oracle::kempe_class_ids(m, k, &ref_count);
        const KempePartition p = kempe_classes(g, k);
        CHECK(p.class_count == ref_count);
        CHECK(p.class_of == ref);
        CHECK(all_kempe_equivalent(g, k) == (ref_count <= 1));
      }
    }
  }

  TEST_CASE("odd prism colorings f and g are in different classes") {
    const Graph g = fixtures::odd_prism();
    const KempePartition p = kempe_classes(g, 3);
    auto index = [&](const Coloring& f) {
      return std::lower_bound(p.colorings.begin(), p.colorings.end(), f) - p.colorings.begin();
    };
    CHECK(p.class_of[index(fixtures::prism_f())] != p.class_of[index(fixtures::prism_g())]);
    int ref_count = 0;
    oracle::kempe_class_ids(oracle::matrix(g), 3, &ref_count);
    CHECK(p.class_count == ref_count);
    CHECK(p.class_count >= 2);
    const auto sizes = p.class_sizes();
    CHECK(std::accumulate(sizes.begin(), sizes.end(), 0) == static_cast<int>(p.colorings.size()));
    for (int r : p.representatives()) CHECK(p.class_of[r] == p.class_of[p.representatives()[p.class_of[r]]]);
  }

  TEST_CASE("coloring text round trip") {
    const Coloring f = fixtures::prism_f();
    CHECK(format_coloring(f) == "1,2,3,3,1,2");
    CHECK(parse_coloring("1,2,3,3,1,2", 3) == f);
    CHECK(parse_coloring(" 1, 2 ,3", 3).colors == std::vector<int>{1, 2, 3});
    CHECK_THROWS_AS(parse_coloring("1,4", 3), Error);
    CHECK_THROWS_AS(parse_coloring("1,,2", 3), Error);
    CHECK_THROWS_AS(parse_coloring("a", 3), Error);
  }
}
