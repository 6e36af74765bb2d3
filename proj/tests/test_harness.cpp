#include <doctest.h>

#include <json.hpp>

#include "named_graphs.hpp"
#include "stabring/error.hpp"
#include "stabring/graph_io.hpp"
#include "stabring/harness.hpp"

using namespace stabring;
using nlohmann::json;

namespace {

// Splits one CSV record, honouring double-quoted fields.
std::vector<std::string> csv_fields(const std::string& line) {
  std::vector<std::string> out(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        out.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        out.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.emplace_back();
    } else {
      out.back() += c;
    }
  }
  return out;
}

RunConfig small_bound() {
  RunConfig cfg;
  cfg.degree_bound = 4;
  cfg.threads = 1;
  return cfg;
}

}  // namespace

TEST_SUITE("harness") {
  TEST_CASE("configuration checks") {
    RunConfig cfg;
    CHECK_NOTHROW(validate(cfg));
    cfg.degree_bound = 2;
    CHECK_THROWS_AS(validate(cfg), Error);
    cfg.degree_bound = 32;
    CHECK_THROWS_AS(validate(cfg), Error);
    cfg.degree_bound = 5;
    cfg.kempe_k_max = 0;
    CHECK_THROWS_AS(validate(cfg), Error);
    cfg.kempe_k_max = 3;
    cfg.budget = 0;
    CHECK_THROWS_AS(validate(cfg), Error);
  }

  TEST_CASE("default degree bounds") {
    CHECK(default_degree_bound(Graph::path(4), true) == 5);
    CHECK(default_degree_bound(Graph::path(1), true) == 3);
    CHECK(default_degree_bound(Graph::cycle(5), false) == 6);
  }

  TEST_CASE("analyzing the example graph") {
    const ConjectureRow row = analyze(fixtures::example_graph(), small_bound(), "ex");
    CHECK(row.id == "ex");
    CHECK(row.n == 7);
    CHECK(row.edges == 14);
    CHECK(row.omega == 4);
    CHECK(row.chi == 4);
    CHECK(row.classes.perfect);
    CHECK_FALSE(row.classes.everett_reed);
    CHECK(row.even_contractile.outcome == SearchOutcome::found);
    REQUIRE(row.perfectly_contractile.has_value());
    CHECK_FALSE(*row.perfectly_contractile);
    CHECK(row.degree_bound == 4);
    CHECK(row.bounded_verdict);
    CHECK(row.kempe.status == QuadraticStatus::non_quadratic);
    CHECK(row.fiber.status == QuadraticStatus::non_quadratic);
    CHECK(row.kempe.witness_verified);
    CHECK(row.fiber.witness_verified);
    CHECK_FALSE(row.kempe_replication_property);
    CHECK(row.kempe_k_max == 5);
    REQUIRE(row.kempe_checks.size() == 2);
    CHECK(row.kempe_checks[0].k == 4);
    CHECK(row.kempe_checks[0].classes == 1);
    CHECK(row.kempe_checks[1].classes == 1);
    CHECK(row.consistent);
    CHECK(row.violations.empty());
    CHECK(row.errors.empty());
  }

  TEST_CASE("row serialization") {
    const ConjectureRow row = analyze(Graph::cycle(5), small_bound(), "c5");
    const json j = json::parse(row_json(row));
    CHECK(j["schema"] == kReportSchema);
    CHECK(j["id"] == "c5");
    CHECK(j["graph6"] == "Dhc");
    CHECK(j["classes"]["perfect"] == false);
    CHECK(j["witnesses"]["perfect"]["kind"] == "odd_hole");
    CHECK(j["witnesses"]["perfect"]["vertices"] == json::array({1, 2, 3, 4, 5}));
    CHECK(j["even_contractile"]["outcome"] == "absent");
    CHECK(j["consistent"] == true);

    const auto header = csv_fields(row_csv_header());
    const auto fields = csv_fields(row_csv(row));
    CHECK(fields.size() == header.size());
    CHECK(fields[0] == "c5");
    CHECK(fields[1] == "Dhc");
    CHECK(format_row(row, OutputFormat::csv) == row_csv(row));
    CHECK(format_row(row, OutputFormat::json) == row_json(row));
  }

  TEST_CASE("small graphs are consistent") {
    for (const Graph& g : {Graph::path(4), Graph::complete(3), Graph::cycle(4), fixtures::star(3), fixtures::odd_prism()}) {
      const ConjectureRow row = analyze(g, small_bound());
      CHECK(row.consistent);
      CHECK(row.errors.empty());
      CHECK(row.kempe.status == row.fiber.status);
    }
  }

  TEST_CASE("unbounded verdicts on perfect graphs") {
    RunConfig cfg;
    const ConjectureRow row = analyze(Graph::path(3), cfg);
    CHECK(row.degree_bound == 4);
    CHECK_FALSE(row.bounded_verdict);
    CHECK(row.fiber.status == QuadraticStatus::quadratic_up_to_bounds);
  }
}

TEST_SUITE("catalog") {
  TEST_CASE("generated sources") {
    CHECK(load_catalog("gen:n<=4").size() == 1 + 1 + 2 + 6);
    CHECK(load_catalog("gen:n≤4").size() == 10);
    CHECK(load_catalog("gen:4").size() == 10);
    CHECK(load_catalog("gen:n=4").size() == 6);
    CHECK_THROWS_AS(load_catalog("gen:n<=9"), Error);
    CHECK_THROWS_AS(load_catalog("gen:n<=x"), Error);
    CHECK_THROWS_AS(load_catalog("/nonexistent/catalog.g6"), Error);
  }

  TEST_CASE("bad lines become error rows") {
    const auto entries = catalog_from_text("C~\nnot graph6\nDhc\n");
    REQUIRE(entries.size() == 3);
    CHECK(entries[0].graph.has_value());
    CHECK_FALSE(entries[1].graph.has_value());
    CHECK_FALSE(entries[1].error.empty());
    CHECK(entries[2].graph == Graph::cycle(5));

    std::vector<std::string> ids;
    const CatalogSummary s = run_catalog(entries, small_bound(), [&](const ConjectureRow& r) { ids.push_back(r.id); });
    CHECK(ids == std::vector<std::string>{"1", "2", "3"});
    CHECK(s.graphs == 3);
    CHECK(s.errors == 1);
    CHECK(s.violations == 0);
    const json j = json::parse(summary_json(s));
    CHECK(j["schema"] == kReportSchema);
    CHECK(j["summary"]["errors"] == 1);
  }

  TEST_CASE("rows arrive in catalog order whatever the thread count") {
    const auto entries = load_catalog("gen:n<=4");
    std::vector<std::string> one, many;
    RunConfig cfg = small_bound();
    cfg.threads = 1;
    run_catalog(entries, cfg, [&](const ConjectureRow& r) { one.push_back(row_json(r)); });
    cfg.threads = 3;
    const CatalogSummary s = run_catalog(entries, cfg, [&](const ConjectureRow& r) { many.push_back(row_json(r)); });
    CHECK(one == many);
    CHECK(s.graphs == 10);
    CHECK(s.violations == 0);
    CHECK(s.method_disagreements == 0);
  }
}

TEST_SUITE("reports") {
  TEST_CASE("quadratic report") {
    const QuadraticReport r = quadratic_report(fixtures::example_graph(), DeciderMethod::both, 4);
    CHECK(r.agree);
    CHECK(combined_status(r) == QuadraticStatus::non_quadratic);
    const json j = json::parse(format_quadratic(r, OutputFormat::json));
    CHECK(j["status"] == "NonQuadratic");
    CHECK(j["witness"] == "[{1,5},{2,6},{3,4}] - [{1,6},{2,4},{3,5}]");
    CHECK(j["witness_degree"] == 3);
    CHECK(j["witness_verified"] == true);
    CHECK(j["witness_sets"]["lhs"] == json::parse("[[1,5],[2,6],[3,4]]"));

    const QuadraticReport p = quadratic_report(Graph::path(3), DeciderMethod::fiber, std::nullopt);
    CHECK_FALSE(p.kempe.has_value());
    CHECK(p.degree_bound == 4);
    CHECK(combined_status(p) == QuadraticStatus::quadratic_up_to_bounds);
  }

  TEST_CASE("kempe report") {
    const Graph g = fixtures::odd_prism();
    const json j = json::parse(format_kempe(g, 3, OutputFormat::json, fixtures::prism_f(), fixtures::prism_g()));
    CHECK(j["same_class"] == false);
    CHECK(j["classes"].get<int>() >= 2);
    CHECK_THROWS_AS(format_kempe(g, 3, OutputFormat::json, Coloring{3, {1, 1, 1, 1, 1, 1}}, fixtures::prism_g()), Error);
  }

  TEST_CASE("contractile report") {
    const json j = json::parse(format_contractile(fixtures::example_graph(), kDefaultContractionBudget, OutputFormat::json));
    CHECK(j["outcome"] == "found");
    CHECK(j["steps"] == 3);
    CHECK(j["pairs"][0] == json::array({2, 7}));
    CHECK(j["final_order"] == 4);
    CHECK(j["replay_valid"] == true);
  }

  TEST_CASE("classes report") {
    const json j = json::parse(format_classes(fixtures::dart_graph(), OutputFormat::json));
    CHECK(j["classes"]["dart_free"] == false);
    CHECK(j["witnesses"]["dart_free"]["kind"] == "dart");
  }
}
