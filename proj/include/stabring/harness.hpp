#pragma once

// Per-graph reports and the catalog runner behind the command-line tool.
// Rows and command reports serialize to JSON (one object per line, with a
// "schema" field) or CSV with a fixed header.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stabring/coloring.hpp"
#include "stabring/graph.hpp"
#include "stabring/structure.hpp"
#include "stabring/toric.hpp"

namespace stabring {

inline constexpr int kReportSchema = 1;

enum class OutputFormat { json, csv };

struct RunConfig {
  std::optional<int> degree_bound;  // default: n+1 for perfect graphs, else 6 (never below 3)
  std::optional<int> kempe_k_max;   // default: chi + 1
  std::uint64_t budget = kDefaultContractionBudget;
  OutputFormat format = OutputFormat::json;
  unsigned threads = 0;  // catalog workers; 0 = hardware concurrency
};

// Throws Error(argument) on out-of-range settings.
void validate(const RunConfig& cfg);

int default_degree_bound(const Graph& g, bool perfect);

struct DeciderReport {
  QuadraticStatus status = QuadraticStatus::quadratic_up_to_bounds;
  std::optional<Binomial> witness;
  std::vector<int> witness_multidegree;
  bool witness_verified = false;
  std::uint64_t fibers_checked = 0;
};

struct KempeCheck {
  int k = 0;
  std::uint64_t colorings = 0;
  int classes = 0;
};

struct ConjectureRow {
  std::string id;
  std::string graph6;
  Graph graph;
  int n = 0;
  int edges = 0;
  int omega = 0;
  int chi = 0;
  ClassReport classes;

  ContractionSearch even_contractile;
  std::optional<bool> perfectly_contractile;  // empty when the budget ran out
  SearchOutcome perfectly_contractile_outcome = SearchOutcome::found;

  int degree_bound = 0;
  bool bounded_verdict = true;  // false when the bound makes the verdict a full decision
  DeciderReport kempe;
  DeciderReport fiber;
  bool kempe_replication_property = true;  // every tested G_a has one Kempe class per k

  int kempe_k_max = 0;
  std::vector<KempeCheck> kempe_checks;  // colorings of G itself, k = chi..kempe_k_max

  bool consistent = true;
  std::vector<std::string> violations;
  std::vector<std::string> errors;  // per-field failures; the row is still reported
};

ConjectureRow analyze(const Graph& g, const RunConfig& cfg, std::string id = "1");

std::string row_json(const ConjectureRow& row);
std::string row_csv_header();
std::string row_csv(const ConjectureRow& row);
std::string format_row(const ConjectureRow& row, OutputFormat format);

struct CatalogEntry {
  std::string id;
  std::optional<Graph> graph;
  std::string error;  // set when the graph could not be read
};

// "gen:n<=N", "gen:n≤N" or "gen:N" for every connected graph on 1..N
// vertices, "gen:n=N" for exactly N; anything else names a file of graph6
// lines ("-" for stdin is handled by the caller).
std::vector<CatalogEntry> load_catalog(std::string_view source);
std::vector<CatalogEntry> catalog_from_text(std::string_view text);

struct CatalogSummary {
  std::uint64_t graphs = 0;
  std::uint64_t violations = 0;  // rows with consistent = false
  std::uint64_t errors = 0;      // rows with at least one error
  std::uint64_t perfect = 0;
  std::uint64_t everett_reed = 0;
  std::uint64_t non_quadratic = 0;
  std::uint64_t method_disagreements = 0;
};

// Rows are computed by a worker pool and handed to `sink` in catalog order.
CatalogSummary run_catalog(const std::vector<CatalogEntry>& entries, const RunConfig& cfg,
                           const std::function<void(const ConjectureRow&)>& sink);

std::string summary_json(const CatalogSummary& s);
std::string summary_csv(const CatalogSummary& s);

// Single-command reports.
struct QuadraticReport {
  std::string graph6;
  int n = 0;
  DeciderMethod method = DeciderMethod::both;
  int degree_bound = 0;
  bool bounded_verdict = true;
  std::optional<DeciderReport> kempe;
  std::optional<DeciderReport> fiber;
  bool agree = true;
  StableFamily family;
};

QuadraticReport quadratic_report(const Graph& g, DeciderMethod method, std::optional<int> degree_bound);
QuadraticStatus combined_status(const QuadraticReport& r);
std::string format_quadratic(const QuadraticReport& r, OutputFormat format);

std::string format_kempe(const Graph& g, int k, OutputFormat format, const std::optional<Coloring>& from = std::nullopt,
                         const std::optional<Coloring>& to = std::nullopt);
std::string format_contractile(const Graph& g, std::uint64_t budget, OutputFormat format);
std::string format_classes(const Graph& g, OutputFormat format);

}  // namespace stabring
