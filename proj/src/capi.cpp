#include "stabring/stabring.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <memory>
#include <new>
#include <optional>
#include <sstream>
#include <string>

#include "stabring/error.hpp"
#include "stabring/graph_io.hpp"
#include "stabring/harness.hpp"

struct stabring_graph {
  stabring::Graph graph;
};

namespace {

thread_local std::string last_error;

stabring_status fail(stabring_status s, const std::string& msg) {
  last_error = msg;
  return s;
}

stabring_status map_kind(stabring::ErrorKind k) {
  switch (k) {
    case stabring::ErrorKind::parse: return STABRING_ERR_PARSE;
    case stabring::ErrorKind::validation: return STABRING_ERR_VALIDATION;
    case stabring::ErrorKind::argument: return STABRING_ERR_ARGUMENT;
    case stabring::ErrorKind::limit: return STABRING_ERR_LIMIT;
    case stabring::ErrorKind::io: return STABRING_ERR_IO;
  }
  return STABRING_ERR_INTERNAL;
}

// Runs body, translating exceptions into status codes.
template <typename F>
stabring_status guarded(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const stabring::Error& e) {
    return fail(map_kind(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(STABRING_ERR_LIMIT, "out of memory");
  } catch (const std::exception& e) {
    return fail(STABRING_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(STABRING_ERR_INTERNAL, "unknown error");
  }
}

char* copy_out(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

stabring::GraphFormat to_format(stabring_input_format f) {
  switch (f) {
    case STABRING_INPUT_EDGE_LIST: return stabring::GraphFormat::edge_list;
    case STABRING_INPUT_GRAPH6: return stabring::GraphFormat::graph6;
    case STABRING_INPUT_AUTO: return stabring::GraphFormat::automatic;
  }
  throw stabring::Error(stabring::ErrorKind::argument, "unknown input format");
}

stabring::OutputFormat to_output(stabring_output_format f) {
  if (f == STABRING_OUTPUT_JSON) return stabring::OutputFormat::json;
  if (f == STABRING_OUTPUT_CSV) return stabring::OutputFormat::csv;
  throw stabring::Error(stabring::ErrorKind::argument, "unknown output format");
}

stabring::RunConfig to_config(const stabring_config* cfg) {
  stabring_config c;
  stabring_config_init(&c);
  if (cfg) c = *cfg;
  stabring::RunConfig out;
  if (c.degree_bound) out.degree_bound = c.degree_bound;
  if (c.kempe_k_max) out.kempe_k_max = c.kempe_k_max;
  out.budget = c.budget;
  out.format = to_output(c.format);
  out.threads = c.threads;
  stabring::validate(out);
  return out;
}

void require(const void* p, const char* what) {
  if (!p) throw stabring::Error(stabring::ErrorKind::argument, std::string(what) + " must not be null");
}

stabring_status run_catalog(const std::vector<stabring::CatalogEntry>& entries, const stabring_config* cfg,
                            stabring_line_callback on_line, void* user, char** summary, uint64_t* violations) {
  const stabring::RunConfig rc = to_config(cfg);
  if (on_line && rc.format == stabring::OutputFormat::csv) on_line(stabring::row_csv_header().c_str(), user);
  const stabring::CatalogSummary s = stabring::run_catalog(entries, rc, [&](const stabring::ConjectureRow& row) {
    if (on_line) on_line(stabring::format_row(row, rc.format).c_str(), user);
  });
  if (summary)
    *summary = copy_out(rc.format == stabring::OutputFormat::json ? stabring::summary_json(s) : stabring::summary_csv(s));
  if (violations) *violations = s.violations;
  return STABRING_OK;
}

}  // namespace

extern "C" {

const char* stabring_version(void) { return "1.0.0"; }

const char* stabring_last_error(void) { return last_error.c_str(); }

void stabring_free(void* p) { std::free(p); }

void stabring_config_init(stabring_config* cfg) {
  if (!cfg) return;
  cfg->degree_bound = 0;
  cfg->kempe_k_max = 0;
  cfg->budget = stabring::kDefaultContractionBudget;
  cfg->format = STABRING_OUTPUT_JSON;
  cfg->threads = 0;
}

stabring_status stabring_graph_parse(const char* text, size_t len, stabring_input_format format, stabring_graph** out) {
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    if (!text && len) throw stabring::Error(stabring::ErrorKind::argument, "text must not be null");
    auto g = std::make_unique<stabring_graph>();
    g->graph = stabring::parse_graph(std::string_view(text ? text : "", len), to_format(format));
    *out = g.release();
    return STABRING_OK;
  });
}

stabring_status stabring_graph_read_file(const char* path, stabring_input_format format, stabring_graph** out) {
  return guarded([&] {
    require(out, "out");
    require(path, "path");
    *out = nullptr;
    std::ifstream in(path, std::ios::binary);
    if (!in) throw stabring::Error(stabring::ErrorKind::io, std::string("cannot open '") + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw stabring::Error(stabring::ErrorKind::io, std::string("error reading '") + path + "'");
    const std::string text = buf.str();
    auto g = std::make_unique<stabring_graph>();
    g->graph = stabring::parse_graph(text, to_format(format));
    *out = g.release();
    return STABRING_OK;
  });
}

void stabring_graph_free(stabring_graph* g) { delete g; }

int stabring_graph_order(const stabring_graph* g) { return g ? g->graph.order() : -1; }

stabring_status stabring_graph_to_graph6(const stabring_graph* g, char** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    *out = copy_out(stabring::to_graph6(g->graph));
    return STABRING_OK;
  });
}

stabring_status stabring_quadratic(const stabring_graph* g, stabring_method method, int degree_bound,
                                   stabring_output_format format, char** out, stabring_verdict* verdict) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    stabring::DeciderMethod m;
    switch (method) {
      case STABRING_METHOD_KEMPE: m = stabring::DeciderMethod::kempe; break;
      case STABRING_METHOD_FIBER: m = stabring::DeciderMethod::fiber; break;
      case STABRING_METHOD_BOTH: m = stabring::DeciderMethod::both; break;
      default: throw stabring::Error(stabring::ErrorKind::argument, "unknown method");
    }
    std::optional<int> bound;
    if (degree_bound) bound = degree_bound;
    const stabring::QuadraticReport r = stabring::quadratic_report(g->graph, m, bound);
    *out = copy_out(stabring::format_quadratic(r, to_output(format)));
    if (verdict) {
      if (!r.agree)
        *verdict = STABRING_METHODS_DISAGREE;
      else
        *verdict = stabring::combined_status(r) == stabring::QuadraticStatus::non_quadratic
                       ? STABRING_NON_QUADRATIC
                       : STABRING_QUADRATIC_UP_TO_BOUNDS;
    }
    return STABRING_OK;
  });
}

stabring_status stabring_kempe(const stabring_graph* g, int k, const char* from, const char* to,
                               stabring_output_format format, char** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    if (!from != !to) throw stabring::Error(stabring::ErrorKind::argument, "give both colorings or neither");
    std::optional<stabring::Coloring> f, t;
    if (from) {
      f = stabring::parse_coloring(from, k);
      t = stabring::parse_coloring(to, k);
    }
    *out = copy_out(stabring::format_kempe(g->graph, k, to_output(format), f, t));
    return STABRING_OK;
  });
}

stabring_status stabring_contractile(const stabring_graph* g, uint64_t budget, stabring_output_format format,
                                     char** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    if (budget == 0) throw stabring::Error(stabring::ErrorKind::argument, "budget must be positive");
    *out = copy_out(stabring::format_contractile(g->graph, budget, to_output(format)));
    return STABRING_OK;
  });
}

stabring_status stabring_classes(const stabring_graph* g, stabring_output_format format, char** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    *out = copy_out(stabring::format_classes(g->graph, to_output(format)));
    return STABRING_OK;
  });
}

stabring_status stabring_analyze(const stabring_graph* g, const stabring_config* cfg, char** out, int* consistent) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    const stabring::RunConfig rc = to_config(cfg);
    const stabring::ConjectureRow row = stabring::analyze(g->graph, rc);
    std::string text = stabring::format_row(row, rc.format);
    if (rc.format == stabring::OutputFormat::csv) text = stabring::row_csv_header() + "\n" + text;
    *out = copy_out(text);
    if (consistent) *consistent = row.consistent ? 1 : 0;
    return STABRING_OK;
  });
}

stabring_status stabring_catalog(const char* source, const stabring_config* cfg, stabring_line_callback on_line,
                                 void* user, char** summary, uint64_t* violations) {
  return guarded([&] {
    require(source, "source");
    return run_catalog(stabring::load_catalog(source), cfg, on_line, user, summary, violations);
  });
}

stabring_status stabring_catalog_text(const char* text, size_t len, const stabring_config* cfg,
                                      stabring_line_callback on_line, void* user, char** summary,
                                      uint64_t* violations) {
  return guarded([&] {
    if (!text && len) throw stabring::Error(stabring::ErrorKind::argument, "text must not be null");
    return run_catalog(stabring::catalog_from_text(std::string_view(text ? text : "", len)), cfg, on_line, user,
                       summary, violations);
  });
}

}  // extern "C"
