#include "stabring/harness.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "stabring/error.hpp"
#include "stabring/graph_io.hpp"
#include "stabring/isomorphism.hpp"

namespace stabring {

using Json = nlohmann::ordered_json;

namespace {

constexpr std::uint64_t kMaxKempeColorings = 2'000'000;

std::vector<int> one_based(std::vector<int> v) {
  for (int& x : v) ++x;
  return v;
}

Json sets_json(const StableFamily& family, const Monomial& m) {
  Json out = Json::array();
  for (int idx : m.factors) out.push_back(one_based(mask_vertices(family.set(idx))));
  return out;
}

DeciderReport to_report(const QuadraticityVerdict& v) {
  DeciderReport r;
  r.status = v.status;
  r.witness = v.witness;
  if (v.witness) r.witness_multidegree = v.witness_multidegree.counts;
  r.witness_verified = v.witness_verified;
  r.fibers_checked = v.fibers_checked;
  return r;
}

Json decider_json(const StableFamily& family, const DeciderReport& r) {
  Json j;
  j["status"] = to_string(r.status);
  if (r.witness) {
    j["witness"] = format_binomial(family, *r.witness);
    j["witness_sets"] = {{"lhs", sets_json(family, r.witness->lhs)}, {"rhs", sets_json(family, r.witness->rhs)}};
    j["witness_degree"] = r.witness->lhs.degree();
    j["witness_multidegree"] = r.witness_multidegree;
    j["witness_verified"] = r.witness_verified;
  } else {
    j["witness"] = nullptr;
  }
  j["fibers_checked"] = r.fibers_checked;
  return j;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string csv_line(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out.push_back(',');
    out += csv_field(fields[i]);
  }
  return out;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string pairs_text(const ContractionSearch& c) {
  if (!c.sequence) return "";
  std::vector<std::string> parts;
  for (const auto& s : c.sequence->steps) parts.push_back(std::to_string(s.x + 1) + "-" + std::to_string(s.y + 1));
  return join(parts, " ");
}

Json pairs_json(const ContractionSearch& c) {
  Json out = Json::array();
  if (c.sequence)
    for (const auto& s : c.sequence->steps) out.push_back({s.x + 1, s.y + 1});
  return out;
}

Json classes_json(const ClassReport& r) {
  Json flags;
  flags["perfect"] = r.perfect;
  flags["weakly_chordal"] = r.weakly_chordal;
  flags["meyniel"] = r.meyniel;
  flags["dart_free"] = r.dart_free;
  flags["even_prism_free"] = r.even_prism_free;
  flags["perfectly_orderable"] = r.perfectly_orderable;
  flags["everett_reed"] = r.everett_reed;
  return flags;
}

Json witnesses_json(const ClassReport& r) {
  Json out = Json::object();
  for (std::size_t i = 0; i < r.witnesses.size(); ++i)
    out[r.witnesses[i].first] = {{"kind", r.witness_kinds[i].second}, {"vertices", one_based(r.witnesses[i].second)}};
  return out;
}

}  // namespace

void validate(const RunConfig& cfg) {
  if (cfg.degree_bound && *cfg.degree_bound < 3) throw Error(ErrorKind::argument, "degree bound must be at least 3");
  if (cfg.degree_bound && *cfg.degree_bound > 31) throw Error(ErrorKind::argument, "degree bound must be at most 31");
  if (cfg.kempe_k_max && *cfg.kempe_k_max < 1) throw Error(ErrorKind::argument, "kempe k max must be at least 1");
  if (cfg.budget == 0) throw Error(ErrorKind::argument, "budget must be positive");
}

int default_degree_bound(const Graph& g, bool perfect) { return perfect ? std::max(3, g.order() + 1) : 6; }

ConjectureRow analyze(const Graph& g, const RunConfig& cfg, std::string id) {
  validate(cfg);
  ConjectureRow row;
  row.id = std::move(id);
  row.graph = g;
  row.graph6 = to_graph6(g);
  row.n = g.order();
  row.edges = g.size();
  row.omega = clique_number(g);
  row.chi = chromatic_number(g);
  row.classes = everett_reed_class(g);

  row.even_contractile = even_contractile_sequence(g, cfg.budget);
  if (row.even_contractile.outcome == SearchOutcome::budget_exhausted)
    row.errors.push_back("even_contractile: budget exhausted");
  if (g.order() <= 12) {
    const ContractilityCheck pc = is_perfectly_contractile(g, cfg.budget);
    row.perfectly_contractile_outcome = pc.outcome;
    if (pc.outcome == SearchOutcome::budget_exhausted)
      row.errors.push_back("perfectly_contractile: budget exhausted");
    else
      row.perfectly_contractile = pc.outcome == SearchOutcome::found;
  } else {
    row.perfectly_contractile_outcome = SearchOutcome::budget_exhausted;
    row.errors.push_back("perfectly_contractile: skipped above 12 vertices");
  }

  row.degree_bound = cfg.degree_bound.value_or(default_degree_bound(g, row.classes.perfect));
  row.bounded_verdict = !(row.classes.perfect && row.degree_bound >= g.order() + 1);
  bool deciders_ok = true;
  try {
    row.kempe = to_report(is_quadratic_kempe(g, row.degree_bound));
  } catch (const Error& e) {
    deciders_ok = false;
    row.errors.push_back(std::string("kempe decider: ") + e.what());
  }
  try {
    row.fiber = to_report(is_quadratic_fiber(g, row.degree_bound));
  } catch (const Error& e) {
    deciders_ok = false;
    row.errors.push_back(std::string("fiber decider: ") + e.what());
  }
  row.kempe_replication_property = row.kempe.status == QuadraticStatus::quadratic_up_to_bounds;

  row.kempe_k_max = cfg.kempe_k_max.value_or(row.chi + 1);
  for (int k = std::max(row.chi, 1); k <= row.kempe_k_max; ++k) {
    const std::uint64_t count = count_colorings(g, k);
    if (count > kMaxKempeColorings) {
      row.errors.push_back("kempe check at k=" + std::to_string(k) + ": too many colorings");
      break;
    }
    row.kempe_checks.push_back({k, count, kempe_classes(g, k).class_count});
  }

  // Implications that are theorems; any failure is a bug or a counterexample.
  auto violate = [&](std::string what) {
    row.consistent = false;
    row.violations.push_back(std::move(what));
  };
  const bool non_quadratic =
      row.kempe.status == QuadraticStatus::non_quadratic || row.fiber.status == QuadraticStatus::non_quadratic;
  if (deciders_ok && row.kempe.status != row.fiber.status)
    violate("kempe and fiber deciders disagree (they are equivalent)");
  for (const DeciderReport* r : {&row.kempe, &row.fiber})
    if (r->witness && !r->witness_verified) violate("witness failed fiber verification");
  const ClassReport& c = row.classes;
  if (non_quadratic) {
    if (c.weakly_chordal) violate("weakly chordal graph is not quadratic");
    if (c.meyniel) violate("Meyniel graph is not quadratic");
    if (c.perfectly_orderable) violate("perfectly orderable graph is not quadratic");
    if (c.dart_free && c.everett_reed) violate("dart-free graph without odd holes, antiholes, odd prisms is not quadratic");
    if (c.even_prism_free && c.everett_reed)
      violate("even-prism-free graph without odd holes, antiholes, odd prisms is not quadratic");
  }
  if (deciders_ok && c.perfect && !non_quadratic && !row.bounded_verdict && !c.everett_reed)
    violate("perfect quadratic graph contains an odd hole, antihole or odd prism");
  if (row.perfectly_contractile == true && !c.perfect) violate("perfectly contractile graph is not perfect");
  if (row.even_contractile.outcome == SearchOutcome::found) {
    if (row.chi != row.omega) violate("even-contractile graph has chi != omega");
    if (row.even_contractile.sequence->final_graph.order() != row.chi)
      violate("contraction sequence does not end in K_chi");
    for (const KempeCheck& kc : row.kempe_checks)
      if (kc.classes > 1) violate("even-contractile graph has several Kempe classes at k=" + std::to_string(kc.k));
  }
  return row;
}

std::string row_json(const ConjectureRow& row) {
  const StableFamily family(row.graph);
  Json j;
  j["schema"] = kReportSchema;
  j["id"] = row.id;
  j["graph6"] = row.graph6;
  j["n"] = row.n;
  j["edges"] = row.edges;
  j["omega"] = row.omega;
  j["chi"] = row.chi;
  j["classes"] = classes_json(row.classes);
  j["witnesses"] = witnesses_json(row.classes);
  j["even_contractile"] = {{"outcome", to_string(row.even_contractile.outcome)},
                           {"pairs", pairs_json(row.even_contractile)}};
  if (row.perfectly_contractile)
    j["perfectly_contractile"] = *row.perfectly_contractile;
  else
    j["perfectly_contractile"] = nullptr;
  j["perfectly_contractile_outcome"] = to_string(row.perfectly_contractile_outcome);
  j["degree_bound"] = row.degree_bound;
  j["bounded_verdict"] = row.bounded_verdict;
  j["quadratic"] = {{"kempe", decider_json(family, row.kempe)}, {"fiber", decider_json(family, row.fiber)}};
  j["kempe_replication_property"] = row.kempe_replication_property;
  j["kempe_k_max"] = row.kempe_k_max;
  Json checks = Json::array();
  for (const auto& kc : row.kempe_checks) checks.push_back({{"k", kc.k}, {"colorings", kc.colorings}, {"classes", kc.classes}});
  j["kempe_checks"] = checks;
  j["consistent"] = row.consistent;
  j["violations"] = row.violations;
  j["errors"] = row.errors;
  return j.dump();
}

std::string row_csv_header() {
  return "id,graph6,n,edges,omega,chi,perfect,weakly_chordal,meyniel,dart_free,even_prism_free,perfectly_orderable,"
         "everett_reed,even_contractile,contraction_pairs,perfectly_contractile,degree_bound,bounded_verdict,"
         "kempe_status,fiber_status,witness,kempe_replication_property,kempe_k_max,kempe_classes,consistent,"
         "violations,errors";
}

std::string row_csv(const ConjectureRow& row) {
  const StableFamily family(row.graph);
  const ClassReport& c = row.classes;
  const DeciderReport& w = row.fiber.witness ? row.fiber : row.kempe;
  std::vector<std::string> classes;
  for (const auto& kc : row.kempe_checks) classes.push_back(std::to_string(kc.k) + ":" + std::to_string(kc.classes));
  return csv_line({
      row.id,
      row.graph6,
      std::to_string(row.n),
      std::to_string(row.edges),
      std::to_string(row.omega),
      std::to_string(row.chi),
      yes_no(c.perfect),
      yes_no(c.weakly_chordal),
      yes_no(c.meyniel),
      yes_no(c.dart_free),
      yes_no(c.even_prism_free),
      yes_no(c.perfectly_orderable),
      yes_no(c.everett_reed),
      to_string(row.even_contractile.outcome),
      pairs_text(row.even_contractile),
      row.perfectly_contractile ? yes_no(*row.perfectly_contractile) : "unknown",
      std::to_string(row.degree_bound),
      yes_no(row.bounded_verdict),
      to_string(row.kempe.status),
      to_string(row.fiber.status),
      w.witness ? format_binomial(family, *w.witness) : "",
      yes_no(row.kempe_replication_property),
      std::to_string(row.kempe_k_max),
      join(classes, " "),
      yes_no(row.consistent),
      join(row.violations, "; "),
      join(row.errors, "; "),
  });
}

std::string format_row(const ConjectureRow& row, OutputFormat format) {
  return format == OutputFormat::json ? row_json(row) : row_csv(row);
}

std::vector<CatalogEntry> catalog_from_text(std::string_view text) {
  std::vector<CatalogEntry> out;
  for (const Graph6Record& rec : split_graph6_lines(text)) {
    CatalogEntry e;
    e.id = std::to_string(rec.line);
    try {
      e.graph = parse_graph6(rec.text);
    } catch (const Error& err) {
      e.error = std::string("line ") + std::to_string(rec.line) + ": " + err.what();
    }
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<CatalogEntry> load_catalog(std::string_view source) {
  constexpr std::string_view gen = "gen:";
  if (source.substr(0, gen.size()) == gen) {
    std::string_view rest = source.substr(gen.size());
    bool exact = false;
    for (std::string_view prefix : {"n<=", "n≤", "n="}) {
      if (rest.substr(0, prefix.size()) == prefix) {
        exact = prefix == "n=";
        rest.remove_prefix(prefix.size());
        break;
      }
    }
    int max_n = 0;
    if (rest.empty() || rest.size() > 2 || !std::all_of(rest.begin(), rest.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw Error(ErrorKind::argument, "bad generator '" + std::string(source) + "' (expected gen:n<=N)");
    max_n = std::stoi(std::string(rest));
    if (max_n < 1 || max_n > 8) throw Error(ErrorKind::argument, "generator order must be between 1 and 8");
    std::vector<CatalogEntry> out;
    const auto graphs = exact ? graphs_of_order(max_n, true) : graphs_up_to(max_n, true);
    for (const Graph& g : graphs) out.push_back({std::to_string(out.size() + 1), g, ""});
    return out;
  }
  std::ifstream in{std::string(source), std::ios::binary};
  if (!in) throw Error(ErrorKind::io, "cannot read catalog '" + std::string(source) + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Error(ErrorKind::io, "error reading catalog '" + std::string(source) + "'");
  return catalog_from_text(buf.str());
}

CatalogSummary run_catalog(const std::vector<CatalogEntry>& entries, const RunConfig& cfg,
                           const std::function<void(const ConjectureRow&)>& sink) {
  validate(cfg);
  const std::size_t total = entries.size();
  std::vector<std::optional<ConjectureRow>> slots(total);
  std::mutex mu;
  std::condition_variable ready;
  std::atomic<std::size_t> next{0};

  auto compute = [&](std::size_t i) {
    const CatalogEntry& e = entries[i];
    ConjectureRow row;
    row.id = e.id;
    if (!e.graph) {
      row.errors.push_back(e.error);
    } else {
      try {
        row = analyze(*e.graph, cfg, e.id);
      } catch (const std::exception& ex) {
        row = ConjectureRow{};
        row.id = e.id;
        row.graph = *e.graph;
        row.graph6 = to_graph6(*e.graph);
        row.n = e.graph->order();
        row.edges = e.graph->size();
        row.errors.push_back(ex.what());
      }
    }
    return row;
  };
  auto worker = [&] {
    for (std::size_t i = next++; i < total; i = next++) {
      ConjectureRow row = compute(i);
      std::lock_guard lock(mu);
      slots[i] = std::move(row);
      ready.notify_all();
    }
  };

  unsigned threads = cfg.threads ? cfg.threads : std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, total));
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);

  CatalogSummary s;
  for (std::size_t i = 0; i < total; ++i) {
    ConjectureRow row;
    {
      std::unique_lock lock(mu);
      ready.wait(lock, [&] { return slots[i].has_value(); });
      row = std::move(*slots[i]);
      slots[i].reset();
    }
    ++s.graphs;
    if (!row.consistent) ++s.violations;
    if (!row.errors.empty()) ++s.errors;
    if (row.classes.perfect) ++s.perfect;
    if (row.classes.everett_reed) ++s.everett_reed;
    if (row.fiber.status == QuadraticStatus::non_quadratic || row.kempe.status == QuadraticStatus::non_quadratic)
      ++s.non_quadratic;
    if (row.fiber.status != row.kempe.status) ++s.method_disagreements;
    sink(row);
  }
  for (auto& t : pool) t.join();
  return s;
}

std::string summary_json(const CatalogSummary& s) {
  Json j;
  j["schema"] = kReportSchema;
  j["summary"] = {{"graphs", s.graphs},
                  {"violations", s.violations},
                  {"errors", s.errors},
                  {"perfect", s.perfect},
                  {"everett_reed", s.everett_reed},
                  {"non_quadratic", s.non_quadratic},
                  {"method_disagreements", s.method_disagreements}};
  return j.dump();
}

std::string summary_csv(const CatalogSummary& s) {
  return "graphs,violations,errors,perfect,everett_reed,non_quadratic,method_disagreements\n" +
         csv_line({std::to_string(s.graphs), std::to_string(s.violations), std::to_string(s.errors),
                   std::to_string(s.perfect), std::to_string(s.everett_reed), std::to_string(s.non_quadratic),
                   std::to_string(s.method_disagreements)});
}

QuadraticReport quadratic_report(const Graph& g, DeciderMethod method, std::optional<int> degree_bound) {
  QuadraticReport r;
  r.graph6 = to_graph6(g);
  r.n = g.order();
  r.method = method;
  const bool perfect = is_perfect(g);
  r.degree_bound = degree_bound.value_or(default_degree_bound(g, perfect));
  if (r.degree_bound < 3) throw Error(ErrorKind::argument, "degree bound must be at least 3");
  r.bounded_verdict = !(perfect && r.degree_bound >= g.order() + 1);
  r.family = StableFamily(g);
  if (method != DeciderMethod::fiber) r.kempe = to_report(is_quadratic_kempe(g, r.degree_bound));
  if (method != DeciderMethod::kempe) r.fiber = to_report(is_quadratic_fiber(g, r.degree_bound));
  r.agree = !(r.kempe && r.fiber) || r.kempe->status == r.fiber->status;
  return r;
}

QuadraticStatus combined_status(const QuadraticReport& r) {
  for (const auto* d : {&r.fiber, &r.kempe})
    if (*d && (*d)->status == QuadraticStatus::non_quadratic) return QuadraticStatus::non_quadratic;
  return QuadraticStatus::quadratic_up_to_bounds;
}

std::string format_quadratic(const QuadraticReport& r, OutputFormat format) {
  const DeciderReport& main = r.fiber ? *r.fiber : *r.kempe;
  if (format == OutputFormat::csv) {
    return "graph6,n,method,degree_bound,bounded_verdict,status,agree,witness,witness_verified\n" +
           csv_line({r.graph6, std::to_string(r.n), to_string(r.method), std::to_string(r.degree_bound),
                     yes_no(r.bounded_verdict), to_string(combined_status(r)), yes_no(r.agree),
                     main.witness ? format_binomial(r.family, *main.witness) : "", yes_no(main.witness_verified)});
  }
  Json j;
  j["schema"] = kReportSchema;
  j["command"] = "quadratic";
  j["graph6"] = r.graph6;
  j["n"] = r.n;
  j["method"] = to_string(r.method);
  j["degree_bound"] = r.degree_bound;
  j["bounded_verdict"] = r.bounded_verdict;
  if (r.bounded_verdict)
    j["banner"] = "bounded verdict: only fibers of degree <= " + std::to_string(r.degree_bound) +
                  " were checked, so QuadraticUpToBounds is not a proof of quadratic generation";
  j["status"] = to_string(combined_status(r));
  j["agree"] = r.agree;
  const Json main_json = decider_json(r.family, main);
  for (const char* key : {"witness", "witness_sets", "witness_degree", "witness_multidegree", "witness_verified"})
    if (main_json.contains(key)) j[key] = main_json[key];
  Json methods = Json::object();
  if (r.kempe) methods["kempe"] = decider_json(r.family, *r.kempe);
  if (r.fiber) methods["fiber"] = decider_json(r.family, *r.fiber);
  j["methods"] = methods;
  return j.dump();
}

std::string format_kempe(const Graph& g, int k, OutputFormat format, const std::optional<Coloring>& from,
                         const std::optional<Coloring>& to) {
  if (k < 1) throw Error(ErrorKind::argument, "k must be at least 1");
  const std::uint64_t count = count_colorings(g, k);
  if (count > kMaxKempeColorings)
    throw Error(ErrorKind::limit, std::to_string(count) + " colorings exceed the limit of " +
                                      std::to_string(kMaxKempeColorings));
  const KempePartition p = kempe_classes(g, k);
  std::optional<bool> same;
  if (from && to) {
    require_proper(g, *from);
    require_proper(g, *to);
    auto index = [&](const Coloring& f) {
      return std::lower_bound(p.colorings.begin(), p.colorings.end(), f) - p.colorings.begin();
    };
    same = p.class_of[index(*from)] == p.class_of[index(*to)];
  }
  const auto sizes = p.class_sizes();
  const auto reps = p.representatives();
  if (format == OutputFormat::csv) {
    std::vector<std::string> s, r;
    for (int x : sizes) s.push_back(std::to_string(x));
    for (int i : reps) r.push_back(format_coloring(p.colorings[i]));
    return "graph6,k,colorings,classes,class_sizes,representatives,same_class\n" +
           csv_line({to_graph6(g), std::to_string(k), std::to_string(p.colorings.size()),
                     std::to_string(p.class_count), join(s, " "), join(r, " "),
                     same ? yes_no(*same) : ""});
  }
  Json j;
  j["schema"] = kReportSchema;
  j["command"] = "kempe";
  j["graph6"] = to_graph6(g);
  j["k"] = k;
  j["colorings"] = p.colorings.size();
  j["classes"] = p.class_count;
  j["class_sizes"] = sizes;
  Json r = Json::array();
  for (int i : reps) r.push_back(format_coloring(p.colorings[i]));
  j["representatives"] = r;
  if (same) j["same_class"] = *same;
  return j.dump();
}

std::string format_contractile(const Graph& g, std::uint64_t budget, OutputFormat format) {
  const ContractionSearch c = even_contractile_sequence(g, budget);
  const bool replay = c.sequence && replay_contraction_sequence(g, *c.sequence);
  std::optional<ContractilityCheck> pc;
  if (g.order() <= 12) pc = is_perfectly_contractile(g, budget);
  const int final_order = c.sequence ? c.sequence->final_graph.order() : 0;
  if (format == OutputFormat::csv) {
    return "graph6,outcome,steps,pairs,final_order,replay_valid,perfectly_contractile\n" +
           csv_line({to_graph6(g), to_string(c.outcome),
                     std::to_string(c.sequence ? c.sequence->steps.size() : 0), pairs_text(c),
                     std::to_string(final_order), c.sequence ? yes_no(replay) : "", pc ? to_string(pc->outcome) : "skipped"});
  }
  Json j;
  j["schema"] = kReportSchema;
  j["command"] = "contractile";
  j["graph6"] = to_graph6(g);
  j["outcome"] = to_string(c.outcome);
  j["steps"] = c.sequence ? c.sequence->steps.size() : 0;
  j["pairs"] = pairs_json(c);
  Json snapshots = Json::array();
  if (c.sequence)
    for (const auto& s : c.sequence->steps) snapshots.push_back(to_graph6(s.graph));
  j["snapshots"] = snapshots;
  if (c.sequence)
    j["final_graph6"] = to_graph6(c.sequence->final_graph);
  else
    j["final_graph6"] = nullptr;
  j["final_order"] = final_order;
  if (c.sequence)
    j["replay_valid"] = replay;
  else
    j["replay_valid"] = nullptr;
  j["nodes"] = c.nodes;
  j["perfectly_contractile"] = pc ? to_string(pc->outcome) : "skipped";
  if (pc && pc->outcome == SearchOutcome::absent) j["counterexample"] = one_based(pc->counterexample);
  return j.dump();
}

std::string format_classes(const Graph& g, OutputFormat format) {
  const ClassReport r = everett_reed_class(g);
  if (format == OutputFormat::csv) {
    std::vector<std::string> w;
    for (std::size_t i = 0; i < r.witnesses.size(); ++i) {
      std::vector<std::string> v;
      for (int x : r.witnesses[i].second) v.push_back(std::to_string(x + 1));
      w.push_back(r.witnesses[i].first + "=" + r.witness_kinds[i].second + ":" + join(v, " "));
    }
    return "graph6,perfect,weakly_chordal,meyniel,dart_free,even_prism_free,perfectly_orderable,everett_reed,"
           "witnesses\n" +
           csv_line({to_graph6(g), yes_no(r.perfect), yes_no(r.weakly_chordal), yes_no(r.meyniel),
                     yes_no(r.dart_free), yes_no(r.even_prism_free), yes_no(r.perfectly_orderable),
                     yes_no(r.everett_reed), join(w, "; ")});
  }
  Json j;
  j["schema"] = kReportSchema;
  j["command"] = "classes";
  j["graph6"] = to_graph6(g);
  j["classes"] = classes_json(r);
  j["witnesses"] = witnesses_json(r);
  Json twins = Json::array();
  for (auto [u, v] : adjacent_twins(g)) twins.push_back({u + 1, v + 1});
  j["adjacent_twins"] = twins;
  return j.dump();
}

}  // namespace stabring
