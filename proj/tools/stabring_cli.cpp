// stabring-cli: command-line front end over the C API.
//
//   stabring-cli analyze <graph>
//   stabring-cli catalog <file|gen:n<=N|->
//   stabring-cli quadratic <graph> --method=both --degree-bound=4
//   stabring-cli kempe <graph> -k 3 [--from 1,2,3,... --to ...]
//   stabring-cli contractile <graph>
//   stabring-cli classes <graph>
//
// A graph argument is a file path, "-" for stdin, or "g6:<graph6>".
// Exit status: 0 consistent, 1 consistency violation, 2 usage or input error.

#include <cstdio>
#include <iostream>
#include <iterator>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "stabring/stabring.h"

namespace {

constexpr int kExitViolation = 1;
constexpr int kExitError = 2;

struct Options {
  std::string format = "json";
  std::string input_format = "auto";
  uint64_t budget = 0;
  int degree_bound = 0;
  int kempe_k_max = 0;
  unsigned threads = 0;
};

class Failure {
 public:
  explicit Failure(std::string msg) : msg_(std::move(msg)) {}
  const std::string& what() const { return msg_; }

 private:
  std::string msg_;
};

void check(stabring_status s, const std::string& context) {
  if (s != STABRING_OK) throw Failure(context + ": " + stabring_last_error());
}

// Owns a string returned by the library.
struct Owned {
  char* p = nullptr;
  ~Owned() { stabring_free(p); }
};

struct GraphHandle {
  stabring_graph* g = nullptr;
  ~GraphHandle() { stabring_graph_free(g); }
};

std::string read_stdin() { return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()}; }

stabring_input_format input_format(const Options& o) {
  if (o.input_format == "edges") return STABRING_INPUT_EDGE_LIST;
  if (o.input_format == "graph6") return STABRING_INPUT_GRAPH6;
  return STABRING_INPUT_AUTO;
}

stabring_output_format output_format(const Options& o) {
  return o.format == "csv" ? STABRING_OUTPUT_CSV : STABRING_OUTPUT_JSON;
}

void load(const std::string& arg, const Options& o, GraphHandle& h) {
  if (arg.rfind("g6:", 0) == 0) {
    const std::string text = arg.substr(3);
    check(stabring_graph_parse(text.data(), text.size(), STABRING_INPUT_GRAPH6, &h.g), "graph '" + arg + "'");
  } else if (arg == "-") {
    const std::string text = read_stdin();
    check(stabring_graph_parse(text.data(), text.size(), input_format(o), &h.g), "stdin");
  } else {
    check(stabring_graph_read_file(arg.c_str(), input_format(o), &h.g), arg);
  }
}

stabring_config config(const Options& o) {
  stabring_config c;
  stabring_config_init(&c);
  c.degree_bound = o.degree_bound;
  c.kempe_k_max = o.kempe_k_max;
  if (o.budget) c.budget = o.budget;
  c.format = output_format(o);
  c.threads = o.threads;
  return c;
}

void print_line(const char* line, void*) {
  std::fputs(line, stdout);
  std::fputc('\n', stdout);
  std::fflush(stdout);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stable set rings, Kempe equivalence and even-pair contraction for small graphs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(stabring_version()));

  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--input-format", o.input_format, "Graph input format")->check(CLI::IsMember({"auto", "edges", "graph6"}));
  app.add_option("--budget", o.budget, "Node budget for contraction searches")->check(CLI::PositiveNumber);

  std::string graph_arg, source, method = "both", from, to;
  int k = 0;

  auto* analyze = app.add_subcommand("analyze", "Full report for one graph");
  analyze->add_option("graph", graph_arg, "Graph file, '-' or g6:<code>")->required();
  analyze->add_option("--degree-bound", o.degree_bound, "Replication degree bound (default n+1 if perfect, else 6)")
      ->check(CLI::Range(3, 31));
  analyze->add_option("--kempe-k-max", o.kempe_k_max, "Largest k for Kempe checks on the graph (default chi+1)")
      ->check(CLI::PositiveNumber);

  auto* catalog = app.add_subcommand("catalog", "Report rows for a catalog of graphs");
  catalog->add_option("source", source, "graph6 file, '-' or gen:n<=N")->required();
  catalog->add_option("--degree-bound", o.degree_bound, "Replication degree bound")->check(CLI::Range(3, 31));
  catalog->add_option("--kempe-k-max", o.kempe_k_max, "Largest k for Kempe checks")->check(CLI::PositiveNumber);
  catalog->add_option("--threads", o.threads, "Worker threads (0 = all cores)");

  auto* quadratic = app.add_subcommand("quadratic", "Decide quadratic generation up to a degree bound");
  quadratic->add_option("graph", graph_arg, "Graph file, '-' or g6:<code>")->required();
  quadratic->add_option("--method", method, "Decider")->check(CLI::IsMember({"kempe", "fiber", "both"}));
  quadratic->add_option("--degree-bound", o.degree_bound, "Replication degree bound")->check(CLI::Range(3, 31));

  auto* kempe = app.add_subcommand("kempe", "Kempe classes of the k-colorings");
  kempe->add_option("graph", graph_arg, "Graph file, '-' or g6:<code>")->required();
  kempe->add_option("-k", k, "Number of colors")->required()->check(CLI::Range(1, 64));
  auto* from_opt = kempe->add_option("--from", from, "A coloring such as 1,2,3");
  kempe->add_option("--to", to, "Second coloring; reports whether both share a class")->needs(from_opt);
  from_opt->needs(kempe->get_option("--to"));

  auto* contractile = app.add_subcommand("contractile", "Even-pair contraction sequence");
  contractile->add_option("graph", graph_arg, "Graph file, '-' or g6:<code>")->required();

  auto* classes = app.add_subcommand("classes", "Graph class flags with witnesses");
  classes->add_option("graph", graph_arg, "Graph file, '-' or g6:<code>")->required();

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    const stabring_output_format fmt = output_format(o);
    Owned out;
    if (*catalog) {
      const stabring_config cfg = config(o);
      Owned summary;
      uint64_t violations = 0;
      if (source == "-") {
        const std::string text = read_stdin();
        check(stabring_catalog_text(text.data(), text.size(), &cfg, print_line, nullptr, &summary.p, &violations),
              "catalog");
      } else {
        check(stabring_catalog(source.c_str(), &cfg, print_line, nullptr, &summary.p, &violations), "catalog");
      }
      if (fmt == STABRING_OUTPUT_JSON)
        std::cout << summary.p << '\n';
      else
        std::cerr << summary.p << '\n';
      return violations ? kExitViolation : 0;
    }

    GraphHandle h;
    load(graph_arg, o, h);
    int status = 0;
    if (*analyze) {
      const stabring_config cfg = config(o);
      int consistent = 1;
      check(stabring_analyze(h.g, &cfg, &out.p, &consistent), "analyze");
      status = consistent ? 0 : kExitViolation;
    } else if (*quadratic) {
      static const std::map<std::string, stabring_method> methods{
          {"kempe", STABRING_METHOD_KEMPE}, {"fiber", STABRING_METHOD_FIBER}, {"both", STABRING_METHOD_BOTH}};
      stabring_verdict verdict = STABRING_QUADRATIC_UP_TO_BOUNDS;
      check(stabring_quadratic(h.g, methods.at(method), o.degree_bound, fmt, &out.p, &verdict), "quadratic");
      if (verdict == STABRING_METHODS_DISAGREE) {
        std::cerr << "error: the kempe and fiber deciders disagree\n";
        status = kExitViolation;
      }
    } else if (*kempe) {
      check(stabring_kempe(h.g, k, from.empty() ? nullptr : from.c_str(), to.empty() ? nullptr : to.c_str(), fmt,
                           &out.p),
            "kempe");
    } else if (*contractile) {
      check(stabring_contractile(h.g, config(o).budget, fmt, &out.p), "contractile");
    } else if (*classes) {
      check(stabring_classes(h.g, fmt, &out.p), "classes");
    }
    std::cout << out.p << '\n';
    return status;
  } catch (const Failure& f) {
    std::cerr << "error: " << f.what() << '\n';
    return kExitError;
  }
}
