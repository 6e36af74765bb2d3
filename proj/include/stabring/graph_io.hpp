#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "stabring/graph.hpp"

namespace stabring {

enum class GraphFormat { automatic, edge_list, graph6 };

// Edge-list text: the vertex count n on the first line, then one "i j" pair
// per line, 1-based. Blank lines and lines starting with '#' are skipped.
Graph parse_edge_list(std::string_view text);

// One graph6 record (an optional ">>graph6<<" header is accepted).
Graph parse_graph6(std::string_view text);

// automatic: a first non-blank line made only of digits selects edge-list,
// anything else is read as graph6.
Graph parse_graph(std::string_view text, GraphFormat format = GraphFormat::automatic);

std::string to_graph6(const Graph& g);
std::string to_edge_list(const Graph& g);

// Splits a multi-record graph6 file into records, skipping blank lines and
// '#' comments. Each record keeps its 1-based line number.
struct Graph6Record {
  int line;
  std::string text;
};
std::vector<Graph6Record> split_graph6_lines(std::string_view text);

}  // namespace stabring
