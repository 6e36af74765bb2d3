#include "stabring/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "stabring/error.hpp"

namespace stabring {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void parse_fail(int line, const std::string& what) {
  throw Error(ErrorKind::parse, "line " + std::to_string(line) + ": " + what);
}

// Splits a line into whitespace-separated integer fields.
std::vector<long long> integers(std::string_view line, int lineno) {
  std::vector<long long> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i == line.size()) break;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    long long value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + j, value);
    if (ec != std::errc{} || ptr != line.data() + j)
      parse_fail(lineno, "expected an integer, got '" + std::string(line.substr(i, j - i)) + "'");
    out.push_back(value);
    i = j;
  }
  return out;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  int lineno = 0;
  long long n = -1;
  std::vector<std::pair<int, int>> edges;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = trim(text.substr(pos, end - pos));
    ++lineno;
    pos = end + 1;
    if (line.empty() || line.front() == '#') continue;
    const auto fields = integers(line, lineno);
    if (n < 0) {
      if (fields.size() != 1) parse_fail(lineno, "expected the vertex count alone on the first line");
      n = fields[0];
      if (n < 0) throw Error(ErrorKind::validation, "line " + std::to_string(lineno) + ": negative vertex count");
      if (n > kMaxVertices)
        throw Error(ErrorKind::limit, "line " + std::to_string(lineno) + ": more than 64 vertices");
      continue;
    }
    if (fields.size() != 2) parse_fail(lineno, "expected an edge 'i j'");
    const long long u = fields[0], v = fields[1];
    if (u < 1 || v < 1 || u > n || v > n)
      throw Error(ErrorKind::validation,
                  "line " + std::to_string(lineno) + ": vertex out of range 1.." + std::to_string(n));
    if (u == v) throw Error(ErrorKind::validation, "line " + std::to_string(lineno) + ": self-loop");
    edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
  }
  if (n < 0) parse_fail(lineno, "missing vertex count");
  try {
    return Graph::from_edges(static_cast<int>(n), edges);
  } catch (const Error& e) {
    throw Error(e.kind(), std::string("edge list: ") + e.what());
  }
}

Graph parse_graph6(std::string_view text) {
  text = trim(text);
  constexpr std::string_view header = ">>graph6<<";
  if (text.substr(0, header.size()) == header) text.remove_prefix(header.size());
  auto byte_at = [&](std::size_t i) -> int {
    if (i >= text.size()) throw Error(ErrorKind::parse, "graph6: truncated at byte " + std::to_string(i));
    const int c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126)
      throw Error(ErrorKind::parse, "graph6: invalid character at byte " + std::to_string(i));
    return c - 63;
  };
  if (text.empty()) throw Error(ErrorKind::parse, "graph6: empty record");
  std::size_t pos = 0;
  long long n = byte_at(pos++);
  if (n == 63) {
    if (byte_at(pos) == 63) throw Error(ErrorKind::limit, "graph6: 8-byte vertex counts are not supported");
    n = 0;
    for (int i = 0; i < 3; ++i) n = (n << 6) | byte_at(pos++);
  }
  if (n > kMaxVertices) throw Error(ErrorKind::limit, "graph6: more than 64 vertices");
  const long long bits = n * (n - 1) / 2;
  const std::size_t expected = pos + static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() != expected)
    throw Error(ErrorKind::parse, "graph6: expected " + std::to_string(expected) + " bytes, got " +
                                      std::to_string(text.size()));
  std::vector<VertexMask> rows(n, 0);
  long long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int chunk = byte_at(pos + k / 6);
      if ((chunk >> (5 - k % 6)) & 1) {
        rows[i] |= bit(j);
        rows[j] |= bit(i);
      }
    }
  }
  return Graph::from_rows(std::move(rows));
}

Graph parse_graph(std::string_view text, GraphFormat format) {
  if (format == GraphFormat::automatic) {
    format = GraphFormat::graph6;
    std::size_t pos = 0;
    while (pos < text.size()) {
      std::size_t end = text.find('\n', pos);
      if (end == std::string_view::npos) end = text.size();
      std::string_view line = trim(text.substr(pos, end - pos));
      pos = end + 1;
      if (line.empty() || line.front() == '#') continue;
      bool digits = true;
      for (char c : line) digits = digits && std::isdigit(static_cast<unsigned char>(c));
      if (digits) format = GraphFormat::edge_list;
      break;
    }
  }
  if (format == GraphFormat::edge_list) return parse_edge_list(text);
  const auto records = split_graph6_lines(text);
  if (records.size() != 1)
    throw Error(ErrorKind::parse, "graph6: expected exactly one graph, found " + std::to_string(records.size()));
  return parse_graph6(records.front().text);
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(static_cast<char>(126));
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int chunk = 0, filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + 63));
        chunk = filled = 0;
      }
    }
  }
  if (filled) out.push_back(static_cast<char>((chunk << (6 - filled)) + 63));
  return out;
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.order() << '\n';
  for (auto [u, v] : g.edges()) os << u + 1 << ' ' << v + 1 << '\n';
  return os.str();
}

std::vector<Graph6Record> split_graph6_lines(std::string_view text) {
  std::vector<Graph6Record> out;
  std::size_t pos = 0;
  int lineno = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = trim(text.substr(pos, end - pos));
    ++lineno;
    pos = end + 1;
    if (line.empty() || line.front() == '#') continue;
    out.push_back({lineno, std::string(line)});
  }
  return out;
}

}  // namespace stabring
