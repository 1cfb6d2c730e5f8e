#pragma once

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "geodekit/graph.hpp"

namespace geodekit {

// Input decoding failure, with a position usable in diagnostics.
class ParseError : public std::runtime_error {
public:
  ParseError(std::string message, int line, int column)
      : std::runtime_error("parse error at line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + std::move(message)),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

private:
  int line_;
  int column_;
};

// Edge-list text: first line the vertex count, then one "u v" pair per line.
inline Graph read_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  int n = -1;
  EdgeList edges;
  while (std::getline(in, line)) {
    ++lineno;
    // Tolerate trailing blank lines only.
    if (line.find_first_not_of(" \t\r") == std::string::npos) {
      if (in.peek() == EOF) break;
      throw ParseError("blank line inside edge list", lineno, 1);
    }
    std::istringstream ls(line);
    if (n < 0) {
      if (!(ls >> n) || n <= 0) throw ParseError("expected positive vertex count", lineno, 1);
    } else {
      int u, v;
      if (!(ls >> u >> v)) throw ParseError("expected edge 'u v'", lineno, 1);
      edges.emplace_back(u, v);
    }
    std::string rest;
    if (ls >> rest) throw ParseError("trailing data '" + rest + "'", lineno, 1);
  }
  if (n < 0) throw ParseError("empty input", 1, 1);
  try {
    return Graph(n, edges);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), lineno, 1);
  }
}

inline std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

// Standard graph6 encoding for graphs on at most 62 vertices.
inline std::string write_graph6(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 62) {
    throw std::invalid_argument("graph6 output supports at most 62 vertices, got " +
                                std::to_string(n));
  }
  std::string out;
  out.push_back(static_cast<char>(n + 63));
  int bits = 0;
  int acc = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        bits = 0;
        acc = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
  return out;
}

inline Graph read_graph6(std::string_view text) {
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.substr(0, kHeader.size()) == kHeader) text.remove_prefix(kHeader.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty graph6 input", 1, 1);
  unsigned char first = static_cast<unsigned char>(text[0]);
  if (first == 126) {
    throw ParseError("graph6 input has more than 62 vertices, not supported", 1, 1);
  }
  if (first < 63 || first > 125) throw ParseError("invalid graph6 size byte", 1, 1);
  const int n = first - 63;
  if (n == 0) throw ParseError("graph6 graph has no vertices", 1, 1);
  const std::size_t pair_bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t need = (pair_bits + 5) / 6;
  if (text.size() - 1 != need) {
    throw ParseError("graph6 body has wrong length", 1, 2);
  }
  EdgeList edges;
  std::size_t bit = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++bit) {
      unsigned char c = static_cast<unsigned char>(text[1 + bit / 6]);
      if (c < 63 || c > 126) {
        throw ParseError("invalid graph6 byte", 1, static_cast<int>(2 + bit / 6));
      }
      if ((c - 63) >> (5 - bit % 6) & 1) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

// DOT export (write-only), vertex indices as node labels.
inline std::string write_dot(const Graph& g) {
  std::ostringstream out;
  out << "graph g {\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 0) out << "  " << v << ";\n";
  }
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace geodekit
