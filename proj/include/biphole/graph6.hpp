#pragma once

#include <cstdint>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "graph.hpp"

namespace biphole {

struct Graph6Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

inline int g6_byte(unsigned char c, std::string_view line) {
  if (c < 63 || c > 126)
    throw Graph6Error("graph6: byte out of range in \"" + std::string(line) + "\"");
  return c - 63;
}

}  // namespace detail

// Decodes one graph6 string (no trailing newline). Strict: the length
// must match the order exactly and padding bits must be zero.
inline Graph parse_graph6(std::string_view s) {
  if (s.empty()) throw Graph6Error("graph6: empty input");
  std::size_t pos = 0;
  long long n;
  if (s[0] == '~') {
    if (s.size() >= 2 && s[1] == '~')
      throw Graph6Error("graph6: order above 258047 not supported");
    if (s.size() < 4) throw Graph6Error("graph6: truncated order field");
    n = 0;
    for (int i = 1; i <= 3; ++i) n = (n << 6) | detail::g6_byte(s[i], s);
    if (n < 63) throw Graph6Error("graph6: non-canonical long order field");
    pos = 4;
  } else {
    n = detail::g6_byte(s[0], s);
    pos = 1;
  }

  long long bits = n * (n - 1) / 2;
  std::size_t need = static_cast<std::size_t>((bits + 5) / 6);
  if (s.size() - pos != need)
    throw Graph6Error("graph6: expected " + std::to_string(need) + " data bytes, got " +
                      std::to_string(s.size() - pos));

  std::vector<VertexSet> rows(n, VertexSet(static_cast<int>(n)));
  long long k = 0;
  int cur = 0, left = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++k) {
      if (left == 0) {
        cur = detail::g6_byte(s[pos++], s);
        left = 6;
      }
      if (cur & (1 << (left - 1))) {
        rows[u].add(v);
        rows[v].add(u);
      }
      --left;
    }
  if (left > 0 && (cur & ((1 << left) - 1)))
    throw Graph6Error("graph6: nonzero padding bits");
  return Graph::from_adjacency(std::move(rows));
}

inline std::string write_graph6(const Graph& g) {
  int n = g.n();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  } else {
    throw Graph6Error("graph6: order above 258047 not supported");
  }
  int cur = 0, used = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) {
      cur = (cur << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++used == 6) {
        out.push_back(static_cast<char>(cur + 63));
        cur = used = 0;
      }
    }
  if (used > 0) out.push_back(static_cast<char>((cur << (6 - used)) + 63));
  return out;
}

// Reads one graph per line; blank lines and ">>...<<" headers are
// skipped. Parse failures carry the 1-based line number.
inline std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.rfind(">>", 0) == 0) continue;
    try {
      out.push_back(parse_graph6(line));
    } catch (const Graph6Error& e) {
      throw Graph6Error("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

// Plain text edge list: first line "n m", then m lines "u v".
inline Graph parse_edge_list(std::istream& in) {
  long long n, m;
  if (!(in >> n >> m)) throw std::invalid_argument("edge list: missing \"n m\" header");
  if (n < 0 || m < 0) throw std::invalid_argument("edge list: negative header values");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    long long u, v;
    if (!(in >> u >> v))
      throw std::invalid_argument("edge list: expected " + std::to_string(m) +
                                  " edges, found " + std::to_string(i));
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("edge list: vertex out of range in edge " +
                                  std::to_string(i + 1));
    if (u == v)
      throw std::invalid_argument("edge list: self-loop in edge " + std::to_string(i + 1));
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  return build_graph(static_cast<int>(n), edges);
}

inline Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

inline std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.n() << ' ' << g.m() << '\n';
  for (int u = 0; u < g.n(); ++u)
    for (int v : g.neighbors(u))
      if (v > u) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace biphole
