#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "vertex_set.hpp"

namespace biphole {

// Simple undirected graph on vertices 0..n-1, adjacency kept as one
// VertexSet row per vertex. Immutable after construction; "edits" like
// with_edge return a fresh graph.
class Graph {
 public:
  Graph() = default;

  // Takes ownership of prebuilt rows; checks they describe a simple
  // undirected graph (no loops, symmetric).
  static Graph from_adjacency(std::vector<VertexSet> adj) {
    Graph g;
    g.n_ = static_cast<int>(adj.size());
    g.adj_ = std::move(adj);
    long long deg_sum = 0;
    for (int u = 0; u < g.n_; ++u) {
      if (g.adj_[u].universe() != g.n_)
        throw std::invalid_argument("Graph: adjacency row universe mismatch");
      if (g.adj_[u].contains(u)) throw std::invalid_argument("Graph: self-loop");
      for (int v : g.adj_[u])
        if (!g.adj_[v].contains(u)) throw std::invalid_argument("Graph: asymmetric adjacency");
      deg_sum += g.adj_[u].count();
    }
    g.m_ = deg_sum / 2;
    return g;
  }

  int n() const { return n_; }
  long long m() const { return m_; }

  bool adjacent(int u, int v) const { return adj_[u].contains(v); }
  const VertexSet& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return adj_[v].count(); }

  Graph with_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("with_edge: self-loop");
    if (adjacent(u, v)) return *this;
    std::vector<VertexSet> rows = adj_;
    rows[u].add(v);
    rows[v].add(u);
    return from_adjacency(std::move(rows));
  }

  bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }
  bool operator!=(const Graph& o) const { return !(*this == o); }

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex index " + std::to_string(v));
  }

  int n_ = 0;
  long long m_ = 0;
  std::vector<VertexSet> adj_;
};

inline Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 0) throw std::invalid_argument("build_graph: negative order");
  std::vector<VertexSet> rows(n, VertexSet(n));
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("build_graph: vertex out of range");
    if (u == v) throw std::invalid_argument("build_graph: self-loop");
    rows[u].add(v);
    rows[v].add(u);
  }
  return Graph::from_adjacency(std::move(rows));
}

inline std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> d(g.n());
  for (int v = 0; v < g.n(); ++v) d[v] = g.degree(v);
  return d;
}

inline int min_degree(const Graph& g) {
  int d = g.n() == 0 ? 0 : g.n();
  for (int v = 0; v < g.n(); ++v) d = std::min(d, g.degree(v));
  return d;
}

// Minimum degree sum over nonadjacent vertex pairs; empty when no such
// pair exists (complete graphs and n <= 1), which callers treat as
// "every degree-sum condition holds".
inline std::optional<int> sigma2(const Graph& g) {
  std::optional<int> best;
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v) {
      if (g.adjacent(u, v)) continue;
      int s = g.degree(u) + g.degree(v);
      if (!best || s < *best) best = s;
    }
  return best;
}

// Union of neighbourhoods of S, minus S itself.
inline VertexSet neighborhood_of_set(const Graph& g, const VertexSet& s) {
  VertexSet nb(g.n());
  for (int v : s) nb |= g.neighbors(v);
  nb -= s;
  return nb;
}

// Connected components as vertex sets, smallest first; ties broken by
// least contained vertex, so the order is deterministic.
inline std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> comps;
  VertexSet seen(g.n());
  for (int v = 0; v < g.n(); ++v) {
    if (seen.contains(v)) continue;
    VertexSet comp(g.n());
    comp.add(v);
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet nxt(g.n());
      for (int u : frontier) nxt |= g.neighbors(u);
      nxt -= comp;
      comp |= nxt;
      frontier = nxt;
    }
    seen |= comp;
    comps.push_back(std::move(comp));
  }
  std::sort(comps.begin(), comps.end(), [](const VertexSet& a, const VertexSet& b) {
    int ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    return a.first() < b.first();
  });
  return comps;
}

inline bool is_connected(const Graph& g) { return components(g).size() <= 1; }

// Lexicographically least triangle, if any.
inline std::optional<std::array<int, 3>> find_triangle(const Graph& g) {
  for (int u = 0; u < g.n(); ++u)
    for (int v : g.neighbors(u)) {
      if (v <= u) continue;
      VertexSet common = g.neighbors(u) & g.neighbors(v);
      for (int w : common)
        if (w > v) return std::array<int, 3>{u, v, w};
    }
  return std::nullopt;
}

inline bool has_triangle(const Graph& g) { return find_triangle(g).has_value(); }

// Proper 2-coloring when one exists. Vertex 0 of each component goes in
// the first side, so the split is deterministic.
inline std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Graph& g) {
  std::vector<int> color(g.n(), -1);
  std::vector<int> stack;
  for (int s = 0; s < g.n(); ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v : g.neighbors(u)) {
        if (color[v] < 0) {
          color[v] = 1 - color[u];
          stack.push_back(v);
        } else if (color[v] == color[u]) {
          return std::nullopt;
        }
      }
    }
  }
  VertexSet a(g.n()), b(g.n());
  for (int v = 0; v < g.n(); ++v) (color[v] == 0 ? a : b).add(v);
  return std::make_pair(a, b);
}

inline bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

// True exactly for K_{k,k} with k >= 1.
inline bool is_balanced_complete_bipartite(const Graph& g) {
  if (g.n() < 2 || g.n() % 2 != 0) return false;
  auto parts = bipartition(g);
  if (!parts) return false;
  auto [a, b] = *parts;
  if (a.count() != b.count()) return false;
  // complete across the split: every vertex sees the whole other side
  for (int v : a)
    if (g.neighbors(v) != b) return false;
  for (int v : b)
    if (g.neighbors(v) != a) return false;
  return true;
}

// Repeatedly joins nonadjacent pairs u,v with d(u)+d(v) >= n until no
// such pair remains. The result does not depend on the join order.
inline Graph bondy_chvatal_closure(const Graph& g) {
  int n = g.n();
  std::vector<VertexSet> rows(n, VertexSet(n));
  std::vector<int> deg(n);
  for (int v = 0; v < n; ++v) {
    rows[v] = g.neighbors(v);
    deg[v] = g.degree(v);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        if (rows[u].contains(v) || deg[u] + deg[v] < n) continue;
        rows[u].add(v);
        rows[v].add(u);
        ++deg[u];
        ++deg[v];
        changed = true;
      }
  }
  return Graph::from_adjacency(std::move(rows));
}

}  // namespace biphole
