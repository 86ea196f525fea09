#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "graph.hpp"

namespace biphole {

// Orders up to this run the exact subset DP (2^n words of memory);
// beyond it the cycle searches fall back to plain backtracking.
constexpr int kCycleDpMaxOrder = 22;

struct CycleWitness {
  std::vector<int> vertices;  // cycle order; closing edge back to front implied
};

namespace detail {

inline std::vector<std::uint32_t> adjacency_words(const Graph& g) {
  std::vector<std::uint32_t> rows(g.n());
  for (int v = 0; v < g.n(); ++v)
    rows[v] = static_cast<std::uint32_t>(g.neighbors(v).low_word());
  return rows;
}

// Walks an anchored path DP backwards from (mask, v) to the anchor,
// always taking the least predecessor; returns anchor..v in path order.
inline std::vector<int> unwind_path(const std::vector<std::uint32_t>& dp,
                                    const std::vector<std::uint32_t>& rows, std::uint32_t mask,
                                    int v) {
  std::vector<int> rev{v};
  while (std::popcount(mask) > 1) {
    std::uint32_t rest = mask & ~(1u << v);
    std::uint32_t prevs = dp[rest] & rows[v];
    int u = std::countr_zero(prevs);
    mask = rest;
    v = u;
    rev.push_back(v);
  }
  std::reverse(rev.begin(), rev.end());
  return rev;
}

// Exhaustive path DFS from anchor; succeeds on the first path that
// covers `need`, has length >= 3 and closes back to the anchor.
// Neighbors are tried in increasing order, so the result is stable.
inline std::optional<CycleWitness> backtrack_cycle(const Graph& g, const VertexSet& need,
                                                   int anchor) {
  int n = g.n();
  std::vector<int> path{anchor};
  VertexSet used(n);
  used.add(anchor);
  int missing = 0;  // vertices of `need` not yet on the path
  for (int v : need)
    if (v != anchor) ++missing;

  auto rec = [&](auto&& self) -> std::optional<CycleWitness> {
    int cur = path.back();
    if (path.size() >= 3 && missing == 0 && g.adjacent(cur, anchor))
      return CycleWitness{path};
    for (int w : g.neighbors(cur)) {
      if (used.contains(w)) continue;
      used.add(w);
      path.push_back(w);
      if (need.contains(w)) --missing;
      if (auto res = self(self)) return res;
      if (need.contains(w)) ++missing;
      path.pop_back();
      used.remove(w);
    }
    return std::nullopt;
  };
  return rec(rec);
}

}  // namespace detail

inline std::optional<CycleWitness> hamiltonian_cycle(const Graph& g) {
  int n = g.n();
  if (n < 3) return std::nullopt;
  if (n > kCycleDpMaxOrder) {
    VertexSet all = VertexSet::full(n);
    return detail::backtrack_cycle(g, all, 0);
  }
  auto rows = detail::adjacency_words(g);
  std::vector<std::uint32_t> dp(1u << n, 0);
  dp[1] = 1;  // path {0} ending at 0
  std::uint32_t full = (1u << n) - 1;
  for (std::uint32_t mask = 3; mask <= full; mask += 2) {
    std::uint32_t ends = 0;
    for (std::uint32_t mm = mask & ~1u; mm;) {
      int v = std::countr_zero(mm);
      mm &= mm - 1;
      if (dp[mask & ~(1u << v)] & rows[v]) ends |= 1u << v;
    }
    dp[mask] = ends;
  }
  std::uint32_t closers = dp[full] & rows[0] & ~1u;
  if (!closers) return std::nullopt;
  int v = std::countr_zero(closers);
  return CycleWitness{detail::unwind_path(dp, rows, full, v)};
}

// Which cycle lengths occur. Exact, all lengths from one DP sweep.
struct CycleSpectrum {
  int n = 0;
  std::vector<bool> present;  // index = length, valid 3..n

  bool has(int len) const { return len >= 3 && len <= n && present[len]; }
  bool hamiltonian() const { return n >= 3 && present[n]; }
  bool pancyclic() const {
    if (n < 3) return false;
    for (int len = 3; len <= n; ++len)
      if (!present[len]) return false;
    return true;
  }
  std::vector<int> lengths() const {
    std::vector<int> out;
    for (int len = 3; len <= n; ++len)
      if (present[len]) out.push_back(len);
    return out;
  }
};

inline CycleSpectrum cycle_spectrum(const Graph& g) {
  int n = g.n();
  if (n > kCycleDpMaxOrder)
    throw std::invalid_argument("cycle_spectrum: order above " +
                                std::to_string(kCycleDpMaxOrder) + " not supported");
  CycleSpectrum sp;
  sp.n = n;
  sp.present.assign(n + 1, false);
  if (n < 3) return sp;

  auto rows = detail::adjacency_words(g);
  std::vector<std::uint32_t> dp(1u << n, 0);
  int wanted = n - 2;
  // dp[mask] is anchored at the least bit of mask, so one ascending
  // sweep covers every anchor choice.
  for (std::uint32_t mask = 1, full = (1u << n) - 1; mask <= full; ++mask) {
    int a = std::countr_zero(mask);
    if (mask == (1u << a)) {
      dp[mask] = mask;
      continue;
    }
    std::uint32_t ends = 0;
    for (std::uint32_t mm = mask & ~(1u << a); mm;) {
      int v = std::countr_zero(mm);
      mm &= mm - 1;
      if (dp[mask & ~(1u << v)] & rows[v]) ends |= 1u << v;
    }
    dp[mask] = ends;
    int len = std::popcount(mask);
    if (len >= 3 && !sp.present[len] && (ends & rows[a] & ~(1u << a))) {
      sp.present[len] = true;
      if (--wanted == 0) break;
    }
  }
  return sp;
}

inline bool is_hamiltonian(const Graph& g) { return hamiltonian_cycle(g).has_value(); }

inline bool is_pancyclic(const Graph& g) { return cycle_spectrum(g).pancyclic(); }

inline std::optional<std::vector<int>> hamiltonian_path(const Graph& g) {
  int n = g.n();
  if (n < 1) return std::nullopt;
  if (n == 1) return std::vector<int>{0};
  if (n > kCycleDpMaxOrder)
    throw std::invalid_argument("hamiltonian_path: order above " +
                                std::to_string(kCycleDpMaxOrder) + " not supported");
  auto rows = detail::adjacency_words(g);
  std::vector<std::uint32_t> dp(1u << n, 0);
  std::uint32_t full = (1u << n) - 1;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    if (std::popcount(mask) == 1) {
      dp[mask] = mask;
      continue;
    }
    std::uint32_t ends = 0;
    for (std::uint32_t mm = mask; mm;) {
      int v = std::countr_zero(mm);
      mm &= mm - 1;
      if (dp[mask & ~(1u << v)] & rows[v]) ends |= 1u << v;
    }
    dp[mask] = ends;
  }
  if (!dp[full]) return std::nullopt;
  return detail::unwind_path(dp, rows, full, std::countr_zero(dp[full]));
}

// Some cycle containing every vertex of `need` (any cycle when empty).
// First hit in ascending-bitmask order, so answers are reproducible.
inline std::optional<CycleWitness> cycle_through(const Graph& g, const VertexSet& need) {
  int n = g.n();
  if (need.universe() != n) throw std::invalid_argument("cycle_through: universe mismatch");
  if (n < 3) return std::nullopt;

  if (n > kCycleDpMaxOrder) {
    if (!need.empty()) return detail::backtrack_cycle(g, need, need.first());
    // any cycle at all: first non-tree edge of a BFS forest closes one
    // through the lowest common ancestor of its endpoints
    std::vector<int> parent(n, -1), depth(n, -1);
    for (int s = 0; s < n; ++s) {
      if (depth[s] >= 0) continue;
      depth[s] = 0;
      std::vector<int> queue{s};
      for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        int u = queue[qi];
        for (int w : g.neighbors(u)) {
          if (depth[w] < 0) {
            depth[w] = depth[u] + 1;
            parent[w] = u;
            queue.push_back(w);
            continue;
          }
          if (w == parent[u] || parent[w] == u) continue;
          std::vector<int> left{u}, right{w};
          int x = u, y = w;
          while (depth[x] > depth[y]) left.push_back(x = parent[x]);
          while (depth[y] > depth[x]) right.push_back(y = parent[y]);
          while (x != y) {
            left.push_back(x = parent[x]);
            right.push_back(y = parent[y]);
          }
          left.pop_back();  // drop duplicated ancestor from one side
          left.insert(left.end(), right.rbegin(), right.rend());
          return CycleWitness{left};
        }
      }
    }
    return std::nullopt;
  }

  auto rows = detail::adjacency_words(g);
  std::uint32_t want = static_cast<std::uint32_t>(need.low_word());
  std::vector<std::uint32_t> dp(1u << n, 0);
  std::uint32_t full = (1u << n) - 1;
  int anchor = need.empty() ? -1 : need.first();
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    int a;
    if (anchor >= 0) {
      if (!(mask & (1u << anchor))) continue;
      a = anchor;
    } else {
      a = std::countr_zero(mask);
    }
    if (mask == (1u << a)) {
      dp[mask] = mask;
      continue;
    }
    std::uint32_t ends = 0;
    for (std::uint32_t mm = mask & ~(1u << a); mm;) {
      int v = std::countr_zero(mm);
      mm &= mm - 1;
      if (dp[mask & ~(1u << v)] & rows[v]) ends |= 1u << v;
    }
    dp[mask] = ends;
    if (std::popcount(mask) < 3 || (mask & want) != want) continue;
    std::uint32_t closers = ends & rows[a] & ~(1u << a);
    if (closers)
      return CycleWitness{detail::unwind_path(dp, rows, mask, std::countr_zero(closers))};
  }
  return std::nullopt;
}

}  // namespace biphole
