#pragma once

// Deliberately naive reference implementations used only by tests.
// They follow the plain definitions with none of the library's
// shortcuts, so agreement is meaningful evidence.

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "biphole/graph.hpp"

namespace oracle {

// Calls fn(combo) for every k-subset of 0..n-1 in lexicographic order;
// stops early when fn returns true. Returns whether any call did.
template <class Fn>
bool any_combination(int n, int k, Fn&& fn) {
  if (k > n) return false;
  std::vector<int> c(k);
  std::iota(c.begin(), c.end(), 0);
  while (true) {
    if (fn(c)) return true;
    int i = k - 1;
    while (i >= 0 && c[i] == n - k + i) --i;
    if (i < 0) return false;
    ++c[i];
    for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  }
}

inline bool has_hole_naive(const biphole::Graph& g, int s, int t) {
  int n = g.n();
  if (s + t > n) return false;
  return any_combination(n, s, [&](const std::vector<int>& sc) {
    // vertices with no edge into sc
    std::vector<int> free;
    for (int v = 0; v < n; ++v) {
      if (std::find(sc.begin(), sc.end(), v) != sc.end()) continue;
      bool touches = false;
      for (int u : sc)
        if (g.adjacent(u, v)) {
          touches = true;
          break;
        }
      if (!touches) free.push_back(v);
    }
    return static_cast<int>(free.size()) >= t;
  });
}

// Least k such that some split s + t = k + 1 admits no (s,t)-hole.
inline int tialpha_naive(const biphole::Graph& g) {
  int n = g.n();
  for (int k = 1;; ++k)
    for (int s = 1; s <= k; ++s) {
      int t = k + 1 - s;
      if (t < 1) continue;
      if (s + t > n || !has_hole_naive(g, s, t)) return k;
    }
}

inline int min_nbhd_naive(const biphole::Graph& g, int s) {
  int n = g.n();
  int best = n;
  any_combination(n, s, [&](const std::vector<int>& sc) {
    std::vector<char> in_s(n, 0), nb(n, 0);
    for (int v : sc) in_s[v] = 1;
    for (int v : sc)
      for (int u = 0; u < n; ++u)
        if (g.adjacent(v, u) && !in_s[u]) nb[u] = 1;
    int count = 0;
    for (int u = 0; u < n; ++u) count += nb[u];
    best = std::min(best, count);
    return false;
  });
  return best;
}

inline bool connected_after_removal(const biphole::Graph& g, const std::vector<int>& removed) {
  int n = g.n();
  std::vector<char> gone(n, 0);
  for (int v : removed) gone[v] = 1;
  int start = -1, kept = 0;
  for (int v = 0; v < n; ++v)
    if (!gone[v]) {
      if (start < 0) start = v;
      ++kept;
    }
  if (kept <= 1) return true;
  std::vector<char> seen(n, 0);
  std::vector<int> stack{start};
  seen[start] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v = 0; v < n; ++v)
      if (g.adjacent(u, v) && !gone[v] && !seen[v]) {
        seen[v] = 1;
        ++reached;
        stack.push_back(v);
      }
  }
  return reached == kept;
}

// Smallest vertex set whose removal disconnects the graph (n-1 for
// complete graphs), straight from the definition.
inline int kappa_naive(const biphole::Graph& g) {
  int n = g.n();
  if (n == 1) return 0;
  for (int r = 0; r <= n - 2; ++r) {
    bool found = any_combination(n, r, [&](const std::vector<int>& rem) {
      return !connected_after_removal(g, rem);
    });
    if (found) return r;
  }
  return n - 1;
}

inline int alpha_naive(const biphole::Graph& g) {
  int n = g.n();
  int best = 0;
  for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v)
        if ((mask >> u & 1) && (mask >> v & 1) && g.adjacent(u, v)) ok = false;
    if (ok) best = std::max(best, std::popcount(mask));
  }
  return best;
}

inline bool hamiltonian_naive(const biphole::Graph& g) {
  int n = g.n();
  if (n < 3) return false;
  std::vector<int> perm(n - 1);
  std::iota(perm.begin(), perm.end(), 1);
  do {
    bool ok = g.adjacent(0, perm.front()) && g.adjacent(perm.back(), 0);
    for (int i = 0; ok && i + 1 < n - 1; ++i) ok = g.adjacent(perm[i], perm[i + 1]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline bool hamiltonian_path_naive(const biphole::Graph& g) {
  int n = g.n();
  if (n == 1) return true;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; ok && i + 1 < n; ++i) ok = g.adjacent(perm[i], perm[i + 1]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Which cycle lengths occur, by trying every vertex sequence.
inline std::vector<int> cycle_lengths_naive(const biphole::Graph& g) {
  int n = g.n();
  std::vector<char> present(n + 1, 0);
  for (int len = 3; len <= n; ++len) {
    any_combination(n, len, [&](const std::vector<int>& used) {
      std::vector<int> perm(used.begin() + 1, used.end());
      std::sort(perm.begin(), perm.end());
      do {
        bool ok = g.adjacent(used[0], perm.front()) && g.adjacent(perm.back(), used[0]);
        for (int i = 0; ok && i + 1 < len - 1; ++i) ok = g.adjacent(perm[i], perm[i + 1]);
        if (ok) {
          present[len] = 1;
          return true;
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
      return false;
    });
  }
  std::vector<int> out;
  for (int len = 3; len <= n; ++len)
    if (present[len]) out.push_back(len);
  return out;
}

inline bool cycle_through_naive(const biphole::Graph& g, const std::vector<int>& need) {
  int n = g.n();
  for (int len = std::max(3, static_cast<int>(need.size())); len <= n; ++len) {
    bool found = any_combination(n, len, [&](const std::vector<int>& used) {
      for (int v : need)
        if (std::find(used.begin(), used.end(), v) == used.end()) return false;
      std::vector<int> perm(used.begin() + 1, used.end());
      std::sort(perm.begin(), perm.end());
      do {
        bool ok = g.adjacent(used[0], perm.front()) && g.adjacent(perm.back(), used[0]);
        for (int i = 0; ok && i + 1 < len - 1; ++i) ok = g.adjacent(perm[i], perm[i + 1]);
        if (ok) return true;
      } while (std::next_permutation(perm.begin(), perm.end()));
      return false;
    });
    if (found) return true;
  }
  return false;
}

// ---- random graph helpers for property tests ----

inline biphole::Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution flip(p);
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (flip(rng)) e.emplace_back(u, v);
  return biphole::build_graph(n, e);
}

inline std::optional<std::pair<int, int>> random_non_edge(std::mt19937_64& rng,
                                                          const biphole::Graph& g) {
  std::vector<std::pair<int, int>> candidates;
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v)
      if (!g.adjacent(u, v)) candidates.emplace_back(u, v);
  if (candidates.empty()) return std::nullopt;
  std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
  return candidates[pick(rng)];
}

}  // namespace oracle
