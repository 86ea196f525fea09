#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "graph.hpp"

namespace biphole {

// An (s,t)-bipartite-hole: disjoint vertex sets S, T with |S| = s,
// |T| = t and no edge between them.
struct BipartiteHole {
  VertexSet s;
  VertexSet t;
};

// First hole in lexicographic order: S runs through s-subsets in lex
// order, T is the t least vertices outside S with no neighbour in S.
inline std::optional<BipartiteHole> find_bipartite_hole(const Graph& g, int s, int t) {
  int n = g.n();
  if (s < 1 || t < 1) throw std::invalid_argument("find_bipartite_hole: sides must be positive");
  if (s + t > n) throw std::invalid_argument("find_bipartite_hole: sides exceed order");
  std::vector<int> c(s);
  std::iota(c.begin(), c.end(), 0);
  while (true) {
    VertexSet in_s(n);
    for (int v : c) in_s.add(v);
    VertexSet in_t(n);
    int found = 0;
    for (int v = 0; v < n; ++v) {
      if (in_s.contains(v) || g.neighbors(v).intersects(in_s)) continue;
      in_t.add(v);
      if (++found == t) return BipartiteHole{in_s, in_t};
    }
    int i = s - 1;
    while (i >= 0 && c[i] == n - s + i) --i;
    if (i < 0) return std::nullopt;
    ++c[i];
    for (int j = i + 1; j < s; ++j) c[j] = c[j - 1] + 1;
  }
}

// min |N(S)| over |S| = s, for every s from 1 up to n - delta.
struct HoleSpectrum {
  int n = 0;
  int delta = 0;
  std::vector<int> min_nbhd;  // min_nbhd[s-1] = min over |S|=s of |N(S)|

  int s_max() const { return static_cast<int>(min_nbhd.size()); }
  int value(int s) const { return min_nbhd.at(s - 1); }
};

// Exhaustive: every subset size s is scanned over all C(n,s) subsets
// in ascending bitmask order, stopping early once the minimum hits 0.
inline HoleSpectrum hole_spectrum(const Graph& g) {
  int n = g.n();
  if (n < 1) throw std::invalid_argument("hole_spectrum: empty graph");
  if (n > 63) throw std::invalid_argument("hole_spectrum: order above 63 not supported");
  std::vector<std::uint64_t> rows(n);
  for (int v = 0; v < n; ++v) rows[v] = g.neighbors(v).low_word();

  HoleSpectrum sp;
  sp.n = n;
  sp.delta = min_degree(g);
  for (int s = 1; s <= n - sp.delta; ++s) {
    int best = n;
    std::uint64_t mask = (1ull << s) - 1;
    std::uint64_t last = mask << (n - s);
    while (true) {
      std::uint64_t nb = 0;
      for (std::uint64_t mm = mask; mm;) {
        int v = std::countr_zero(mm);
        mm &= mm - 1;
        nb |= rows[v];
      }
      nb &= ~mask;
      int size = std::popcount(nb);
      if (size < best) {
        best = size;
        if (best == 0) break;
      }
      if (mask == last) break;
      std::uint64_t c = mask & (0 - mask);
      std::uint64_t r = mask + c;
      mask = (((r ^ mask) >> 2) / c) | r;
    }
    sp.min_nbhd.push_back(best);
  }
  return sp;
}

// Bipartite-hole-number as n minus the largest spectrum value.
inline int bipartite_hole_number(const HoleSpectrum& sp) {
  return sp.n - *std::max_element(sp.min_nbhd.begin(), sp.min_nbhd.end());
}

inline int bipartite_hole_number(const Graph& g) {
  return bipartite_hole_number(hole_spectrum(g));
}

// Straight from the definition: the least k such that for some split
// s + t = k + 1 the graph has no (s,t)-bipartite-hole. A split that
// does not even fit in the graph counts as hole-free. Independent of
// hole_spectrum by construction.
inline int bipartite_hole_number_definitional(const Graph& g) {
  int n = g.n();
  if (n < 1) throw std::invalid_argument("bipartite_hole_number_definitional: empty graph");
  for (int k = 1;; ++k) {
    for (int s = 1; 2 * s <= k + 1; ++s) {
      int t = k + 1 - s;
      if (s + t > n) return k;
      if (!find_bipartite_hole(g, s, t)) return k;
    }
  }
}

// Certificate for "hole number equals order": sorted component sizes
// a_1 <= ... <= a_c with each a_i - 1 <= a_1 + ... + a_{i-1}.
struct ComponentSizeCheck {
  bool holds = false;
  std::vector<int> sizes;  // ascending
};

inline ComponentSizeCheck full_hole_number_by_components(const Graph& g) {
  if (g.n() < 1) throw std::invalid_argument("full_hole_number_by_components: empty graph");
  ComponentSizeCheck out;
  for (const VertexSet& c : components(g)) out.sizes.push_back(c.count());
  std::sort(out.sizes.begin(), out.sizes.end());
  int prefix = 0;
  out.holds = true;
  for (int a : out.sizes) {
    if (a - 1 > prefix) {
      out.holds = false;
      break;
    }
    prefix += a;
  }
  return out;
}

// For graphs whose hole number equals the order: component count is at
// least ceil(log2(n+1)). Throws when the precondition fails.
struct ComponentCountBound {
  int component_count = 0;
  int lower_bound = 0;

  bool holds() const { return component_count >= lower_bound; }
};

inline ComponentCountBound component_count_bound(const Graph& g) {
  if (bipartite_hole_number(g) != g.n())
    throw std::invalid_argument("component_count_bound: hole number below order");
  ComponentCountBound out;
  out.component_count = static_cast<int>(components(g).size());
  out.lower_bound = std::bit_width(static_cast<unsigned>(g.n()));
  return out;
}

}  // namespace biphole
