#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "graph.hpp"
#include "holes.hpp"

namespace biphole {

// Vertex connectivity as the smallest spectrum value: kappa equals
// min over 1 <= s <= n - delta of min_{|S|=s} |N(S)|.
inline int vertex_connectivity(const HoleSpectrum& sp) {
  return *std::min_element(sp.min_nbhd.begin(), sp.min_nbhd.end());
}

inline int vertex_connectivity(const Graph& g) {
  return vertex_connectivity(hole_spectrum(g));
}

struct CutCertificate {
  bool complete = false;  // complete graphs have no separating set
  VertexSet separator;    // meaningful when !complete; empty iff disconnected
};

struct ConnectivityResult {
  int kappa = 0;
  CutCertificate cut;
};

namespace detail {

// Unit-style max flow used only for the Menger-based connectivity
// oracle. Arc pairs are stored forward/backward at ids 2k, 2k+1.
class FlowNetwork {
 public:
  explicit FlowNetwork(int nodes) : adj_(nodes) {}

  void add_arc(int u, int v, int c) {
    adj_[u].push_back(static_cast<int>(to_.size()));
    to_.push_back(v);
    cap0_.push_back(c);
    adj_[v].push_back(static_cast<int>(to_.size()));
    to_.push_back(u);
    cap0_.push_back(0);
  }

  // Augments unit paths until limit is reached or no path remains.
  int max_flow(int s, int t, int limit) {
    cap_ = cap0_;
    int flow = 0;
    while (flow < limit && augment(s, t)) ++flow;
    return flow;
  }

  // Residual-reachable nodes after the last max_flow call.
  std::vector<char> residual_reachable(int s) const {
    std::vector<char> seen(adj_.size(), 0);
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int id : adj_[u]) {
        if (cap_[id] <= 0 || seen[to_[id]]) continue;
        seen[to_[id]] = 1;
        stack.push_back(to_[id]);
      }
    }
    return seen;
  }

 private:
  bool augment(int s, int t) {
    std::vector<int> via(adj_.size(), -1);
    std::vector<int> queue{s};
    via[s] = -2;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int u = queue[qi];
      if (u == t) break;
      for (int id : adj_[u]) {
        int v = to_[id];
        if (cap_[id] <= 0 || via[v] != -1) continue;
        via[v] = id;
        queue.push_back(v);
      }
    }
    if (via[t] == -1) return false;
    for (int u = t; u != s;) {
      int id = via[u];
      --cap_[id];
      ++cap_[id ^ 1];
      u = to_[id ^ 1];
    }
    return true;
  }

  std::vector<std::vector<int>> adj_;
  std::vector<int> to_;
  std::vector<int> cap_, cap0_;
};

// Split digraph for internally disjoint paths: v_in = 2v, v_out = 2v+1,
// unit capacity through each vertex, fat capacity along edges.
inline FlowNetwork split_network(const Graph& g) {
  FlowNetwork net(2 * g.n());
  for (int v = 0; v < g.n(); ++v) net.add_arc(2 * v, 2 * v + 1, 1);
  for (int u = 0; u < g.n(); ++u)
    for (int v : g.neighbors(u)) net.add_arc(2 * u + 1, 2 * v, g.n());
  return net;
}

}  // namespace detail

// Menger route: kappa is the smallest max-flow over nonadjacent pairs.
// Shares no code with the spectrum formula above.
inline ConnectivityResult vertex_connectivity_oracle(const Graph& g) {
  int n = g.n();
  if (n < 1) throw std::invalid_argument("vertex_connectivity_oracle: empty graph");
  if (g.m() == static_cast<long long>(n) * (n - 1) / 2)
    return {n - 1, {true, VertexSet(n)}};
  if (!is_connected(g)) return {0, {false, VertexSet(n)}};

  detail::FlowNetwork net = detail::split_network(g);
  int best = n;
  int bu = -1, bv = -1;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (g.adjacent(u, v)) continue;
      int f = net.max_flow(2 * u + 1, 2 * v, best);
      if (f < best) {
        best = f;
        bu = u;
        bv = v;
      }
    }

  net.max_flow(2 * bu + 1, 2 * bv, n);
  std::vector<char> reach = net.residual_reachable(2 * bu + 1);
  VertexSet sep(n);
  for (int v = 0; v < n; ++v)
    if (reach[2 * v] && !reach[2 * v + 1]) sep.add(v);
  return {best, {false, sep}};
}

inline bool is_two_connected(const Graph& g) {
  return g.n() >= 3 && vertex_connectivity_oracle(g).kappa >= 2;
}

// Largest pairwise-nonadjacent vertex set, by branch and bound on the
// max-degree pivot.
inline int independence_number(const Graph& g) {
  int n = g.n();
  if (n > 63) throw std::invalid_argument("independence_number: order above 63 not supported");
  if (n == 0) return 0;
  std::vector<std::uint64_t> rows(n);
  for (int v = 0; v < n; ++v) rows[v] = g.neighbors(v).low_word();

  int best = 0;
  auto rec = [&](auto&& self, std::uint64_t pool, int cur) -> void {
    if (cur + std::popcount(pool) <= best) return;
    if (!pool) {
      best = cur;
      return;
    }
    int pivot = -1, pivot_deg = -1;
    for (std::uint64_t mm = pool; mm;) {
      int v = std::countr_zero(mm);
      mm &= mm - 1;
      int d = std::popcount(rows[v] & pool);
      if (d > pivot_deg) {
        pivot_deg = d;
        pivot = v;
      }
    }
    self(self, pool & ~(rows[pivot] | (1ull << pivot)), cur + 1);
    self(self, pool & ~(1ull << pivot), cur);
  };
  rec(rec, (n == 63 ? ~0ull >> 1 : (1ull << n) - 1), 0);
  return best;
}

}  // namespace biphole
