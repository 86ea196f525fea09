#pragma once

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "graph.hpp"

namespace biphole {

// Closed-form values the construction is known to have. Tests compare
// whatever is present here against the computed invariants.
struct FamilyExpectations {
  std::optional<int> sigma2;  // exact; sigma2_infinite covers complete graphs
  bool sigma2_infinite = false;
  std::optional<int> tialpha;      // exact bipartite-hole-number
  std::optional<int> tialpha_max;  // upper bound only
  std::optional<int> kappa;        // exact connectivity
  std::optional<int> kappa_min;    // lower bound only
  std::optional<int> alpha;        // exact independence number
  std::optional<int> regular_degree;
  std::optional<bool> hamiltonian;
  std::optional<bool> pancyclic;
  std::optional<bool> two_connected;
  bool closure_fixed = false;                 // Bondy-Chvatal closure adds nothing
  std::optional<std::pair<int, int>> no_hole;  // this (s,t)-hole must be absent
  std::vector<std::pair<int, int>> has_holes;  // these (s,t)-holes must exist
};

struct FamilyInstance {
  std::string name;
  Graph graph;
  FamilyExpectations expect;
};

inline Graph complete_graph(int n) {
  if (n < 1) throw std::invalid_argument("complete: order must be >= 1");
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return build_graph(n, e);
}

inline Graph complete_bipartite_graph(int a, int b) {
  if (a < 1 || b < 1) throw std::invalid_argument("complete_bipartite: sides must be >= 1");
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) e.emplace_back(u, a + v);
  return build_graph(a + b, e);
}

inline Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle: order must be >= 3");
  std::vector<std::pair<int, int>> e;
  for (int v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
  return build_graph(n, e);
}

inline Graph path_graph(int n) {
  if (n < 1) throw std::invalid_argument("path: order must be >= 1");
  std::vector<std::pair<int, int>> e;
  for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return build_graph(n, e);
}

inline Graph star_graph(int leaves) {
  if (leaves < 1) throw std::invalid_argument("star: need at least one leaf");
  std::vector<std::pair<int, int>> e;
  for (int v = 1; v <= leaves; ++v) e.emplace_back(0, v);
  return build_graph(leaves + 1, e);
}

inline Graph edgeless_graph(int n) {
  if (n < 1) throw std::invalid_argument("edgeless: order must be >= 1");
  return build_graph(n, {});
}

inline Graph disjoint_union(const Graph& g, const Graph& h) {
  int n = g.n() + h.n();
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < g.n(); ++u)
    for (int v : g.neighbors(u))
      if (v > u) e.emplace_back(u, v);
  for (int u = 0; u < h.n(); ++u)
    for (int v : h.neighbors(u))
      if (v > u) e.emplace_back(g.n() + u, g.n() + v);
  return build_graph(n, e);
}

inline Graph join_graphs(const Graph& g, const Graph& h) {
  Graph u = disjoint_union(g, h);
  std::vector<std::pair<int, int>> e;
  for (int x = 0; x < u.n(); ++x)
    for (int y : u.neighbors(x))
      if (y > x) e.emplace_back(x, y);
  for (int x = 0; x < g.n(); ++x)
    for (int y = 0; y < h.n(); ++y) e.emplace_back(x, g.n() + y);
  return build_graph(u.n(), e);
}

// Two cliques sharing exactly vertex 0.
inline Graph one_sum_graph(int a, int b) {
  if (a < 2 || b < 2) throw std::invalid_argument("one_sum: cliques must have >= 2 vertices");
  int n = a + b - 1;
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < a; ++u)
    for (int v = u + 1; v < a; ++v) e.emplace_back(u, v);
  for (int u = a; u < n; ++u) {
    e.emplace_back(0, u);
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  }
  return build_graph(n, e);
}

inline FamilyInstance one_sum_family(int a, int b) {
  Graph g = one_sum_graph(a, b);
  FamilyExpectations x;
  x.sigma2 = a + b - 2;
  x.tialpha = std::max(a, b);
  x.kappa = 1;
  x.alpha = 2;
  x.hamiltonian = false;
  x.two_connected = false;
  return {"one_sum(" + std::to_string(a) + "," + std::to_string(b) + ")", std::move(g), x};
}

// (K_{a-2} union K_{n-a}) joined with K_2, for n/4 + 2 <= a <= n/2.
// Degree-sum minimum lands exactly on n while the hole number stays
// large: min{2a-3, n-a+1}.
inline FamilyInstance two_clique_join_family(int n, int a) {
  if (a < 3 || 4 * a < n + 8 || 2 * a > n)
    throw std::invalid_argument("ex51: need a >= 3 and n/4 + 2 <= a <= n/2");
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < a - 2; ++u)
    for (int v = u + 1; v < a - 2; ++v) e.emplace_back(u, v);
  for (int u = a - 2; u < n - 2; ++u)
    for (int v = u + 1; v < n - 2; ++v) e.emplace_back(u, v);
  e.emplace_back(n - 2, n - 1);
  for (int u = 0; u < n - 2; ++u) {
    e.emplace_back(u, n - 2);
    e.emplace_back(u, n - 1);
  }
  FamilyExpectations x;
  x.sigma2 = n;
  x.tialpha = std::min(2 * a - 3, n - a + 1);
  x.kappa = 2;
  x.alpha = 2;
  x.hamiltonian = true;
  x.pancyclic = true;
  x.two_connected = true;
  return {"ex51(" + std::to_string(n) + "," + std::to_string(a) + ")", build_graph(n, e), x};
}

// (C_p union K_q) joined with K_r for p >= 4, q >= 2p,
// 2p-1 <= r <= p+q-5. Has sigma2 = 2r+4 and hole number 2p+1, with
// witnesses split between the cycle part and the big clique.
inline FamilyInstance cycle_clique_join_family(int p, int q, int r) {
  if (p < 4 || q < 2 * p || r < 2 * p - 1 || r > p + q - 5)
    throw std::invalid_argument("ex52: need p >= 4, q >= 2p, 2p-1 <= r <= p+q-5");
  int n = p + q + r;
  std::vector<std::pair<int, int>> e;
  for (int v = 0; v < p; ++v) e.emplace_back(v, (v + 1) % p);
  for (int u = p; u < p + q; ++u)
    for (int v = u + 1; v < p + q; ++v) e.emplace_back(u, v);
  for (int u = p + q; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  for (int u = 0; u < p + q; ++u)
    for (int v = p + q; v < n; ++v) e.emplace_back(u, v);
  FamilyExpectations x;
  x.sigma2 = 2 * r + 4;
  x.tialpha = 2 * p + 1;
  x.kappa = r;
  x.alpha = p / 2 + 1;
  x.hamiltonian = true;
  x.two_connected = true;
  x.no_hole = {p + 1, p + 1};
  for (int s : {1, p}) x.has_holes.emplace_back(s, 2 * p + 1 - s);
  return {"ex52(" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(r) + ")",
          build_graph(n, e), x};
}

// Circulant on Z_n, n = 4qk + 4k + 2q - 1, connecting x to x +- u for
// u in U = union of U_i = {2ik+1, ..., (2i+1)k}, i = 0..q. Regular of
// degree d = 2(q+1)k with sigma2 = 2d = n - (2q-1); its closure adds
// nothing, and it has no (2, d-1)-bipartite-hole.
inline FamilyInstance circulant_family(int q, int k) {
  if (q < 1 || k < 2 * q) throw std::invalid_argument("circulant: need q >= 1 and k >= 2q");
  int d = 2 * (q + 1) * k;
  int n = 2 * d + 2 * q - 1;
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i <= q; ++i)
    for (int u = 2 * i * k + 1; u <= (2 * i + 1) * k; ++u)
      for (int x = 0; x < n; ++x) {
        int y = (x + u) % n;
        e.emplace_back(std::min(x, y), std::max(x, y));  // duplicates collapse
      }
  FamilyExpectations x;
  x.sigma2 = 2 * d;
  x.tialpha_max = d;
  x.kappa_min = 2;
  x.regular_degree = d;
  x.hamiltonian = true;
  x.two_connected = true;
  x.closure_fixed = true;
  x.no_hole = {2, d - 1};
  return {"circulant(" + std::to_string(q) + "," + std::to_string(k) + ")", build_graph(n, e),
          x};
}

inline FamilyInstance complete_family(int n) {
  FamilyExpectations x;
  x.sigma2_infinite = true;
  x.tialpha = 1;
  x.kappa = n - 1;
  x.alpha = 1;
  x.regular_degree = n - 1;
  x.hamiltonian = n >= 3;
  x.pancyclic = n >= 3;
  x.two_connected = n >= 3;
  x.closure_fixed = true;
  return {"complete(" + std::to_string(n) + ")", complete_graph(n), x};
}

inline FamilyInstance complete_bipartite_family(int a, int b) {
  Graph g = complete_bipartite_graph(a, b);
  int lo = std::min(a, b), hi = std::max(a, b);
  FamilyExpectations x;
  if (hi == 1) {
    x.sigma2_infinite = true;  // K_{1,1} is an edge
  } else {
    x.sigma2 = 2 * lo;
  }
  x.tialpha = hi;
  x.kappa = lo;
  x.alpha = hi;
  x.hamiltonian = (lo == hi && lo >= 2);
  x.pancyclic = false;
  x.two_connected = lo >= 2;
  return {"complete_bipartite(" + std::to_string(a) + "," + std::to_string(b) + ")",
          std::move(g), x};
}

inline FamilyInstance cycle_family(int n) {
  FamilyExpectations x;
  if (n == 3) {
    x.sigma2_infinite = true;
  } else {
    x.sigma2 = 4;
  }
  x.tialpha = n - 2;
  x.kappa = 2;
  x.alpha = n / 2;
  x.regular_degree = 2;
  x.hamiltonian = true;
  x.pancyclic = n == 3;
  x.two_connected = true;
  return {"cycle(" + std::to_string(n) + ")", cycle_graph(n), x};
}

inline FamilyInstance path_family(int n) {
  FamilyExpectations x;
  if (n <= 2) {
    x.sigma2_infinite = true;
  } else {
    x.sigma2 = 2;
  }
  x.tialpha = n <= 2 ? 1 : n - 1;
  x.kappa = n >= 2 ? 1 : 0;
  x.alpha = (n + 1) / 2;
  x.hamiltonian = false;
  x.two_connected = false;
  return {"path(" + std::to_string(n) + ")", path_graph(n), x};
}

inline FamilyInstance star_family(int leaves) {
  FamilyExpectations x;
  if (leaves == 1) {
    x.sigma2_infinite = true;
  } else {
    x.sigma2 = 2;
  }
  x.tialpha = std::max(1, leaves);
  x.kappa = 1;
  x.alpha = leaves;
  x.hamiltonian = false;
  x.two_connected = false;
  return {"star(" + std::to_string(leaves) + ")", star_graph(leaves), x};
}

inline FamilyInstance edgeless_family(int n) {
  FamilyExpectations x;
  if (n == 1) {
    x.sigma2_infinite = true;
  } else {
    x.sigma2 = 0;
  }
  x.tialpha = n;
  x.kappa = 0;
  x.alpha = n;
  x.regular_degree = 0;
  x.hamiltonian = false;
  x.two_connected = false;
  return {"edgeless(" + std::to_string(n) + ")", edgeless_graph(n), x};
}

// ---- family specs: the textual interface used by the CLI ----

struct FamilySpec {
  std::string family;               // canonical lowercase name
  std::vector<int> params;
  std::vector<FamilySpec> children;  // for union / join
};

namespace detail {

inline std::string canonical_family_name(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (s == "k" || s == "complete") return "complete";
  if (s == "k_bip" || s == "kbip" || s == "complete_bipartite") return "complete_bipartite";
  if (s == "c" || s == "cycle") return "cycle";
  if (s == "p" || s == "path") return "path";
  if (s == "star") return "star";
  if (s == "empty" || s == "edgeless") return "edgeless";
  if (s == "union") return "union";
  if (s == "join") return "join";
  if (s == "one_sum" || s == "onesum") return "one_sum";
  if (s == "ex51") return "ex51";
  if (s == "ex52") return "ex52";
  if (s == "circulant" || s == "circulant_qk") return "circulant";
  throw std::invalid_argument("unknown family \"" + s + "\"");
}

inline std::vector<std::string> family_tokens(const std::string& text) {
  std::vector<std::string> tokens;
  std::string cur;
  for (char c : text) {
    if (c == '(' || c == ')') {
      if (!cur.empty()) tokens.push_back(std::exchange(cur, {}));
      tokens.push_back(std::string(1, c));
    } else if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      if (!cur.empty()) tokens.push_back(std::exchange(cur, {}));
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) tokens.push_back(cur);
  return tokens;
}

inline FamilySpec parse_family_tokens(const std::vector<std::string>& tokens, std::size_t& i) {
  if (i >= tokens.size()) throw std::invalid_argument("family spec: missing family name");
  FamilySpec spec;
  spec.family = canonical_family_name(tokens[i++]);
  while (i < tokens.size()) {
    const std::string& tok = tokens[i];
    if (tok == "(") {
      ++i;
      spec.children.push_back(parse_family_tokens(tokens, i));
      if (i >= tokens.size() || tokens[i] != ")")
        throw std::invalid_argument("family spec: missing \")\"");
      ++i;
    } else if (tok == ")") {
      break;
    } else {
      std::size_t used = 0;
      int val;
      try {
        val = std::stoi(tok, &used);
      } catch (const std::exception&) {
        throw std::invalid_argument("family spec: bad parameter \"" + tok + "\"");
      }
      if (used != tok.size())
        throw std::invalid_argument("family spec: bad parameter \"" + tok + "\"");
      spec.params.push_back(val);
      ++i;
    }
  }
  return spec;
}

}  // namespace detail

// Grammar: "name p1 p2 ..." with parenthesized sub-specs for union and
// join, e.g. "union (complete 3) (cycle 5)".
inline FamilySpec parse_family_spec(const std::string& text) {
  auto tokens = detail::family_tokens(text);
  std::size_t i = 0;
  FamilySpec spec = detail::parse_family_tokens(tokens, i);
  if (i != tokens.size()) throw std::invalid_argument("family spec: trailing tokens");
  return spec;
}

inline FamilyInstance build_family(const FamilySpec& spec) {
  auto arity = [&](std::size_t want) {
    if (spec.params.size() != want || !spec.children.empty())
      throw std::invalid_argument("family " + spec.family + ": expected " +
                                  std::to_string(want) + " integer parameter(s)");
  };
  if (spec.family == "complete") {
    arity(1);
    return complete_family(spec.params[0]);
  }
  if (spec.family == "complete_bipartite") {
    arity(2);
    return complete_bipartite_family(spec.params[0], spec.params[1]);
  }
  if (spec.family == "cycle") {
    arity(1);
    return cycle_family(spec.params[0]);
  }
  if (spec.family == "path") {
    arity(1);
    return path_family(spec.params[0]);
  }
  if (spec.family == "star") {
    arity(1);
    return star_family(spec.params[0]);
  }
  if (spec.family == "edgeless") {
    arity(1);
    return edgeless_family(spec.params[0]);
  }
  if (spec.family == "one_sum") {
    arity(2);
    return one_sum_family(spec.params[0], spec.params[1]);
  }
  if (spec.family == "ex51") {
    arity(2);
    return two_clique_join_family(spec.params[0], spec.params[1]);
  }
  if (spec.family == "ex52") {
    arity(3);
    return cycle_clique_join_family(spec.params[0], spec.params[1], spec.params[2]);
  }
  if (spec.family == "circulant") {
    arity(2);
    return circulant_family(spec.params[0], spec.params[1]);
  }
  // union / join of two sub-specs
  if (spec.children.size() != 2 || !spec.params.empty())
    throw std::invalid_argument("family " + spec.family + ": expected two sub-specs");
  FamilyInstance a = build_family(spec.children[0]);
  FamilyInstance b = build_family(spec.children[1]);
  Graph g = spec.family == "union" ? disjoint_union(a.graph, b.graph)
                                   : join_graphs(a.graph, b.graph);
  return {spec.family + "(" + a.name + "," + b.name + ")", std::move(g), {}};
}

inline FamilyInstance build_family(const std::string& text) {
  return build_family(parse_family_spec(text));
}

}  // namespace biphole
