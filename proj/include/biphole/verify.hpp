#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>
#include <chrono>
#include <cstdint>
#include <exception>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "connectivity.hpp"
#include "cycles.hpp"
#include "graph.hpp"
#include "graph6.hpp"
#include "holes.hpp"

namespace biphole {

// The claims the harness can test. Identifiers are stable and double
// as CLI arguments.
enum class TheoremId {
  T1_1,   // delta >= tialpha           => Hamiltonian
  T1_2,   // delta >= tialpha           => pancyclic or balanced complete bipartite
  T1_3,   // sigma2 >= 2 tialpha - 1    => Hamiltonian or inside a clique 1-sum
  T1_4,   // 2-connected and sigma2 >= 2 tialpha - 1 => Hamiltonian
  T1_5,   // cycle through all vertices of degree >= tialpha
  T1_6,   // sigma2 >= 2 tialpha - 1    => triangle or balanced complete bipartite
  L1_7,   // non-complete: kappa >= delta + 2 - tialpha
  C1_10,  // kappa + tialpha <= n
  P4_1,   // tialpha = n  <=>  component sizes satisfy a_i - 1 <= A_{i-1}
  LOG2,   // tialpha = n  =>  at least ceil(log2(n+1)) components
};

inline constexpr std::array<TheoremId, 10> kAllTheorems = {
    TheoremId::T1_1, TheoremId::T1_2, TheoremId::T1_3, TheoremId::T1_4, TheoremId::T1_5,
    TheoremId::T1_6, TheoremId::L1_7, TheoremId::C1_10, TheoremId::P4_1, TheoremId::LOG2,
};

inline const char* to_string(TheoremId id) {
  switch (id) {
    case TheoremId::T1_1: return "T1.1";
    case TheoremId::T1_2: return "T1.2";
    case TheoremId::T1_3: return "T1.3";
    case TheoremId::T1_4: return "T1.4";
    case TheoremId::T1_5: return "T1.5";
    case TheoremId::T1_6: return "T1.6";
    case TheoremId::L1_7: return "L1.7";
    case TheoremId::C1_10: return "C1.10";
    case TheoremId::P4_1: return "P4.1";
    case TheoremId::LOG2: return "LOG2";
  }
  return "?";
}

inline std::optional<TheoremId> theorem_from_string(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  for (TheoremId id : kAllTheorems)
    if (s == to_string(id)) return id;
  return std::nullopt;
}

struct TheoremVerdict {
  TheoremId id;
  bool hypothesis = false;
  bool conclusion = false;  // meaningful when hypothesis holds
  bool flagged = false;     // degenerate case, reported but not counted
  std::string detail;

  bool violated() const { return hypothesis && !conclusion && !flagged; }
};

// Shared per-graph computation so running all checks on one graph
// evaluates each invariant once. Everything is computed on demand.
class GraphFacts {
 public:
  explicit GraphFacts(const Graph& g) : g_(g) {}

  const Graph& graph() const { return g_; }
  int n() const { return g_.n(); }

  int delta() {
    if (!delta_) delta_ = min_degree(g_);
    return *delta_;
  }

  bool sigma2_at_least(long long x) {
    if (!sigma2_done_) {
      sigma2_ = biphole::sigma2(g_);
      sigma2_done_ = true;
    }
    return !sigma2_ || *sigma2_ >= x;  // no nonadjacent pair: treat as infinite
  }

  std::optional<int> sigma2_value() {
    sigma2_at_least(0);
    return sigma2_;
  }

  const HoleSpectrum& spectrum() {
    if (!spectrum_) spectrum_ = hole_spectrum(g_);
    return *spectrum_;
  }

  int tialpha() { return bipartite_hole_number(spectrum()); }
  int kappa() { return vertex_connectivity(spectrum()); }

  int alpha() {
    if (!alpha_) alpha_ = independence_number(g_);
    return *alpha_;
  }

  const CycleSpectrum& cycles() {
    if (!cycles_) cycles_ = cycle_spectrum(g_);
    return *cycles_;
  }

  bool hamiltonian() { return cycles().hamiltonian(); }
  bool pancyclic() { return cycles().pancyclic(); }

  bool two_connected() {
    if (!two_conn_) two_conn_ = is_two_connected(g_);
    return *two_conn_;
  }

  bool complete() const {
    return g_.m() == static_cast<long long>(g_.n()) * (g_.n() - 1) / 2;
  }

 private:
  const Graph& g_;
  std::optional<int> delta_;
  bool sigma2_done_ = false;
  std::optional<int> sigma2_;
  std::optional<HoleSpectrum> spectrum_;
  std::optional<int> alpha_;
  std::optional<CycleSpectrum> cycles_;
  std::optional<bool> two_conn_;
};

inline VertexSet high_degree_set(const Graph& g, int threshold) {
  VertexSet x(g.n());
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) >= threshold) x.add(v);
  return x;
}

// Components of the graph with one vertex removed, on the original
// labels, smallest first then least vertex.
inline std::vector<VertexSet> components_excluding(const Graph& g, int skip) {
  int n = g.n();
  std::vector<VertexSet> comps;
  VertexSet seen(n);
  seen.add(skip);
  for (int v = 0; v < n; ++v) {
    if (seen.contains(v)) continue;
    VertexSet comp(n);
    comp.add(v);
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet nxt(n);
      for (int u : frontier) nxt |= g.neighbors(u);
      nxt.remove(skip);
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

// Witness that the graph fits inside K_k (+)_1 K_{n+1-k}: a vertex
// whose removal splits off a union of components of total size k-1,
// with 2 <= k <= (n+2)/4.
struct OneSumCertificate {
  int cut_vertex = -1;
  int k = 0;
  VertexSet small_side;
};

inline std::optional<OneSumCertificate> find_one_sum_cover(const Graph& g) {
  int n = g.n();
  int kmax = (n + 2) / 4;
  if (kmax < 2) return std::nullopt;
  for (int v = 0; v < n; ++v) {
    std::vector<VertexSet> comps = components_excluding(g, v);
    if (comps.size() < 2) continue;
    int cap = kmax - 1;
    std::vector<int> setter(cap + 1, -1);  // which component reached this sum
    std::vector<char> reach(cap + 1, 0);
    reach[0] = 1;
    for (std::size_t ci = 0; ci < comps.size(); ++ci) {
      int sz = comps[ci].count();
      if (sz > cap) continue;
      for (int s = cap; s >= sz; --s)
        if (!reach[s] && reach[s - sz]) {
          reach[s] = 1;
          setter[s] = static_cast<int>(ci);
        }
    }
    for (int sum = 1; sum <= cap; ++sum) {
      if (!reach[sum]) continue;
      OneSumCertificate cert;
      cert.cut_vertex = v;
      cert.k = sum + 1;
      cert.small_side = VertexSet(n);
      for (int s = sum; s > 0;) {
        const VertexSet& comp = comps[setter[s]];
        cert.small_side |= comp;
        s -= comp.count();
      }
      return cert;
    }
  }
  return std::nullopt;
}

namespace detail {

inline std::string join_ints(const VertexSet& s) {
  std::ostringstream out;
  bool first = true;
  for (int v : s) {
    if (!first) out << ',';
    out << v;
    first = false;
  }
  return out.str();
}

}  // namespace detail

inline TheoremVerdict check_t11(GraphFacts& f) {
  TheoremVerdict v{TheoremId::T1_1};
  v.hypothesis = f.delta() >= f.tialpha();
  if (!v.hypothesis) return v;
  v.conclusion = f.hamiltonian();
  if (!v.conclusion && f.n() <= 2) {
    v.flagged = true;
    v.detail = "order " + std::to_string(f.n()) + " admits no cycle";
  }
  return v;
}

inline TheoremVerdict check_t12(GraphFacts& f) {
  TheoremVerdict v{TheoremId::T1_2};
  v.hypothesis = f.delta() >= f.tialpha();
  if (!v.hypothesis) return v;
  v.conclusion = f.pancyclic() || is_balanced_complete_bipartite(f.graph());
  if (!v.conclusion && f.n() <= 2) {
    v.flagged = true;
    v.detail = "order " + std::to_string(f.n()) + " admits no cycle";
  }
  return v;
}

inline TheoremVerdict check_t13(GraphFacts& f) {
  TheoremVerdict v{TheoremId::T1_3};
  v.hypothesis = f.sigma2_at_least(2LL * f.tialpha() - 1);
  if (!v.hypothesis) return v;
  if (f.hamiltonian()) {
    v.conclusion = true;
    return v;
  }
  auto cert = find_one_sum_cover(f.graph());
  if (cert) {
    v.conclusion = true;
    v.detail = "inside clique 1-sum: cut " + std::to_string(cert->cut_vertex) + ", k=" +
               std::to_string(cert->k) + ", side {" + detail::join_ints(cert->small_side) + "}";
    return v;
  }
  if (f.n() <= 2) {
    v.flagged = true;
    v.detail = "order " + std::to_string(f.n()) + " admits no cycle and no 1-sum cover";
  }
  return v;
}

inline TheoremVerdict check_t14(GraphFacts& f) {
  TheoremVerdict v{TheoremId::T1_4};
  v.hypothesis = f.two_connected() && f.sigma2_at_least(2LL * f.tialpha() - 1);
  if (v.hypothesis) v.conclusion = f.hamiltonian();
  return v;
}

inline TheoremVerdict check_t15(GraphFacts& f) {
  TheoremVerdict v{TheoremId::T1_5};
  v.hypothesis = true;
  VertexSet x = high_degree_set(f.graph(), f.tialpha());
  v.conclusion = cycle_through(f.graph(), x).has_value();
  if (!v.conclusion && x.count() <= 2) {
    v.flagged = true;
    v.detail = "X={" + detail::join_ints(x) +
               "} has size <= 2: no cycle through it exists (vacuous reading holds)";
  }
  return v;
}

inline TheoremVerdict check_t16(GraphFacts& f) {
  TheoremVerdict v{TheoremId::T1_6};
  v.hypothesis = f.sigma2_at_least(2LL * f.tialpha() - 1);
  if (!v.hypothesis) return v;
  v.conclusion = has_triangle(f.graph()) || is_balanced_complete_bipartite(f.graph());
  if (!v.conclusion && f.n() == 1) {
    v.flagged = true;
    v.detail = "single vertex: neither alternative can hold";
  }
  return v;
}

inline TheoremVerdict check_l17(GraphFacts& f) {
  TheoremVerdict v{TheoremId::L1_7};
  v.hypothesis = !f.complete();
  if (v.hypothesis) {
    v.conclusion = f.kappa() >= f.delta() + 2 - f.tialpha();
  } else {
    // the bound genuinely fails on complete graphs; record the numbers
    v.flagged = true;
    v.detail = "complete graph excluded: kappa=" + std::to_string(f.n() - 1) + " < " +
               std::to_string(f.delta() + 2 - f.tialpha()) + "=delta+2-tialpha";
  }
  return v;
}

inline TheoremVerdict check_c110(GraphFacts& f) {
  TheoremVerdict v{TheoremId::C1_10};
  v.hypothesis = true;
  v.conclusion = f.kappa() + f.tialpha() <= f.n();
  if (!v.conclusion)
    v.detail = "kappa=" + std::to_string(f.kappa()) + " tialpha=" +
               std::to_string(f.tialpha()) + " n=" + std::to_string(f.n());
  return v;
}

inline TheoremVerdict check_p41(GraphFacts& f) {
  TheoremVerdict v{TheoremId::P4_1};
  v.hypothesis = true;
  bool full = f.tialpha() == f.n();
  ComponentSizeCheck by_sizes = full_hole_number_by_components(f.graph());
  v.conclusion = full == by_sizes.holds;
  if (!v.conclusion)
    v.detail = std::string("tialpha") + (full ? "=" : "<") + "n but size condition " +
               (by_sizes.holds ? "holds" : "fails");
  return v;
}

inline TheoremVerdict check_log2(GraphFacts& f) {
  TheoremVerdict v{TheoremId::LOG2};
  v.hypothesis = f.tialpha() == f.n();
  if (!v.hypothesis) return v;
  int comps = static_cast<int>(components(f.graph()).size());
  int bound = std::bit_width(static_cast<unsigned>(f.n()));
  v.conclusion = comps >= bound;
  if (!v.conclusion)
    v.detail = std::to_string(comps) + " components, bound " + std::to_string(bound);
  return v;
}

inline TheoremVerdict check_theorem(TheoremId id, GraphFacts& f) {
  switch (id) {
    case TheoremId::T1_1: return check_t11(f);
    case TheoremId::T1_2: return check_t12(f);
    case TheoremId::T1_3: return check_t13(f);
    case TheoremId::T1_4: return check_t14(f);
    case TheoremId::T1_5: return check_t15(f);
    case TheoremId::T1_6: return check_t16(f);
    case TheoremId::L1_7: return check_l17(f);
    case TheoremId::C1_10: return check_c110(f);
    case TheoremId::P4_1: return check_p41(f);
    case TheoremId::LOG2: return check_log2(f);
  }
  throw std::logic_error("check_theorem: bad id");
}

inline std::vector<TheoremVerdict> check_graph(const Graph& g,
                                               const std::vector<TheoremId>& ids) {
  GraphFacts f(g);
  std::vector<TheoremVerdict> out;
  out.reserve(ids.size());
  for (TheoremId id : ids) out.push_back(check_theorem(id, f));
  return out;
}

// ---- graph streams the harness can scan ----

class GraphSource {
 public:
  virtual ~GraphSource() = default;
  virtual std::uint64_t size() const = 0;
  virtual Graph get(std::uint64_t i) const = 0;
  virtual std::string label(std::uint64_t i) const { return write_graph6(get(i)); }
};

// Every labeled graph on n vertices, indexed by edge bitmask. Bit k of
// the index is the k-th vertex pair in graph6 column order, so index
// order matches ascending graph6 data bits.
class LabeledGraphs : public GraphSource {
 public:
  explicit LabeledGraphs(int n) : n_(n) {
    if (n < 1 || n > 7)
      throw std::invalid_argument("LabeledGraphs: order must be between 1 and 7");
    pairs_ = n * (n - 1) / 2;
  }

  std::uint64_t size() const override { return 1ull << pairs_; }

  Graph get(std::uint64_t i) const override {
    std::vector<VertexSet> rows(n_, VertexSet(n_));
    int k = 0;
    for (int v = 1; v < n_; ++v)
      for (int u = 0; u < v; ++u, ++k)
        if (i >> k & 1) {
          rows[u].add(v);
          rows[v].add(u);
        }
    return Graph::from_adjacency(std::move(rows));
  }

  int order() const { return n_; }

 private:
  int n_;
  int pairs_;
};

// graph6 file contents; labels echo the stored lines byte for byte.
class Graph6Lines : public GraphSource {
 public:
  explicit Graph6Lines(std::vector<std::string> lines) : lines_(std::move(lines)) {
    for (std::size_t i = 0; i < lines_.size(); ++i) {
      try {
        parse_graph6(lines_[i]);
      } catch (const Graph6Error& e) {
        throw Graph6Error("entry " + std::to_string(i + 1) + ": " + e.what());
      }
    }
  }

  static Graph6Lines from_stream(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty() || line.rfind(">>", 0) == 0) continue;
      lines.push_back(line);
    }
    return Graph6Lines(std::move(lines));
  }

  std::uint64_t size() const override { return lines_.size(); }
  Graph get(std::uint64_t i) const override { return parse_graph6(lines_[i]); }
  std::string label(std::uint64_t i) const override { return lines_[i]; }

 private:
  std::vector<std::string> lines_;
};

class GraphVector : public GraphSource {
 public:
  explicit GraphVector(std::vector<Graph> graphs) : graphs_(std::move(graphs)) {}
  std::uint64_t size() const override { return graphs_.size(); }
  Graph get(std::uint64_t i) const override { return graphs_[i]; }

 private:
  std::vector<Graph> graphs_;
};

struct Finding {
  std::uint64_t index = 0;
  std::string graph6;
  std::string check;
  std::string detail;
};

struct SearchResult {
  std::uint64_t scanned = 0;
  std::vector<Finding> violations;
  std::vector<Finding> flags;
  std::chrono::milliseconds elapsed{0};  // never serialized: reports stay byte-stable
};

namespace detail {

template <class PerGraph>
SearchResult scan_source(const GraphSource& src, int threads, PerGraph&& per_graph) {
  auto start = std::chrono::steady_clock::now();
  std::uint64_t total = src.size();
  if (threads < 1) threads = 1;
  if (static_cast<std::uint64_t>(threads) > total && total > 0)
    threads = static_cast<int>(total);

  struct Local {
    std::vector<Finding> violations, flags;
    std::exception_ptr error;
  };
  std::vector<Local> locals(threads);
  auto worker = [&](int t) {
    try {
      for (std::uint64_t i = t; i < total; i += threads)
        per_graph(i, locals[t].violations, locals[t].flags);
    } catch (...) {
      locals[t].error = std::current_exception();
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }
  for (auto& l : locals)
    if (l.error) std::rethrow_exception(l.error);

  SearchResult res;
  res.scanned = total;
  for (auto& l : locals) {
    res.violations.insert(res.violations.end(), std::make_move_iterator(l.violations.begin()),
                          std::make_move_iterator(l.violations.end()));
    res.flags.insert(res.flags.end(), std::make_move_iterator(l.flags.begin()),
                     std::make_move_iterator(l.flags.end()));
  }
  auto by_index = [](const Finding& a, const Finding& b) { return a.index < b.index; };
  std::stable_sort(res.violations.begin(), res.violations.end(), by_index);
  std::stable_sort(res.flags.begin(), res.flags.end(), by_index);
  res.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  return res;
}

}  // namespace detail

// Runs the chosen checks over every graph in the source. Results do
// not depend on the thread count.
inline SearchResult run_suite(const GraphSource& src, const std::vector<TheoremId>& ids,
                              int threads = 1) {
  return detail::scan_source(src, threads,
                             [&](std::uint64_t i, std::vector<Finding>& violations,
                                 std::vector<Finding>& flags) {
                               Graph g = src.get(i);
                               GraphFacts f(g);
                               for (TheoremId id : ids) {
                                 TheoremVerdict v = check_theorem(id, f);
                                 if (v.violated())
                                   violations.push_back({i, src.label(i), to_string(id), v.detail});
                                 else if (v.flagged)
                                   flags.push_back({i, src.label(i), to_string(id), v.detail});
                               }
                             });
}

// Hunts for 2-connected graphs with sigma2 >= 2 tialpha - 1 but
// kappa < alpha. Such graphs are reported as flags; any of them with
// sigma2 >= n additionally lands in violations, because a degree-sum
// of at least n forces kappa >= alpha.
inline SearchResult search_kappa_alpha(const GraphSource& src, int threads = 1) {
  return detail::scan_source(
      src, threads,
      [&](std::uint64_t i, std::vector<Finding>& violations, std::vector<Finding>& flags) {
        Graph g = src.get(i);
        if (g.n() < 3) return;
        GraphFacts f(g);
        if (!f.two_connected() || !f.sigma2_at_least(2LL * f.tialpha() - 1)) return;
        if (f.kappa() >= f.alpha()) return;
        std::optional<int> s2 = f.sigma2_value();
        std::string stats = "n=" + std::to_string(f.n()) + ",sigma2=" +
                            (s2 ? std::to_string(*s2) : "infinity") + ",tialpha=" +
                            std::to_string(f.tialpha()) + ",kappa=" + std::to_string(f.kappa()) +
                            ",alpha=" + std::to_string(f.alpha());
        flags.push_back({i, src.label(i), "Q5.4", "candidate: " + stats});
        if (!s2 || *s2 >= f.n())
          violations.push_back(
              {i, src.label(i), "Q5.4", "candidate with sigma2 >= n contradicts "
                                        "the degree-sum bound: " + stats});
      });
}

}  // namespace biphole
