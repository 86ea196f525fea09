#pragma once

#include <optional>
#include <stdexcept>

#include "connectivity.hpp"
#include "cycles.hpp"
#include "graph.hpp"
#include "holes.hpp"

namespace biphole {

// Everything the `invariants` command reports for one graph. sigma2 is
// empty when the graph has no nonadjacent pair (reported as infinity).
struct InvariantReport {
  int n = 0;
  long long m = 0;
  int delta = 0;
  std::optional<int> sigma2;
  int alpha = 0;
  int tialpha = 0;
  int kappa = 0;
  bool is_connected = false;
  bool is_2_connected = false;
  bool has_triangle = false;
  bool is_bipartite = false;
  bool is_balanced_complete_bipartite = false;
  bool is_hamiltonian = false;
  bool is_pancyclic = false;
  // second-route values, filled only on request
  std::optional<int> tialpha_definitional;
  std::optional<int> kappa_oracle;
  std::optional<bool> routes_agree;
};

// Exact across the board, which bounds the graphs this can serve:
// the cycle spectrum is the binding constraint.
inline InvariantReport compute_invariants(const Graph& g, bool with_oracles = false) {
  if (g.n() < 1) throw std::invalid_argument("compute_invariants: empty graph");
  if (g.n() > kCycleDpMaxOrder)
    throw std::invalid_argument("compute_invariants: order above " +
                                std::to_string(kCycleDpMaxOrder) +
                                " (exact cycle spectrum limit)");
  InvariantReport r;
  r.n = g.n();
  r.m = g.m();
  r.delta = min_degree(g);
  r.sigma2 = sigma2(g);
  r.alpha = independence_number(g);
  HoleSpectrum sp = hole_spectrum(g);
  r.tialpha = bipartite_hole_number(sp);
  r.kappa = vertex_connectivity(sp);
  r.is_connected = is_connected(g);
  r.is_2_connected = is_two_connected(g);
  r.has_triangle = biphole::has_triangle(g);
  r.is_bipartite = biphole::is_bipartite(g);
  r.is_balanced_complete_bipartite = biphole::is_balanced_complete_bipartite(g);
  CycleSpectrum cs = cycle_spectrum(g);
  r.is_hamiltonian = cs.hamiltonian();
  r.is_pancyclic = cs.pancyclic();
  if (with_oracles) {
    r.tialpha_definitional = bipartite_hole_number_definitional(g);
    r.kappa_oracle = vertex_connectivity_oracle(g).kappa;
    r.routes_agree = (*r.tialpha_definitional == r.tialpha) && (*r.kappa_oracle == r.kappa);
  }
  return r;
}

}  // namespace biphole
