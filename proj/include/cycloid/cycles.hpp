#pragma once

// Minimal cycle length of a cycloid.
//
// A cycle through the origin corresponds to a nonzero lattice point
// (u, v) = A * (i, j) with u, v >= 0, its length being u + v grid steps.
// Only j >= 1 can satisfy both sign constraints. Three routes compute the
// minimum and are expected to agree:
//   - cyc_lattice_min: every (i, j) in the admissible window,
//   - cyc_formula_b:   one i per j (the best one in closed form),
//   - shortest_cycle_graph: breadth-first search on the built net.
// cyc_case_c/d/e are closed forms valid only under their guards.

#include <optional>
#include <vector>

#include "cycloid/net.hpp"

namespace cycloid {

struct CycleWitness {
  Int i = 0;
  Int j = 0;
  Int u = 0;
  Int v = 0;

  Int length() const { return u + v; }
  friend bool operator==(const CycleWitness&, const CycleWitness&) = default;
};

/// floor(A/gamma) if alpha <= beta, floor(A/delta) otherwise.
Int cyc_j_bound(const CycloidParams& params);

/// Upper limit on (i, j) pairs cyc_lattice_min will visit.
inline constexpr Int kDefaultLatticeBudget = 50'000'000;

/// Exhaustive minimisation over j in [1, cyc_j_bound] and all i with
/// u >= 0, v >= 0. Ties go to the smallest j, then the smallest i.
/// Throws DomainError if the window holds more than `budget` pairs.
CycleWitness cyc_lattice_min(const CycloidParams& params, Int budget = kDefaultLatticeBudget);

/// min over j of j*(gamma+delta) + i*(alpha-beta) with
/// i = floor(j*delta/beta) if alpha <= beta, else -floor(j*gamma/alpha).
CycleWitness cyc_formula_b(const CycloidParams& params);

/// gamma + delta + floor(delta/beta)*(alpha-beta)  if alpha <= beta and gamma >= delta,
/// gamma + delta - floor(gamma/alpha)*(alpha-beta) if alpha > beta and gamma <= delta.
std::optional<Int> cyc_case_c(const CycloidParams& params);

/// A/beta = gamma + (delta/beta)*alpha if alpha <= beta and beta | delta.
std::optional<Int> cyc_case_d(const CycloidParams& params);

/// A/alpha = delta + (gamma/alpha)*beta if alpha > beta and alpha | gamma.
std::optional<Int> cyc_case_e(const CycloidParams& params);

inline constexpr Int kDefaultGraphMaxArea = 10'000;

struct GraphCycle {
  Int length = 0;
  /// Transitions on one shortest cycle, starting at its smallest-sorted
  /// source; the last one feeds back into the first.
  std::vector<TransitionId> cycle;
  /// Transitions from which no directed cycle returns (expected empty).
  std::vector<TransitionId> acyclic;
};

/// Shortest directed cycle of the transition graph whose edges go through
/// the places of the net, searched from every transition.
/// Throws DomainError if the area exceeds `max_area`, ConsistencyError if
/// the net has no cycle at all.
GraphCycle shortest_cycle_graph(const CycloidNet& net, Int max_area = kDefaultGraphMaxArea);

struct CycOptions {
  /// Also compare against cyc_lattice_min.
  bool cross_check_lattice = false;
};

/// cyc_formula_b, checked against every applicable closed form (and the
/// lattice enumeration when requested). Throws ConsistencyError with all
/// values on disagreement.
CycleWitness cyc(const CycloidParams& params, CycOptions options = {});

}  // namespace cycloid
