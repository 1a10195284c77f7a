#pragma once

// Parameter transformations that yield net-isomorphic cycloids:
//   reduce_gamma:  C(a,b,g,d) -> C(a,b,g-a,d+b)   when g > a
//   reduce_delta:  C(a,b,g,d) -> C(a,b,g+a,d-b)   when d > b
//   symmetric:     C(a,b,g,d) -> C(b,a,d,g)
// The shears leave the folding lattice unchanged (same equivalence relation).
// The symmetric cycloid is reached through phi(xi,eta) = (eta+b, xi-a), which
// exchanges the roles of forward and backward places.

#include <optional>
#include <set>
#include <vector>

#include "cycloid/net.hpp"

namespace cycloid {

enum class ShearDirection { reduce_gamma, reduce_delta };

bool shear_applicable(const CycloidParams& params, ShearDirection dir);

/// Throws DomainError if the guard (g > a, resp. d > b) does not hold.
CycloidParams shear(const CycloidParams& params, ShearDirection dir);

CycloidParams symmetric_params(const CycloidParams& params);

/// phi(xi, eta) = (eta + beta, xi - alpha), mapping points of `params` to
/// points of symmetric_params(params).
Point phi_symmetric(const CycloidParams& params, Point x);

/// Breadth-first closure of {params} under both shears and the symmetric
/// map, expanded for at most `max_steps` levels.
std::set<CycloidParams> iso_closure(const CycloidParams& params, int max_steps);

/// Sufficient test only: false means "not shown isomorphic".
bool are_isomorphic_by_closure(const CycloidParams& p1, const CycloidParams& p2, int max_steps);

inline constexpr Int kDefaultOracleMaxArea = 30;

enum class PlaceKindMatching {
  preserve,      // forward places map to forward places
  uniform_swap,  // preserve, or exchange forward/backward across the whole net
  ignore,        // place kinds are not compared
};

struct NetIsomorphism {
  /// Image in the second net of each transition of the first, in the order of
  /// the first net's transitions().
  std::vector<TransitionId> transition_image;
  bool kinds_swapped = false;
};

/// Exhaustive search for a flow-preserving bijection between two cycloid
/// nets. Places are required to be 1-in/1-out (validated nets). Throws
/// DomainError if either area exceeds `max_area`.
std::optional<NetIsomorphism> find_net_isomorphism(const CycloidNet& a, const CycloidNet& b,
                                                   PlaceKindMatching kinds = PlaceKindMatching::preserve,
                                                   Int max_area = kDefaultOracleMaxArea);

bool net_isomorphic_oracle(const CycloidNet& a, const CycloidNet& b,
                           PlaceKindMatching kinds = PlaceKindMatching::preserve,
                           Int max_area = kDefaultOracleMaxArea);

}  // namespace cycloid
