#include "cycloid/transforms.hpp"

#include <deque>

#include "cycloid/error.hpp"

namespace cycloid {

bool shear_applicable(const CycloidParams& params, ShearDirection dir) {
  return dir == ShearDirection::reduce_gamma ? params.gamma() > params.alpha()
                                             : params.delta() > params.beta();
}

CycloidParams shear(const CycloidParams& params, ShearDirection dir) {
  const Int a = params.alpha(), b = params.beta(), g = params.gamma(), d = params.delta();
  if (dir == ShearDirection::reduce_gamma) {
    if (!(g > a)) throw DomainError("shear reduce_gamma needs gamma > alpha in " + params.to_string());
    return {a, b, g - a, checked::add(d, b)};
  }
  if (!(d > b)) throw DomainError("shear reduce_delta needs delta > beta in " + params.to_string());
  return {a, b, checked::add(g, a), d - b};
}

CycloidParams symmetric_params(const CycloidParams& params) {
  return {params.beta(), params.alpha(), params.delta(), params.gamma()};
}

Point phi_symmetric(const CycloidParams& params, Point x) {
  return {checked::add(x.eta, params.beta()), checked::sub(x.xi, params.alpha())};
}

std::set<CycloidParams> iso_closure(const CycloidParams& params, int max_steps) {
  std::set<CycloidParams> seen{params};
  std::vector<CycloidParams> frontier{params};
  for (int step = 0; step < max_steps && !frontier.empty(); ++step) {
    std::vector<CycloidParams> next;
    auto visit = [&](const CycloidParams& p) {
      if (seen.insert(p).second) next.push_back(p);
    };
    for (const auto& p : frontier) {
      for (auto dir : {ShearDirection::reduce_gamma, ShearDirection::reduce_delta}) {
        if (shear_applicable(p, dir)) visit(shear(p, dir));
      }
      visit(symmetric_params(p));
    }
    frontier = std::move(next);
  }
  return seen;
}

bool are_isomorphic_by_closure(const CycloidParams& p1, const CycloidParams& p2, int max_steps) {
  if (p1.area() != p2.area()) return false;
  const auto closure = iso_closure(p1, max_steps);
  return closure.contains(p2) || closure.contains(symmetric_params(p2));
}

}  // namespace cycloid
