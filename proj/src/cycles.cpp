#include "cycloid/cycles.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "cycloid/error.hpp"

namespace cycloid {

namespace {

CycleWitness witness(const CycloidParams& params, Int i, Int j) {
  const Point p = params.lattice_point(i, j);
  return {i, j, p.xi, p.eta};
}

}  // namespace

Int cyc_j_bound(const CycloidParams& params) {
  return params.alpha() <= params.beta() ? params.area() / params.gamma()
                                         : params.area() / params.delta();
}

CycleWitness cyc_lattice_min(const CycloidParams& params, Int budget) {
  const Int a = params.alpha(), b = params.beta(), g = params.gamma(), d = params.delta();
  const Int jmax = cyc_j_bound(params);

  // The window for j is [ceil(-j*g/a), floor(j*d/b)], growing linearly in j.
  const __int128 last_width = static_cast<__int128>(jmax) * d / b + static_cast<__int128>(jmax) * g / a + 1;
  if (static_cast<__int128>(jmax) * last_width > budget) {
    throw DomainError("lattice enumeration for " + params.to_string() + " exceeds budget of " +
                      std::to_string(budget) + " pairs");
  }

  std::optional<CycleWitness> best;
  for (Int j = 1; j <= jmax; ++j) {
    const Int lo = ceil_div(-j * g, a);
    const Int hi = floor_div(j * d, b);
    for (Int i = lo; i <= hi; ++i) {
      const CycleWitness w = witness(params, i, j);
      if (!best || w.length() < best->length()) best = w;
    }
  }
  if (!best) throw ConsistencyError("no admissible lattice point for " + params.to_string());
  return *best;
}

CycleWitness cyc_formula_b(const CycloidParams& params) {
  const Int a = params.alpha(), b = params.beta(), g = params.gamma(), d = params.delta();
  const bool alpha_le_beta = a <= b;
  const Int jmax = cyc_j_bound(params);
  std::optional<CycleWitness> best;
  for (Int j = 1; j <= jmax; ++j) {
    // u >= j*gamma when alpha <= beta, v >= j*delta otherwise; no later j
    // can beat the current best once that lower bound reaches it.
    if (best && checked::mul(j, alpha_le_beta ? g : d) >= best->length()) break;
    const Int i = alpha_le_beta ? floor_div(checked::mul(j, d), b) : -floor_div(checked::mul(j, g), a);
    const CycleWitness w = witness(params, i, j);
    if (!best || w.length() < best->length()) best = w;
  }
  return *best;
}

std::optional<Int> cyc_case_c(const CycloidParams& params) {
  const Int a = params.alpha(), b = params.beta(), g = params.gamma(), d = params.delta();
  if (a <= b && g >= d) return g + d + (d / b) * (a - b);
  if (a > b && g <= d) return g + d - (g / a) * (a - b);
  return std::nullopt;
}

std::optional<Int> cyc_case_d(const CycloidParams& params) {
  const Int a = params.alpha(), b = params.beta(), g = params.gamma(), d = params.delta();
  if (!(a <= b && params.regular())) return std::nullopt;
  const Int value = g + (d / b) * a;
  if (value * b != params.area()) {
    throw ConsistencyError("case d: gamma + (delta/beta)*alpha != A/beta for " + params.to_string());
  }
  return value;
}

std::optional<Int> cyc_case_e(const CycloidParams& params) {
  const Int a = params.alpha(), b = params.beta(), g = params.gamma(), d = params.delta();
  if (!(a > b && params.coregular())) return std::nullopt;
  const Int value = d + (g / a) * b;
  if (value * a != params.area()) {
    throw ConsistencyError("case e: delta + (gamma/alpha)*beta != A/alpha for " + params.to_string());
  }
  return value;
}

GraphCycle shortest_cycle_graph(const CycloidNet& net, Int max_area) {
  const auto transitions = net.transitions();
  const std::size_t n = transitions.size();
  if (static_cast<Int>(n) > max_area) {
    throw DomainError("graph search: " + net.params().to_string() + " has " + std::to_string(n) +
                      " transitions, cap is " + std::to_string(max_area));
  }

  // Successors through the places of the net.
  std::vector<std::vector<std::size_t>> next(n);
  for (std::size_t t = 0; t < n; ++t) {
    for (const Node& place : net.post_set(Node::of(transitions[t]))) {
      for (const Node& target : net.post_set(place)) {
        const auto idx = net.transition_index({target.at});
        if (idx >= 0) next[t].push_back(static_cast<std::size_t>(idx));
      }
    }
  }

  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  GraphCycle result;
  result.length = std::numeric_limits<Int>::max();
  std::vector<std::size_t> dist(n), parent(n), queue;
  queue.reserve(n);
  for (std::size_t s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), kNone);
    dist[s] = 0;
    queue.assign(1, s);
    std::size_t closing = kNone;
    for (std::size_t head = 0; head < queue.size() && closing == kNone; ++head) {
      const std::size_t x = queue[head];
      for (std::size_t y : next[x]) {
        if (y == s) {
          closing = x;
          break;
        }
        if (dist[y] == kNone) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          queue.push_back(y);
        }
      }
    }
    if (closing == kNone) {
      result.acyclic.push_back(transitions[s]);
      continue;
    }
    const Int length = static_cast<Int>(dist[closing]) + 1;
    if (length < result.length) {
      result.length = length;
      result.cycle.clear();
      for (std::size_t x = closing; x != s; x = parent[x]) result.cycle.push_back(transitions[x]);
      result.cycle.push_back(transitions[s]);
      std::reverse(result.cycle.begin(), result.cycle.end());
    }
  }
  if (result.cycle.empty()) {
    throw ConsistencyError("graph search: no directed cycle in " + net.params().to_string());
  }
  return result;
}

CycleWitness cyc(const CycloidParams& params, CycOptions options) {
  const CycleWitness general = cyc_formula_b(params);
  std::ostringstream mismatch;
  auto check = [&](const char* name, std::optional<Int> value) {
    if (value && *value != general.length()) {
      mismatch << ' ' << name << '=' << *value;
    }
  };
  check("case_c", cyc_case_c(params));
  check("case_d", cyc_case_d(params));
  check("case_e", cyc_case_e(params));
  if (options.cross_check_lattice) {
    const CycleWitness lattice = cyc_lattice_min(params);
    if (lattice.length() != general.length()) {
      mismatch << " lattice=" << lattice.length() << " (i=" << lattice.i << ",j=" << lattice.j << ')';
    }
  }
  if (!mismatch.str().empty()) {
    throw ConsistencyError("cyc disagreement for " + params.to_string() + ": formula_b=" +
                           std::to_string(general.length()) + " (i=" + std::to_string(general.i) +
                           ",j=" + std::to_string(general.j) + ")" + mismatch.str());
  }
  return general;
}

}  // namespace cycloid
