#include "cycloid/net.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

#include "cycloid/error.hpp"

namespace cycloid {

namespace {

char kind_letter(NodeKind k) {
  switch (k) {
    case NodeKind::transition: return 'T';
    case NodeKind::forward: return 'F';
    case NodeKind::backward: return 'B';
  }
  return '?';
}

Int parse_int(std::string_view s, std::string_view whole) {
  Int v = 0;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    throw DomainError("malformed node key '" + std::string(whole) + "'");
  }
  return v;
}

template <typename T>
void sort_unique(std::vector<T>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

std::string node_key(Node n) {
  std::string s(1, kind_letter(n.kind));
  s += ':';
  s += std::to_string(n.at.xi);
  s += ',';
  s += std::to_string(n.at.eta);
  return s;
}

std::string place_key(PlaceId p) { return node_key(Node::of(p)); }

Node parse_node_key(std::string_view key) {
  if (key.size() < 5 || key[1] != ':') throw DomainError("malformed node key '" + std::string(key) + "'");
  Node n;
  switch (key[0]) {
    case 'T': n.kind = NodeKind::transition; break;
    case 'F': n.kind = NodeKind::forward; break;
    case 'B': n.kind = NodeKind::backward; break;
    default: throw DomainError("malformed node key '" + std::string(key) + "'");
  }
  const std::string_view coords = key.substr(2);
  const auto comma = coords.find(',');
  if (comma == std::string_view::npos) throw DomainError("malformed node key '" + std::string(key) + "'");
  n.at = {parse_int(coords.substr(0, comma), key), parse_int(coords.substr(comma + 1), key)};
  return n;
}

CycloidNet::CycloidNet(CycloidParams params, std::vector<TransitionId> transitions,
                       std::vector<PlaceId> places, std::vector<Arc> arcs)
    : params_(params),
      transitions_(std::move(transitions)),
      places_(std::move(places)),
      arcs_(std::move(arcs)) {
  sort_unique(transitions_);
  sort_unique(places_);
  sort_unique(arcs_);

  nodes_.reserve(transitions_.size() + places_.size());
  for (const auto& t : transitions_) nodes_.push_back(Node::of(t));
  for (const auto& p : places_) nodes_.push_back(Node::of(p));
  std::sort(nodes_.begin(), nodes_.end());

  // Arcs with an unknown endpoint are kept in arcs_ (validate_net reports
  // them) but left out of the adjacency.
  const std::size_t n = nodes_.size();
  std::vector<std::size_t> in_count(n, 0), out_count(n, 0);
  auto find = [&](Node x) -> std::ptrdiff_t {
    auto it = std::lower_bound(nodes_.begin(), nodes_.end(), x);
    return (it != nodes_.end() && *it == x) ? it - nodes_.begin() : -1;
  };
  for (const auto& a : arcs_) {
    const auto f = find(a.from), t = find(a.to);
    if (f < 0 || t < 0) continue;
    ++out_count[static_cast<std::size_t>(f)];
    ++in_count[static_cast<std::size_t>(t)];
  }
  pre_offsets_.assign(n + 1, 0);
  post_offsets_.assign(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    pre_offsets_[i + 1] = pre_offsets_[i] + in_count[i];
    post_offsets_[i + 1] = post_offsets_[i] + out_count[i];
  }
  pre_flat_.resize(pre_offsets_[n]);
  post_flat_.resize(post_offsets_[n]);
  std::vector<std::size_t> pre_fill(pre_offsets_.begin(), pre_offsets_.end() - 1);
  std::vector<std::size_t> post_fill(post_offsets_.begin(), post_offsets_.end() - 1);
  // arcs_ is sorted by (from, to), so each post list comes out sorted.
  for (const auto& a : arcs_) {
    const auto f = find(a.from), t = find(a.to);
    if (f < 0 || t < 0) continue;
    post_flat_[post_fill[static_cast<std::size_t>(f)]++] = a.to;
    pre_flat_[pre_fill[static_cast<std::size_t>(t)]++] = a.from;
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::sort(pre_flat_.begin() + static_cast<std::ptrdiff_t>(pre_offsets_[i]),
              pre_flat_.begin() + static_cast<std::ptrdiff_t>(pre_offsets_[i + 1]));
  }
}

bool CycloidNet::contains(Node n) const {
  return std::binary_search(nodes_.begin(), nodes_.end(), n);
}

std::size_t CycloidNet::index_of(Node n) const {
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), n);
  if (it == nodes_.end() || *it != n) {
    throw DomainError("node " + node_key(n) + " is not in " + params_.to_string());
  }
  return static_cast<std::size_t>(it - nodes_.begin());
}

std::span<const Node> CycloidNet::pre_set(Node n) const {
  const auto i = index_of(n);
  return std::span<const Node>(pre_flat_).subspan(pre_offsets_[i], pre_offsets_[i + 1] - pre_offsets_[i]);
}

std::span<const Node> CycloidNet::post_set(Node n) const {
  const auto i = index_of(n);
  return std::span<const Node>(post_flat_).subspan(post_offsets_[i], post_offsets_[i + 1] - post_offsets_[i]);
}

std::ptrdiff_t CycloidNet::transition_index(TransitionId t) const {
  auto it = std::lower_bound(transitions_.begin(), transitions_.end(), t);
  return (it != transitions_.end() && *it == t) ? it - transitions_.begin() : -1;
}

std::vector<Point> fundamental_points(const CycloidParams& params) {
  const Int a = params.alpha(), b = params.beta(), g = params.gamma(), d = params.delta();
  const Int area = params.area();
  std::vector<Point> points;
  points.reserve(static_cast<std::size_t>(area));
  // Row by row: 0 <= d*xi - g*eta < area and 0 <= b*xi + a*eta < area.
  for (Int eta = -b; eta <= d; ++eta) {
    const Int ge = checked::mul(g, eta), ae = checked::mul(a, eta);
    const Int lo = std::max(ceil_div(ge, d), ceil_div(-ae, b));
    const Int hi = std::min(floor_div(ge + area - 1, d), floor_div(area - 1 - ae, b));
    for (Int xi = lo; xi <= hi; ++xi) points.push_back({xi, eta});
  }
  std::sort(points.begin(), points.end());
  if (static_cast<Int>(points.size()) != area) {
    throw ConsistencyError("fundamental parallelogram of " + params.to_string() + " holds " +
                           std::to_string(points.size()) + " points, expected " +
                           std::to_string(area));
  }
  return points;
}

CycloidNet build_net(const CycloidParams& params, Int max_area) {
  if (params.area() > max_area) {
    throw OverflowError("area " + std::to_string(params.area()) + " of " + params.to_string() +
                        " exceeds net size cap " + std::to_string(max_area));
  }
  const auto points = fundamental_points(params);
  std::vector<TransitionId> transitions;
  std::vector<PlaceId> places;
  std::vector<Arc> arcs;
  transitions.reserve(points.size());
  places.reserve(2 * points.size());
  arcs.reserve(4 * points.size());
  for (const Point& x : points) {
    const TransitionId t{x};
    const PlaceId fwd{PlaceKind::forward, t};
    const PlaceId bwd{PlaceKind::backward, t};
    transitions.push_back(t);
    places.push_back(fwd);
    places.push_back(bwd);
    arcs.push_back({Node::of(t), Node::of(fwd)});
    arcs.push_back({Node::of(fwd), Node::of(TransitionId{canonical(params, {x.xi + 1, x.eta})})});
    arcs.push_back({Node::of(t), Node::of(bwd)});
    arcs.push_back({Node::of(bwd), Node::of(TransitionId{canonical(params, {x.xi, x.eta + 1})})});
  }
  return CycloidNet(params, std::move(transitions), std::move(places), std::move(arcs));
}

std::vector<Node> pre_set(const CycloidNet& net, Node n) {
  const auto s = net.pre_set(n);
  return {s.begin(), s.end()};
}

std::vector<Node> post_set(const CycloidNet& net, Node n) {
  const auto s = net.post_set(n);
  return {s.begin(), s.end()};
}

TransitionId successor(const CycloidNet& net, TransitionId t, PlaceKind kind) {
  const Node place = Node::of(PlaceId{kind, t});
  const auto out = net.post_set(place);
  if (out.size() != 1 || !out.front().is_transition()) {
    throw DomainError("place " + node_key(place) + " does not have exactly one output transition");
  }
  return {out.front().at};
}

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::node_count: return "node_count";
    case ViolationKind::arc_endpoint: return "arc_endpoint";
    case ViolationKind::non_canonical: return "non_canonical";
    case ViolationKind::degree: return "degree";
    case ViolationKind::place_naming: return "place_naming";
    case ViolationKind::flow_structure: return "flow_structure";
    case ViolationKind::successor_permutation: return "successor_permutation";
  }
  return "unknown";
}

std::vector<Violation> validate_net(const CycloidNet& net) {
  const CycloidParams& params = net.params();
  std::map<ViolationKind, Violation> found;
  auto flag = [&](ViolationKind kind, Node n, const std::string& msg) {
    auto [it, inserted] = found.try_emplace(kind, Violation{kind, {}, msg});
    it->second.nodes.push_back(n);
  };

  const auto transitions = net.transitions();
  const auto places = net.places();
  if (static_cast<Int>(transitions.size()) != params.area() ||
      places.size() != 2 * transitions.size()) {
    found.try_emplace(ViolationKind::node_count,
                      Violation{ViolationKind::node_count,
                                {},
                                "expected " + std::to_string(params.area()) + " transitions and " +
                                    std::to_string(2 * params.area()) + " places, found " +
                                    std::to_string(transitions.size()) + " and " +
                                    std::to_string(places.size())});
  }

  for (const Arc& a : net.arcs()) {
    if (!net.contains(a.from) || !net.contains(a.to) ||
        a.from.is_transition() == a.to.is_transition()) {
      flag(ViolationKind::arc_endpoint, a.from, "arc with unknown endpoint or between nodes of the same type");
    }
  }

  for (const TransitionId& t : transitions) {
    if (!in_fundamental(params, t.at)) {
      flag(ViolationKind::non_canonical, Node::of(t), "transition outside the fundamental parallelogram");
    }
  }
  for (const PlaceId& p : places) {
    if (!net.contains(p.at)) {
      flag(ViolationKind::non_canonical, Node::of(p), "place named after a transition not in the net");
    }
  }

  auto one_of_each = [](std::span<const Node> s) {
    return s.size() == 2 &&
           std::count_if(s.begin(), s.end(), [](Node n) { return n.kind == NodeKind::forward; }) == 1 &&
           std::count_if(s.begin(), s.end(), [](Node n) { return n.kind == NodeKind::backward; }) == 1;
  };
  for (const TransitionId& t : transitions) {
    const Node n = Node::of(t);
    if (!one_of_each(net.pre_set(n)) || !one_of_each(net.post_set(n))) {
      flag(ViolationKind::degree, n, "transition is not 2-in/2-out with one place of each kind per side");
    }
  }
  for (const PlaceId& p : places) {
    const Node n = Node::of(p);
    const auto in = net.pre_set(n);
    const auto out = net.post_set(n);
    if (in.size() != 1 || out.size() != 1 || !in.front().is_transition() || !out.front().is_transition()) {
      flag(ViolationKind::degree, n, "place is not 1-in/1-out");
    }
  }

  if (!found.contains(ViolationKind::degree) && !found.contains(ViolationKind::arc_endpoint)) {
    for (const PlaceId& p : places) {
      const Node n = Node::of(p);
      if (net.pre_set(n).front() != Node::of(p.at)) {
        flag(ViolationKind::place_naming, n, "place input transition differs from its name");
      }
      const Point step = p.kind == PlaceKind::forward ? Point{1, 0} : Point{0, 1};
      const Node expected = Node::of(TransitionId{canonical(params, p.at.at + step)});
      if (net.post_set(n).front() != expected) {
        flag(ViolationKind::flow_structure, n, "place output is not the Petri-space successor");
      }
    }
    for (const PlaceKind kind : {PlaceKind::forward, PlaceKind::backward}) {
      std::vector<bool> hit(transitions.size(), false);
      for (const TransitionId& t : transitions) {
        if (!net.contains(PlaceId{kind, t})) continue;
        const auto idx = net.transition_index(successor(net, t, kind));
        if (idx < 0) continue;
        if (hit[static_cast<std::size_t>(idx)]) {
          flag(ViolationKind::successor_permutation, Node::of(transitions[static_cast<std::size_t>(idx)]),
               "transition reached twice by the same successor map");
        }
        hit[static_cast<std::size_t>(idx)] = true;
      }
    }
  }

  std::vector<Violation> out;
  for (auto& [kind, v] : found) {
    std::sort(v.nodes.begin(), v.nodes.end());
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace cycloid
