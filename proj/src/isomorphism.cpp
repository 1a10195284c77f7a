// Ground-truth net isomorphism by backtracking.
//
// In a cycloid net every place has exactly one input and one output
// transition, so a place is an edge between transitions and a net
// isomorphism is an isomorphism of the resulting directed multigraph on T,
// with edges coloured by place kind unless kinds are ignored.

#include <algorithm>

#include "cycloid/error.hpp"
#include "cycloid/transforms.hpp"

namespace cycloid {

namespace {

constexpr std::size_t kUnmapped = static_cast<std::size_t>(-1);

struct Edge {
  std::size_t to;
  int color;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct TransitionGraph {
  std::vector<std::vector<Edge>> out, in;
  std::vector<std::vector<int>> signature;
};

TransitionGraph to_graph(const CycloidNet& net, PlaceKindMatching kinds, bool swap) {
  const std::size_t n = net.transitions().size();
  TransitionGraph g;
  g.out.resize(n);
  g.in.resize(n);
  for (const PlaceId& p : net.places()) {
    const Node node = Node::of(p);
    const auto pre = net.pre_set(node), post = net.post_set(node);
    if (pre.size() != 1 || post.size() != 1 || !pre.front().is_transition() ||
        !post.front().is_transition()) {
      throw DomainError("isomorphism oracle needs 1-in/1-out places; " + node_key(node) + " is not");
    }
    const auto u = net.transition_index({pre.front().at});
    const auto v = net.transition_index({post.front().at});
    int color = 0;
    if (kinds != PlaceKindMatching::ignore) {
      color = (p.kind == PlaceKind::forward) != swap ? 0 : 1;
    }
    g.out[static_cast<std::size_t>(u)].push_back({static_cast<std::size_t>(v), color});
    g.in[static_cast<std::size_t>(v)].push_back({static_cast<std::size_t>(u), color});
  }
  g.signature.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::sort(g.out[i].begin(), g.out[i].end());
    std::sort(g.in[i].begin(), g.in[i].end());
    auto& sig = g.signature[i];
    for (const Edge& e : g.out[i]) sig.push_back(e.color);
    sig.push_back(-1);
    for (const Edge& e : g.in[i]) sig.push_back(e.color);
    sig.push_back(-1);
    sig.push_back(static_cast<int>(std::count_if(g.out[i].begin(), g.out[i].end(),
                                                 [i](const Edge& e) { return e.to == i; })));
    std::sort(sig.begin(), sig.end());
  }
  return g;
}

std::size_t count(const std::vector<Edge>& edges, std::size_t to, int color) {
  return static_cast<std::size_t>(std::count(edges.begin(), edges.end(), Edge{to, color}));
}

class Matcher {
 public:
  Matcher(const TransitionGraph& g1, const TransitionGraph& g2)
      : g1_(g1), g2_(g2), fwd_(g1.out.size(), kUnmapped), inv_(g1.out.size(), kUnmapped) {
    plan_order();
  }

  std::optional<std::vector<std::size_t>> run() {
    if (extend(0)) return fwd_;
    return std::nullopt;
  }

 private:
  // Breadth-first order over the underlying undirected graph; every vertex
  // after a component root remembers a mapped neighbour to draw candidates from.
  void plan_order() {
    const std::size_t n = g1_.out.size();
    std::vector<bool> placed(n, false);
    for (std::size_t root = 0; root < n; ++root) {
      if (placed[root]) continue;
      placed[root] = true;
      order_.push_back({root, kUnmapped, false});
      for (std::size_t head = order_.size() - 1; head < order_.size(); ++head) {
        const std::size_t u = order_[head].vertex;
        for (const Edge& e : g1_.out[u]) {
          if (!placed[e.to]) {
            placed[e.to] = true;
            order_.push_back({e.to, u, true});
          }
        }
        for (const Edge& e : g1_.in[u]) {
          if (!placed[e.to]) {
            placed[e.to] = true;
            order_.push_back({e.to, u, false});
          }
        }
      }
    }
  }

  bool consistent(std::size_t u, std::size_t v) const {
    for (const Edge& e : g1_.out[u]) {
      if (fwd_[e.to] == kUnmapped) continue;
      if (count(g1_.out[u], e.to, e.color) != count(g2_.out[v], fwd_[e.to], e.color)) return false;
    }
    for (const Edge& e : g1_.in[u]) {
      if (fwd_[e.to] == kUnmapped) continue;
      if (count(g1_.in[u], e.to, e.color) != count(g2_.in[v], fwd_[e.to], e.color)) return false;
    }
    for (const Edge& e : g2_.out[v]) {
      if (inv_[e.to] == kUnmapped) continue;
      if (count(g2_.out[v], e.to, e.color) != count(g1_.out[u], inv_[e.to], e.color)) return false;
    }
    for (const Edge& e : g2_.in[v]) {
      if (inv_[e.to] == kUnmapped) continue;
      if (count(g2_.in[v], e.to, e.color) != count(g1_.in[u], inv_[e.to], e.color)) return false;
    }
    return true;
  }

  bool try_assign(std::size_t depth, std::size_t u, std::size_t v) {
    if (inv_[v] != kUnmapped || g1_.signature[u] != g2_.signature[v]) return false;
    fwd_[u] = v;
    inv_[v] = u;
    if (consistent(u, v) && extend(depth + 1)) return true;
    fwd_[u] = kUnmapped;
    inv_[v] = kUnmapped;
    return false;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const Step& step = order_[depth];
    if (step.parent == kUnmapped) {
      for (std::size_t v = 0; v < g2_.out.size(); ++v) {
        if (try_assign(depth, step.vertex, v)) return true;
      }
      return false;
    }
    const std::size_t image = fwd_[step.parent];
    const auto& edges = step.via_out ? g2_.out[image] : g2_.in[image];
    std::vector<std::size_t> candidates;
    for (const Edge& e : edges) candidates.push_back(e.to);
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (std::size_t v : candidates) {
      if (try_assign(depth, step.vertex, v)) return true;
    }
    return false;
  }

  struct Step {
    std::size_t vertex;
    std::size_t parent;
    bool via_out;  // vertex is an out-neighbour of parent
  };

  const TransitionGraph& g1_;
  const TransitionGraph& g2_;
  std::vector<std::size_t> fwd_, inv_;
  std::vector<Step> order_;
};

}  // namespace

std::optional<NetIsomorphism> find_net_isomorphism(const CycloidNet& a, const CycloidNet& b,
                                                   PlaceKindMatching kinds, Int max_area) {
  for (const CycloidNet* net : {&a, &b}) {
    if (static_cast<Int>(net->transitions().size()) > max_area) {
      throw DomainError("isomorphism oracle: " + net->params().to_string() + " has " +
                        std::to_string(net->transitions().size()) + " transitions, cap is " +
                        std::to_string(max_area));
    }
  }
  if (a.transitions().size() != b.transitions().size() || a.places().size() != b.places().size() ||
      a.arcs().size() != b.arcs().size()) {
    return std::nullopt;
  }

  const auto g1 = to_graph(a, kinds, false);
  for (bool swap : {false, true}) {
    if (swap && kinds != PlaceKindMatching::uniform_swap) break;
    const auto g2 = to_graph(b, kinds, swap);
    if (auto mapping = Matcher(g1, g2).run()) {
      NetIsomorphism iso;
      iso.kinds_swapped = swap;
      for (std::size_t v : *mapping) iso.transition_image.push_back(b.transitions()[v]);
      return iso;
    }
  }
  return std::nullopt;
}

bool net_isomorphic_oracle(const CycloidNet& a, const CycloidNet& b, PlaceKindMatching kinds,
                           Int max_area) {
  return find_net_isomorphism(a, b, kinds, max_area).has_value();
}

}  // namespace cycloid
