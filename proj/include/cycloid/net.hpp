#pragma once

// The finite quotient net C(alpha, beta, gamma, delta) = (S, T, F).
//
// Every transition is named by its canonical point in the fundamental
// parallelogram. Each transition t at (xi, eta) owns one forward and one
// backward output place; the forward place feeds canonical(xi+1, eta), the
// backward place feeds canonical(xi, eta+1).

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cycloid/lattice.hpp"

namespace cycloid {

/// Default cap on the area of a net that build_net will materialize.
inline constexpr Int kDefaultMaxNetArea = 1'000'000;

enum class PlaceKind : std::uint8_t { forward, backward };

struct TransitionId {
  Point at;
  friend auto operator<=>(const TransitionId&, const TransitionId&) = default;
};

struct PlaceId {
  PlaceKind kind = PlaceKind::forward;
  TransitionId at;
  friend auto operator<=>(const PlaceId&, const PlaceId&) = default;
};

/// Node kinds in export order.
enum class NodeKind : std::uint8_t { transition, forward, backward };

struct Node {
  NodeKind kind = NodeKind::transition;
  Point at;

  static Node of(TransitionId t) { return {NodeKind::transition, t.at}; }
  static Node of(PlaceId p) {
    return {p.kind == PlaceKind::forward ? NodeKind::forward : NodeKind::backward, p.at.at};
  }
  bool is_transition() const { return kind == NodeKind::transition; }
  bool is_place() const { return !is_transition(); }

  friend auto operator<=>(const Node&, const Node&) = default;
};

/// Stable key "T:xi,eta", "F:xi,eta" or "B:xi,eta".
std::string node_key(Node n);
/// Inverse of node_key. Throws DomainError on malformed input.
Node parse_node_key(std::string_view key);

std::string place_key(PlaceId p);

struct Arc {
  Node from;
  Node to;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Immutable net value. The constructor sorts and deduplicates its inputs and
/// caches adjacency; it does not check the cycloid invariants (see
/// validate_net), so fixtures with defects can be represented.
class CycloidNet {
 public:
  CycloidNet(CycloidParams params, std::vector<TransitionId> transitions,
             std::vector<PlaceId> places, std::vector<Arc> arcs);

  const CycloidParams& params() const { return params_; }
  std::span<const TransitionId> transitions() const { return transitions_; }
  std::span<const PlaceId> places() const { return places_; }
  std::span<const Arc> arcs() const { return arcs_; }

  bool contains(Node n) const;
  bool contains(TransitionId t) const { return contains(Node::of(t)); }
  bool contains(PlaceId p) const { return contains(Node::of(p)); }

  /// Inputs of `n`, sorted. Throws DomainError for a node not in the net.
  std::span<const Node> pre_set(Node n) const;
  /// Outputs of `n`, sorted. Throws DomainError for a node not in the net.
  std::span<const Node> post_set(Node n) const;

  /// Position of a transition in transitions(), or -1.
  std::ptrdiff_t transition_index(TransitionId t) const;

  friend bool operator==(const CycloidNet& a, const CycloidNet& b) {
    return a.params_ == b.params_ && a.transitions_ == b.transitions_ &&
           a.places_ == b.places_ && a.arcs_ == b.arcs_;
  }

 private:
  std::size_t index_of(Node n) const;  // throws

  CycloidParams params_;
  std::vector<TransitionId> transitions_;
  std::vector<PlaceId> places_;
  std::vector<Arc> arcs_;

  // Sorted node list with CSR adjacency.
  std::vector<Node> nodes_;
  std::vector<std::size_t> pre_offsets_, post_offsets_;
  std::vector<Node> pre_flat_, post_flat_;
};

/// All canonical points of the cycloid, sorted by (xi, eta). There are
/// exactly area() of them.
std::vector<Point> fundamental_points(const CycloidParams& params);

/// Throws OverflowError if area exceeds `max_area`.
CycloidNet build_net(const CycloidParams& params, Int max_area = kDefaultMaxNetArea);

std::vector<Node> pre_set(const CycloidNet& net, Node n);
std::vector<Node> post_set(const CycloidNet& net, Node n);

/// Transition reached from t through its output place of the given kind.
/// Throws DomainError unless that place exists with exactly one output.
TransitionId successor(const CycloidNet& net, TransitionId t, PlaceKind kind);

enum class ViolationKind {
  node_count,             // |T| != area or |S| != 2|T|
  arc_endpoint,           // arc to an unknown node, or not bipartite
  non_canonical,          // transition outside the fundamental parallelogram
  degree,                 // transition not 2-in/2-out by kind, place not 1-in/1-out
  place_naming,           // place's input transition is not the one it is named after
  flow_structure,         // place output is not the Petri-space successor
  successor_permutation,  // a successor map is not a bijection on T
};

std::string_view to_string(ViolationKind kind);

/// One failed check, with every offending node.
struct Violation {
  ViolationKind kind;
  std::vector<Node> nodes;
  std::string message;
};

/// Empty for a well-formed cycloid net. At most one Violation per kind;
/// checks that presuppose correct degrees are skipped when degrees are off.
std::vector<Violation> validate_net(const CycloidNet& net);

/// GraphViz text. Transitions are boxes, places circles; deterministic.
std::string export_dot(const CycloidNet& net);

/// {"params":[a,b,g,d], "transitions":[[xi,eta]...],
///  "places":[{"kind":"F"|"B","at":[xi,eta]}...], "arcs":[[from,to]...]}
std::string export_json(const CycloidNet& net);

/// Inverse of export_json. Throws DomainError on malformed documents.
CycloidNet parse_net_json(std::string_view text);

}  // namespace cycloid
