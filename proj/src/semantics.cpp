#include "cycloid/semantics.hpp"

#include <algorithm>
#include <vector>

#include "cycloid/error.hpp"

namespace cycloid {

namespace {

void check_marking(const CycloidNet& net, const Marking& m) {
  for (const PlaceId& p : m) {
    if (!net.contains(p)) {
      throw DomainError("marked place " + place_key(p) + " is not in " + net.params().to_string());
    }
  }
}

bool is_marked(const Marking& m, Node n) {
  return m.contains(PlaceId{n.kind == NodeKind::forward ? PlaceKind::forward : PlaceKind::backward,
                            {n.at}});
}

PlaceId as_place(Node n) {
  return {n.kind == NodeKind::forward ? PlaceKind::forward : PlaceKind::backward, {n.at}};
}

bool enabled_unchecked(const CycloidNet& net, const Marking& m, TransitionId t) {
  const Node n = Node::of(t);
  const auto pre = net.pre_set(n);
  const auto post = net.post_set(n);
  return std::all_of(pre.begin(), pre.end(), [&](Node s) { return is_marked(m, s); }) &&
         std::none_of(post.begin(), post.end(), [&](Node s) { return is_marked(m, s); });
}

}  // namespace

bool enabled(const CycloidNet& net, const Marking& m, TransitionId t) {
  if (!net.contains(t)) {
    throw DomainError("transition " + node_key(Node::of(t)) + " is not in " + net.params().to_string());
  }
  check_marking(net, m);
  return enabled_unchecked(net, m, t);
}

Marking fire(const CycloidNet& net, const Marking& m, TransitionId t) {
  if (!enabled(net, m, t)) {
    throw DomainError("transition " + node_key(Node::of(t)) + " is not enabled");
  }
  Marking next = m;
  const Node n = Node::of(t);
  for (Node s : net.pre_set(n)) next.erase(as_place(s));
  for (Node s : net.post_set(n)) next.insert(as_place(s));
  return next;
}

std::set<TransitionId> enabled_set(const CycloidNet& net, const Marking& m) {
  check_marking(net, m);
  std::set<TransitionId> out;
  for (const TransitionId& t : net.transitions()) {
    if (enabled_unchecked(net, m, t)) out.insert(t);
  }
  return out;
}

Marking parse_marking(const CycloidParams& params, std::string_view text) {
  Marking m;
  if (text.empty()) return m;
  std::vector<std::string_view> fields;
  for (std::size_t pos = 0;;) {
    const auto comma = text.find(',', pos);
    if (comma == std::string_view::npos) {
      fields.push_back(text.substr(pos));
      break;
    }
    fields.push_back(text.substr(pos, comma - pos));
    pos = comma + 1;
  }
  // Each place spans two fields: "K:xi" and "eta".
  if (fields.size() % 2 != 0) {
    throw DomainError("malformed marking '" + std::string(text) + "'");
  }
  for (std::size_t i = 0; i < fields.size(); i += 2) {
    const Node n = parse_node_key(std::string(fields[i]) + "," + std::string(fields[i + 1]));
    if (n.is_transition()) {
      throw DomainError("marking entry '" + node_key(n) + "' is not a place");
    }
    PlaceId p = as_place(n);
    p.at.at = canonical(params, p.at.at);
    m.insert(p);
  }
  return m;
}

std::string format_marking(const Marking& m) {
  std::string out;
  for (const PlaceId& p : m) {
    if (!out.empty()) out += ',';
    out += place_key(p);
  }
  return out;
}

}  // namespace cycloid
