#include <sstream>

#include "json.hpp"

#include "cycloid/error.hpp"
#include "cycloid/net.hpp"

namespace cycloid {

using ojson = nlohmann::ordered_json;

std::string export_dot(const CycloidNet& net) {
  const CycloidParams& p = net.params();
  std::ostringstream os;
  os << "digraph \"" << p.to_string() << "\" {\n";
  os << "  rankdir=LR;\n";
  for (const auto& t : net.transitions()) {
    os << "  \"" << node_key(Node::of(t)) << "\" [shape=box];\n";
  }
  for (const auto& s : net.places()) {
    os << "  \"" << place_key(s) << "\" [shape=circle];\n";
  }
  for (const auto& a : net.arcs()) {
    os << "  \"" << node_key(a.from) << "\" -> \"" << node_key(a.to) << "\";\n";
  }
  os << "}\n";
  return os.str();
}

std::string export_json(const CycloidNet& net) {
  const CycloidParams& p = net.params();
  ojson doc;
  doc["params"] = {p.alpha(), p.beta(), p.gamma(), p.delta()};
  ojson transitions = ojson::array();
  for (const auto& t : net.transitions()) transitions.push_back({t.at.xi, t.at.eta});
  ojson places = ojson::array();
  for (const auto& s : net.places()) {
    places.push_back({{"kind", s.kind == PlaceKind::forward ? "F" : "B"},
                      {"at", {s.at.at.xi, s.at.at.eta}}});
  }
  ojson arcs = ojson::array();
  for (const auto& a : net.arcs()) arcs.push_back({node_key(a.from), node_key(a.to)});
  doc["transitions"] = std::move(transitions);
  doc["places"] = std::move(places);
  doc["arcs"] = std::move(arcs);
  return doc.dump() + "\n";
}

namespace {

Point point_of(const ojson& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer()) {
    throw DomainError("net json: expected [xi,eta], got " + j.dump());
  }
  return {j[0].get<Int>(), j[1].get<Int>()};
}

}  // namespace

CycloidNet parse_net_json(std::string_view text) {
  ojson doc;
  try {
    doc = ojson::parse(text);
  } catch (const ojson::parse_error& e) {
    throw DomainError(std::string("net json: ") + e.what());
  }
  try {
    const auto& jp = doc.at("params");
    if (!jp.is_array() || jp.size() != 4) throw DomainError("net json: params must have 4 entries");
    const CycloidParams params(jp[0].get<Int>(), jp[1].get<Int>(), jp[2].get<Int>(), jp[3].get<Int>());

    std::vector<TransitionId> transitions;
    for (const auto& jt : doc.at("transitions")) transitions.push_back({point_of(jt)});

    std::vector<PlaceId> places;
    for (const auto& js : doc.at("places")) {
      const auto kind = js.at("kind").get<std::string>();
      if (kind != "F" && kind != "B") throw DomainError("net json: unknown place kind '" + kind + "'");
      places.push_back({kind == "F" ? PlaceKind::forward : PlaceKind::backward, {point_of(js.at("at"))}});
    }

    std::vector<Arc> arcs;
    for (const auto& ja : doc.at("arcs")) {
      if (!ja.is_array() || ja.size() != 2) throw DomainError("net json: arc must be [from,to]");
      arcs.push_back({parse_node_key(ja[0].get<std::string>()), parse_node_key(ja[1].get<std::string>())});
    }
    return CycloidNet(params, std::move(transitions), std::move(places), std::move(arcs));
  } catch (const ojson::exception& e) {
    throw DomainError(std::string("net json: ") + e.what());
  }
}

}  // namespace cycloid
