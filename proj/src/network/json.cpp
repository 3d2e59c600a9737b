#include <json.hpp>

#include "flowcount/error.hpp"
#include "flowcount/network.hpp"

namespace flowcount {

namespace {

using nlohmann::json;

BigInt integer_field(const json& value, const char* what) {
  if (value.is_number_integer()) return BigInt(value.dump());
  if (value.is_string()) return parse_integer(value.get<std::string>());
  throw InputError(std::string(what) + " must be an integer");
}

std::string id_field(const json& value) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_number_integer()) return value.dump();
  throw InputError("node id must be a string");
}

json integer_json(const BigInt& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

}  // namespace

Network network_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("nodes") || !doc["nodes"].is_array()) {
    throw InputError("network JSON needs a \"nodes\" array");
  }
  std::vector<Node> nodes;
  for (const auto& n : doc["nodes"]) {
    if (!n.is_object() || !n.contains("id")) throw InputError("each node needs an \"id\"");
    BigInt excess = n.contains("excess") ? integer_field(n["excess"], "excess") : BigInt(0);
    nodes.push_back({id_field(n["id"]), excess});
  }
  std::vector<Arc> arcs;
  Network probe(nodes, {});
  if (doc.contains("arcs")) {
    if (!doc["arcs"].is_array()) throw InputError("\"arcs\" must be an array");
    for (const auto& a : doc["arcs"]) {
      if (!a.is_object() || !a.contains("tail") || !a.contains("head")) {
        throw InputError("each arc needs \"tail\" and \"head\"");
      }
      auto tail = probe.find(id_field(a["tail"]));
      auto head = probe.find(id_field(a["head"]));
      if (!tail || !head) throw InputError("arc refers to an unknown node");
      Arc arc{*tail, *head, std::nullopt};
      if (a.contains("capacity") && !a["capacity"].is_null()) arc.capacity = integer_field(a["capacity"], "capacity");
      arcs.push_back(std::move(arc));
    }
  }
  return Network(std::move(nodes), std::move(arcs));
}

std::string network_to_json(const Network& net) {
  json doc;
  doc["nodes"] = json::array();
  for (const auto& n : net.nodes()) doc["nodes"].push_back({{"id", n.id}, {"excess", integer_json(n.excess)}});
  doc["arcs"] = json::array();
  for (const auto& a : net.arcs()) {
    json arc = {{"tail", net.nodes()[a.tail].id}, {"head", net.nodes()[a.head].id}};
    if (a.capacity) arc["capacity"] = integer_json(*a.capacity);
    doc["arcs"].push_back(std::move(arc));
  }
  return doc.dump();
}

}  // namespace flowcount
