// Copyright 2026 The charnet Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Static weighted character network and its serializations. Nodes carry
// the roster data (label, mention weight, gender); undirected edges carry
// interaction counts. Exports are byte-stable: nodes ordered by id, edges
// by endpoint pair, and size attributes scale linearly with weight so a
// renderer can use them directly.

#include <algorithm>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "charnet/coref.hpp"
#include "charnet/errors.hpp"
#include "charnet/interactions.hpp"

#include "json.hpp"

namespace charnet {

struct NetworkNode {
  int id = 0;
  std::string label;
  int weight = 0;
  Gender gender = Gender::unknown;
};

struct NetworkEdge {
  int a = 0;  // a < b
  int b = 0;
  int weight = 0;
};

struct CharacterNetwork {
  std::vector<NetworkNode> nodes;  // ordered by id
  std::vector<NetworkEdge> edges;  // ordered by (a, b)

  bool operator==(const CharacterNetwork& other) const {
    if (nodes.size() != other.nodes.size() || edges.size() != other.edges.size()) return false;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const auto& x = nodes[i];
      const auto& y = other.nodes[i];
      if (x.id != y.id || x.label != y.label || x.weight != y.weight || x.gender != y.gender)
        return false;
    }
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const auto& x = edges[i];
      const auto& y = other.edges[i];
      if (x.a != y.a || x.b != y.b || x.weight != y.weight) return false;
    }
    return true;
  }
};

// One node per group (isolated characters included), one edge per table
// row. Rows name characters by representation; an unknown name means the
// table and roster come from different runs.
inline CharacterNetwork build_network(const std::vector<CharacterGroup>& groups,
                                      const std::vector<TableRow>& rows) {
  CharacterNetwork net;
  std::map<std::string, const CharacterGroup*> by_rep;
  for (const auto& g : groups) {
    net.nodes.push_back({g.group_id, g.representation, g.occurrence_count, g.gender});
    by_rep[g.representation] = &g;
  }
  std::sort(net.nodes.begin(), net.nodes.end(),
            [](const NetworkNode& a, const NetworkNode& b) { return a.id < b.id; });
  for (const auto& row : rows) {
    auto a = by_rep.find(row.character_a);
    auto b = by_rep.find(row.character_b);
    if (a == by_rep.end())
      throw InconsistentInput("unknown character in interaction table: " + row.character_a);
    if (b == by_rep.end())
      throw InconsistentInput("unknown character in interaction table: " + row.character_b);
    int ia = a->second->group_id, ib = b->second->group_id;
    if (ia == ib) throw InconsistentInput("self-interaction for " + row.character_a);
    if (row.interactions < 1)
      throw InconsistentInput("non-positive interaction count for " + row.character_a);
    NetworkEdge e{std::min(ia, ib), std::max(ia, ib), row.interactions};
    net.edges.push_back(e);
  }
  std::sort(net.edges.begin(), net.edges.end(), [](const NetworkEdge& x, const NetworkEdge& y) {
    return std::tie(x.a, x.b) < std::tie(y.a, y.b);
  });
  return net;
}

enum class GraphFormat { dot, graphml, json };

inline GraphFormat parse_graph_format(const std::string& s) {
  if (s == "dot") return GraphFormat::dot;
  if (s == "graphml") return GraphFormat::graphml;
  if (s == "json") return GraphFormat::json;
  throw UnsupportedFormat(s);
}

namespace detail {

inline std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

inline std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

}  // namespace detail

inline std::string export_dot(const CharacterNetwork& net) {
  std::string out = "graph characters {\n";
  for (const auto& n : net.nodes) {
    out += "  n" + std::to_string(n.id) + " [label=\"" + detail::dot_escape(n.label) +
           "\", weight=" + std::to_string(n.weight) +
           ", width=" + std::to_string(n.weight) +
           ", gender=\"" + std::string(1, gender_code(n.gender)) + "\"];\n";
  }
  for (const auto& e : net.edges) {
    out += "  n" + std::to_string(e.a) + " -- n" + std::to_string(e.b) +
           " [weight=" + std::to_string(e.weight) +
           ", width=" + std::to_string(e.weight) + "];\n";
  }
  out += "}\n";
  return out;
}

inline std::string export_graphml(const CharacterNetwork& net) {
  std::string out =
      "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
      "  <key id=\"label\" for=\"node\" attr.name=\"label\" attr.type=\"string\"/>\n"
      "  <key id=\"weight\" for=\"node\" attr.name=\"weight\" attr.type=\"int\"/>\n"
      "  <key id=\"gender\" for=\"node\" attr.name=\"gender\" attr.type=\"string\"/>\n"
      "  <key id=\"ew\" for=\"edge\" attr.name=\"weight\" attr.type=\"int\"/>\n"
      "  <key id=\"width\" for=\"edge\" attr.name=\"width\" attr.type=\"int\"/>\n"
      "  <graph id=\"characters\" edgedefault=\"undirected\">\n";
  for (const auto& n : net.nodes) {
    out += "    <node id=\"n" + std::to_string(n.id) + "\">\n";
    out += "      <data key=\"label\">" + detail::xml_escape(n.label) + "</data>\n";
    out += "      <data key=\"weight\">" + std::to_string(n.weight) + "</data>\n";
    out += "      <data key=\"gender\">" + std::string(1, gender_code(n.gender)) + "</data>\n";
    out += "    </node>\n";
  }
  for (const auto& e : net.edges) {
    out += "    <edge source=\"n" + std::to_string(e.a) + "\" target=\"n" +
           std::to_string(e.b) + "\">\n";
    out += "      <data key=\"ew\">" + std::to_string(e.weight) + "</data>\n";
    out += "      <data key=\"width\">" + std::to_string(e.weight) + "</data>\n";
    out += "    </edge>\n";
  }
  out += "  </graph>\n</graphml>\n";
  return out;
}

inline std::string export_json(const CharacterNetwork& net) {
  nlohmann::ordered_json j;
  j["nodes"] = nlohmann::ordered_json::array();
  for (const auto& n : net.nodes) {
    j["nodes"].push_back({{"id", n.id},
                          {"label", n.label},
                          {"weight", n.weight},
                          {"gender", std::string(1, gender_code(n.gender))}});
  }
  j["edges"] = nlohmann::ordered_json::array();
  for (const auto& e : net.edges)
    j["edges"].push_back({{"a", e.a}, {"b", e.b}, {"weight", e.weight}});
  return j.dump(2) + "\n";
}

inline std::string export_graph(const CharacterNetwork& net, GraphFormat format) {
  switch (format) {
    case GraphFormat::dot: return export_dot(net);
    case GraphFormat::graphml: return export_graphml(net);
    case GraphFormat::json: return export_json(net);
  }
  throw UnsupportedFormat("unknown");
}

// Round-trip for the JSON export.
inline CharacterNetwork parse_network_json(std::string_view contents) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(contents);
  } catch (const nlohmann::json::parse_error& e) {
    throw MalformedInput(0, std::string("network json: ") + e.what());
  }
  CharacterNetwork net;
  for (const auto& n : j.at("nodes")) {
    NetworkNode node;
    node.id = n.at("id").get<int>();
    node.label = n.at("label").get<std::string>();
    node.weight = n.at("weight").get<int>();
    std::string g = n.at("gender").get<std::string>();
    node.gender = g == "M" ? Gender::male : g == "F" ? Gender::female : Gender::unknown;
    net.nodes.push_back(std::move(node));
  }
  for (const auto& e : j.at("edges"))
    net.edges.push_back({e.at("a").get<int>(), e.at("b").get<int>(), e.at("weight").get<int>()});
  return net;
}

}  // namespace charnet
