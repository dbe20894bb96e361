#include "ctract/witness.hpp"

#include <algorithm>

#include "json.hpp"

namespace ctract {

using nlohmann::json;
using nlohmann::ordered_json;

PatternSpec PatternSpec::path(int l) {
  if (l < 1) throw std::invalid_argument("pattern: path length must be >= 1");
  return PatternSpec(Kind::path, Graph::path(l, "p"));
}

PatternSpec PatternSpec::cycle(int k) {
  if (k < 3) throw std::invalid_argument("pattern: cycle length must be >= 3");
  return PatternSpec(Kind::cycle, Graph::cycle(k, "c"));
}

PatternSpec PatternSpec::explicit_graph(Graph g) {
  if (g.order() < 1 || g.order() > 8)
    throw std::invalid_argument("pattern: explicit pattern order must be in [1,8]");
  return PatternSpec(Kind::explicit_graph, std::move(g));
}

int PatternSpec::order() const { return expanded_.order(); }

std::string PatternSpec::describe() const {
  switch (kind_) {
    case Kind::path:
      return "P" + std::to_string(order());
    case Kind::cycle:
      return "C" + std::to_string(order());
    default:
      return "explicit(" + std::to_string(order()) + ")";
  }
}

std::vector<std::pair<std::string, std::set<std::string>>>
WitnessStructure::parts_in_pattern_order() const {
  std::vector<std::pair<std::string, std::set<std::string>>> parts;
  // pattern vertex order: p1..pl / c1..ck for paths and cycles, insertion
  // order is reconstructed from the expanded pattern's builder order
  for (int i = 1; i <= pattern.order(); ++i) {
    std::string label;
    switch (pattern.kind()) {
      case PatternSpec::Kind::path:
        label = "p" + std::to_string(i);
        break;
      case PatternSpec::Kind::cycle:
        label = "c" + std::to_string(i);
        break;
      default:
        label.clear();
        break;
    }
    if (!label.empty()) {
      auto it = classes.find(label);
      parts.emplace_back(label, it == classes.end() ? std::set<std::string>{} : it->second);
    }
  }
  if (pattern.kind() == PatternSpec::Kind::explicit_graph) {
    for (const auto& label : pattern.expanded().vertex_names()) {
      auto it = classes.find(label);
      parts.emplace_back(label, it == classes.end() ? std::set<std::string>{} : it->second);
    }
  }
  return parts;
}

VerifyResult verify_witness(const Graph& g, const WitnessStructure& ws) {
  const Graph& h = ws.pattern.expanded();

  // class shape
  for (const auto& label : h.vertex_names())
    if (!ws.classes.count(label))
      return {false, "shape: no class for pattern vertex " + label};
  for (const auto& [label, members] : ws.classes) {
    if (!h.has_vertex(label))
      return {false, "shape: class " + label + " is not a pattern vertex"};
    if (members.empty()) return {false, "shape: class " + label + " is empty"};
    for (const auto& id : members)
      if (!g.has_vertex(id))
        return {false, "shape: class " + label + " contains unknown vertex " + id};
  }

  // connectivity: every class induces a connected subgraph
  for (const auto& [label, members] : ws.classes)
    if (!g.connected_subset(members))
      return {false, "connectivity: class " + label + " induces a disconnected subgraph"};

  // partition: classes are pairwise disjoint and cover V(g)
  std::map<std::string, std::string> owner;
  for (const auto& [label, members] : ws.classes) {
    for (const auto& id : members) {
      auto [it, fresh] = owner.emplace(id, label);
      if (!fresh)
        return {false, "partition: vertex " + id + " lies in classes " + it->second +
                           " and " + label};
    }
  }
  if (static_cast<int>(owner.size()) != g.order()) {
    for (const auto& id : g.vertex_names())
      if (!owner.count(id)) return {false, "partition: vertex " + id + " lies in no class"};
  }

  // edges: cross edges exactly between classes of adjacent pattern vertices
  std::vector<std::string> labels = h.vertex_names();
  for (std::size_t a = 0; a < labels.size(); ++a) {
    for (std::size_t b = a + 1; b < labels.size(); ++b) {
      bool want = h.has_edge(labels[a], labels[b]);
      const auto& ca = ws.classes.at(labels[a]);
      const auto& cb = ws.classes.at(labels[b]);
      bool have = false;
      std::string example;
      for (const auto& x : ca) {
        VertexSet nb = g.adj(g.index_of(x));
        for (int j = nb.first(); j >= 0; j = nb.next(j)) {
          if (cb.count(g.name(j))) {
            have = true;
            example = x + "-" + g.name(j);
            break;
          }
        }
        if (have) break;
      }
      if (want && !have)
        return {false, "edges: no edge between classes " + labels[a] + " and " + labels[b] +
                           " of adjacent pattern vertices"};
      if (!want && have)
        return {false, "edges: illegal edge " + example + " between classes " + labels[a] +
                           " and " + labels[b] + " of non-adjacent pattern vertices"};
    }
  }
  return {true, ""};
}

namespace {

ordered_json pattern_to_json(const PatternSpec& p) {
  ordered_json j;
  switch (p.kind()) {
    case PatternSpec::Kind::path:
      j["kind"] = "path";
      j["size"] = p.order();
      break;
    case PatternSpec::Kind::cycle:
      j["kind"] = "cycle";
      j["size"] = p.order();
      break;
    default: {
      j["kind"] = "explicit";
      ordered_json g;
      g["vertices"] = p.expanded().vertex_names();
      auto edges = ordered_json::array();
      for (const auto& [u, v] : p.expanded().edge_list()) edges.push_back({u, v});
      g["edges"] = std::move(edges);
      j["graph"] = std::move(g);
      break;
    }
  }
  return j;
}

PatternSpec pattern_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw input_error("witness: pattern needs a string kind");
  std::string kind = j["kind"].get<std::string>();
  try {
    if (kind == "path" || kind == "cycle") {
      if (!j.contains("size") || !j["size"].is_number_integer())
        throw input_error("witness: pattern needs an integer size");
      int size = j["size"].get<int>();
      return kind == "path" ? PatternSpec::path(size) : PatternSpec::cycle(size);
    }
    if (kind == "explicit") {
      if (!j.contains("graph")) throw input_error("witness: explicit pattern needs a graph");
      GraphBuilder b;
      const auto& g = j["graph"];
      if (!g.is_object() || !g.contains("vertices") || !g.contains("edges"))
        throw input_error("witness: explicit pattern graph needs vertices and edges");
      for (const auto& v : g["vertices"]) b.add_vertex(v.get<std::string>());
      for (const auto& e : g["edges"]) {
        if (!e.is_array() || e.size() != 2)
          throw input_error("witness: pattern edges must be pairs");
        b.add_edge(e[0].get<std::string>(), e[1].get<std::string>());
      }
      return PatternSpec::explicit_graph(b.build());
    }
  } catch (const std::invalid_argument& e) {
    throw input_error(std::string("witness: ") + e.what());
  } catch (const json::exception& e) {
    throw input_error(std::string("witness: ") + e.what());
  }
  throw input_error("witness: unknown pattern kind " + kind);
}

}  // namespace

std::string witness_to_json(const WitnessStructure& ws) {
  ordered_json j;
  j["pattern"] = pattern_to_json(ws.pattern);
  ordered_json classes;
  for (const auto& [label, members] : ws.parts_in_pattern_order()) {
    std::vector<std::string> sorted(members.begin(), members.end());
    classes[label] = sorted;
  }
  j["classes"] = std::move(classes);
  return j.dump(2) + "\n";
}

WitnessStructure witness_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw input_error(std::string("witness: invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("pattern") || !j.contains("classes") ||
      !j["classes"].is_object())
    throw input_error("witness: expected an object with pattern and classes");
  WitnessStructure ws{pattern_from_json(j["pattern"]), {}};
  for (const auto& [label, arr] : j["classes"].items()) {
    if (!arr.is_array()) throw input_error("witness: class " + label + " must be an array");
    auto& members = ws.classes[label];
    for (const auto& id : arr) {
      if (!id.is_string()) throw input_error("witness: vertex ids must be strings");
      if (!members.insert(id.get<std::string>()).second)
        throw input_error("witness: repeated vertex in class " + label);
    }
  }
  return ws;
}

}  // namespace ctract
