#include "ctract/graph_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace ctract {

using nlohmann::json;
using nlohmann::ordered_json;

std::string graph_to_json(const Graph& g) {
  ordered_json j;
  j["vertices"] = g.vertex_names();
  auto edges = ordered_json::array();
  for (const auto& [u, v] : g.edge_list()) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  return j.dump(2) + "\n";
}

Graph graph_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw input_error(std::string("graph: invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
    throw input_error("graph: expected an object with vertices and edges");
  if (!j["vertices"].is_array() || !j["edges"].is_array())
    throw input_error("graph: vertices and edges must be arrays");
  GraphBuilder b;
  try {
    for (const auto& v : j["vertices"]) {
      if (!v.is_string()) throw input_error("graph: vertex ids must be strings");
      b.add_vertex(v.get<std::string>());
    }
    for (const auto& e : j["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
        throw input_error("graph: each edge must be a pair of vertex ids");
      b.add_edge(e[0].get<std::string>(), e[1].get<std::string>());
    }
  } catch (const std::invalid_argument& e) {
    throw input_error(std::string("graph: ") + e.what());
  }
  return b.build();
}

std::string graph_to_dot(const Graph& g, const std::string& name,
                         const std::map<std::string, std::string>& fill) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (const auto& id : g.vertex_names()) {
    out << "  \"" << id << "\"";
    auto it = fill.find(id);
    if (it != fill.end())
      out << " [style=filled, fillcolor=\"" << it->second << "\"]";
    out << ";\n";
  }
  for (const auto& [u, v] : g.edge_list())
    out << "  \"" << u << "\" -- \"" << v << "\";\n";
  out << "}\n";
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw input_error("cannot write " + path);
  out << content;
  if (!out) throw input_error("write failed for " + path);
}

}  // namespace ctract
