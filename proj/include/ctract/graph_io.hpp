#pragma once

#include <map>
#include <string>

#include "ctract/graph.hpp"

namespace ctract {

// Canonical wire format:
//   {"vertices": [...], "edges": [["a","b"], ...]}
// with vertices sorted lexicographically, each edge pair sorted and the edge
// list sorted.  Emission is byte-deterministic; parsing accepts any order and
// ignores unknown keys.
std::string graph_to_json(const Graph& g);
Graph graph_from_json(const std::string& text);

// DOT export, undirected; fill colours can be attached per vertex.
std::string graph_to_dot(const Graph& g, const std::string& name = "G",
                         const std::map<std::string, std::string>& fill = {});

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace ctract
