#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ctract/bitset.hpp"

namespace ctract {

// Thrown for malformed external input (files, CLI arguments, wire formats).
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Graph;

// Mutable construction buffer; everything else works on immutable Graph
// values.
class GraphBuilder {
public:
  GraphBuilder& add_vertex(const std::string& id);
  GraphBuilder& add_edge(const std::string& u, const std::string& v);
  bool has_vertex(const std::string& id) const { return index_.count(id) > 0; }
  Graph build() const;

private:
  friend class Graph;
  std::vector<std::string> names_;
  std::map<std::string, int> index_;
  std::set<std::pair<int, int>> edges_;  // normalized (min,max) pairs
};

// Finite simple undirected graph.  Vertices carry string ids at the API
// boundary; internally they are dense ints with bitset adjacency rows.
// All "mutating" operations return a fresh Graph value.
class Graph {
public:
  Graph() = default;

  int order() const { return static_cast<int>(names_.size()); }
  int size() const { return edge_count_; }

  bool has_vertex(const std::string& id) const { return index_.count(id) > 0; }
  // dense index lookup, throws std::invalid_argument for unknown ids
  int index_of(const std::string& id) const;
  std::optional<int> find(const std::string& id) const;
  const std::string& name(int i) const { return names_[static_cast<std::size_t>(i)]; }

  const VertexSet& adj(int i) const { return adj_[static_cast<std::size_t>(i)]; }
  bool adjacent(int i, int j) const { return adj_[static_cast<std::size_t>(i)].test(j); }
  bool has_edge(const std::string& u, const std::string& v) const;
  int degree(int i) const { return adj_[static_cast<std::size_t>(i)].count(); }

  // vertex ids in lexicographic order
  std::vector<std::string> vertex_names() const;
  // canonical edge list: each pair sorted, list sorted
  std::vector<std::pair<std::string, std::string>> edge_list() const;
  std::set<std::string> neighbor_names(const std::string& id) const;

  // Contract edge uv: u and v are replaced by one fresh vertex adjacent to
  // (N(u) u N(v)) \ {u,v}.  The fresh vertex is named after the
  // lexicographically smaller endpoint plus a merge-count suffix, e.g.
  // contracting a,b gives "a~2" and contracting "a~2",c gives "a~3".
  Graph contract_edge(const std::string& u, const std::string& v) const;

  // Replace edge uv by a path u,z,v; z is named "u:v" (endpoints in
  // lexicographic order), primed on collision.
  Graph subdivide_edge(const std::string& u, const std::string& v) const;

  // Collapse each class of the given partition of V to a single vertex named
  // by its label; class labels become the vertex ids of the result.
  Graph quotient(
      const std::vector<std::pair<std::string, std::set<std::string>>>& parts) const;

  Graph with_vertex(const std::string& id) const;
  Graph with_edge(const std::string& u, const std::string& v) const;
  Graph without_edge(const std::string& u, const std::string& v) const;
  Graph without_vertices(const std::set<std::string>& drop) const;

  // Two-colouring by BFS, deterministic: components are rooted at their
  // lexicographically smallest vertex and the root goes to side A.
  std::optional<std::pair<std::set<std::string>, std::set<std::string>>>
  bipartition() const;

  // all-pairs BFS distances, -1 for unreachable pairs
  std::vector<std::vector<int>> distance_matrix() const;
  // nullopt means infinite (disconnected); the empty graph has diameter 0
  std::optional<int> diameter() const;

  bool connected() const;
  // Does s induce a connected subgraph?  Rejects empty s and ids outside V.
  bool connected_subset(const std::set<std::string>& s) const;
  // BFS inside the masked subgraph from `from`, returns reached mask.
  VertexSet reach_within(const VertexSet& mask, int from) const;

  static Graph path(int n, const std::string& prefix = "p");
  static Graph cycle(int n, const std::string& prefix = "c");
  static Graph from_edges(
      const std::vector<std::string>& vertices,
      const std::vector<std::pair<std::string, std::string>>& edges);

  // Equality of values: same vertex id set, same edge set.
  friend bool operator==(const Graph& a, const Graph& b);

private:
  friend class GraphBuilder;
  std::vector<std::string> names_;
  std::map<std::string, int> index_;
  std::vector<VertexSet> adj_;
  int edge_count_ = 0;
};

bool is_path_graph(const Graph& g);
bool is_cycle_graph(const Graph& g);
// brute-force isomorphism test, intended for graphs of order <= 8
bool isomorphic_small(const Graph& a, const Graph& b);

}  // namespace ctract
