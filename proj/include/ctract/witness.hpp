#pragma once

#include <map>
#include <set>
#include <string>

#include "ctract/graph.hpp"

namespace ctract {

// Target pattern H: a path P_l (l >= 1), a cycle C_k (k >= 3), or an
// explicit graph of order at most 8.  Paths expand to vertices p1..pl,
// cycles to c1..ck.
class PatternSpec {
public:
  enum class Kind { path, cycle, explicit_graph };

  static PatternSpec path(int l);
  static PatternSpec cycle(int k);
  static PatternSpec explicit_graph(Graph g);

  Kind kind() const { return kind_; }
  int order() const;
  const Graph& expanded() const { return expanded_; }
  std::string describe() const;

  friend bool operator==(const PatternSpec& a, const PatternSpec& b) {
    return a.kind_ == b.kind_ && a.expanded_ == b.expanded_;
  }

private:
  PatternSpec(Kind k, Graph g) : kind_(k), expanded_(std::move(g)) {}
  Kind kind_;
  Graph expanded_;
};

// Candidate H-witness structure of a graph: one class of vertices per
// pattern vertex.  A valid witness certifies contractibility to H; the
// quotient by its classes is the pattern itself.
struct WitnessStructure {
  PatternSpec pattern;
  std::map<std::string, std::set<std::string>> classes;

  std::vector<std::pair<std::string, std::set<std::string>>> parts_in_pattern_order() const;
};

struct VerifyResult {
  bool ok;
  std::string reason;  // first failed condition, empty when ok
  explicit operator bool() const { return ok; }
};

// Checks, in order: class shape (every pattern vertex has a nonempty class
// of known g-vertices), connectivity of every class, partition of V(g), and
// cross edges exactly between classes of adjacent pattern vertices.  Reports
// the first failure.
VerifyResult verify_witness(const Graph& g, const WitnessStructure& ws);

std::string witness_to_json(const WitnessStructure& ws);
WitnessStructure witness_from_json(const std::string& text);

}  // namespace ctract
