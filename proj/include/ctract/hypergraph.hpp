#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ctract/graph.hpp"

namespace ctract {

// Finite set Q of elements plus a list of hyperedges over Q.  Element order
// is significant: it fixes the 2-colouring oracle's tie-breaking and the wire
// format.  Hyperedges are stored with members in element order.
struct Hypergraph {
  std::vector<std::string> elements;
  std::vector<std::vector<int>> hyperedges;  // member indices, ascending

  int element_count() const { return static_cast<int>(elements.size()); }
  int hyperedge_count() const { return static_cast<int>(hyperedges.size()); }
  // total size of all hyperedges (sum of cardinalities)
  int incidence_count() const;

  std::vector<std::string> hyperedge_names(int j) const;

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) = default;
};

Hypergraph make_hypergraph(const std::vector<std::string>& elements,
                           const std::vector<std::vector<std::string>>& hyperedges);

// Partition of Q into two nonempty sides such that every hyperedge meets
// both.  Sides are element name sets.
struct TwoColouring {
  std::set<std::string> q1, q2;
  friend bool operator==(const TwoColouring& a, const TwoColouring& b) = default;
};

// Append Q itself as the final hyperedge (always, even when Q already occurs;
// twice when that still leaves fewer than two hyperedges).  Rejects empty
// hyperedges and ground sets with fewer than two elements.
Hypergraph normalize(const Hypergraph& h);

bool is_normalized(const Hypergraph& h);

// Exhaustive 2^(m-1) scan with the first element's side fixed; returns the
// lexicographically first valid colouring (elements in input order, side 1
// preferred) or nullopt.
std::optional<TwoColouring> is_two_colourable(const Hypergraph& h);

// Validity check for an arbitrary candidate colouring.
bool check_colouring(const Hypergraph& h, const TwoColouring& c);

std::string hypergraph_to_json(const Hypergraph& h);
Hypergraph hypergraph_from_json(const std::string& text);

std::string colouring_to_json(const Hypergraph& h, const TwoColouring& c);
TwoColouring colouring_from_json(const std::string& text);

}  // namespace ctract
