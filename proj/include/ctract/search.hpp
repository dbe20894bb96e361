#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>

#include "ctract/graph.hpp"
#include "ctract/witness.hpp"

namespace ctract {

enum class SearchStatus { found, exhausted, budget_exceeded };

// Decision result with an explicit third outcome: hitting the node budget is
// distinct from a proven "no".
template <typename T>
struct Outcome {
  SearchStatus status;
  std::optional<T> value;

  static Outcome found(T v) { return {SearchStatus::found, std::move(v)}; }
  static Outcome no() { return {SearchStatus::exhausted, std::nullopt}; }
  static Outcome budget() { return {SearchStatus::budget_exceeded, std::nullopt}; }

  bool is_found() const { return status == SearchStatus::found; }
  bool is_no() const { return status == SearchStatus::exhausted; }
  bool is_budget() const { return status == SearchStatus::budget_exceeded; }
};

struct SearchLimits {
  std::uint64_t max_nodes = 100'000'000;
};

// Exhaustive witness-structure search: assigns vertices to pattern classes in
// descending-degree order, probing classes in pattern order, with incremental
// pruning (an assignment dies as soon as two placed vertices are closer in g
// than their classes are in the pattern, which covers cross edges between
// non-adjacent classes); connectivity and edge coverage are checked at the
// leaves.  First valid witness wins.  Intended for |V(g)| up to ~16 for
// general patterns; |V(h)| > |V(g)| is answered with a plain no.
Outcome<WitnessStructure> contracts_to(const Graph& g, const PatternSpec& h,
                                       const SearchLimits& limits = {});

struct SuitablePair {
  std::string u, v;
  WitnessStructure witness;
};

// Path-specific decision procedure: scans candidate end pairs (u,v) in
// lexicographic order, keeping only pairs at distance >= l-1, pins the
// endpoint classes to {u} and {v}, seeds the first and last middle classes
// with N(u) and N(v), and searches the remaining classes.  A pair exists iff
// the graph is P_l-contractible (l >= 3).
Outcome<SuitablePair> find_suitable_pair(const Graph& g, int l,
                                         const SearchLimits& limits = {});

struct TwoDCSSolution {
  std::set<std::string> a1, a2;
};

// 2-Disjoint Connected Subgraphs: partition V(g) into A1 >= Z1 and A2 >= Z2
// with both sides inducing connected subgraphs.  Plain exponential branching
// over the free vertices; a branch dies when the union of a side's assigned
// and unassigned vertices no longer spans that side in one component.
std::optional<TwoDCSSolution> solve_2dcs(const Graph& g,
                                         const std::set<std::string>& z1,
                                         const std::set<std::string>& z2);

// P4-contractibility via candidate end pairs: for every non-adjacent pair
// u,v with disjoint nonempty neighbourhoods, solve 2-DCS on g - {u,v} with
// terminals N(u), N(v); on success the witness {u}, A1, A2, {v} is returned.
std::optional<WitnessStructure> p4_contractible(const Graph& g);

// C3-contractibility is polynomial: true iff g is connected and contains a
// cycle.
bool c3_contractible(const Graph& g);

// Largest k >= 3 such that g is C_k-contractible, 0 when there is none
// (acyclic or disconnected g).  Scans k downward from |V(g)|; correctness of
// the early exit rests on cycle monotonicity.
Outcome<int> cyclicity(const Graph& g, const SearchLimits& limits = {});

}  // namespace ctract
