#pragma once

#include <map>
#include <string>

#include "ctract/graph.hpp"
#include "ctract/hypergraph.hpp"
#include "ctract/witness.hpp"

namespace ctract {

// Thrown when a witness is structurally fine as input but not usable for
// colouring extraction (fails verification or has the wrong endpoints).
struct extraction_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class RoleKind {
  star,            // the hub q* (P5 gadget only)
  u1,
  u2,              // P5 gadget only
  v,
  w,
  x,               // C6/P6 gadgets only
  element,         // q_i, i-th element of the source ground set
  hyperedge,       // S_j
  hyperedge_copy,  // S'_j
  subdivision      // q^i_j, the subdivided incidence of element i in hyperedge j
};

struct VertexRole {
  RoleKind kind;
  int i = 0;  // element index, 1-based
  int j = 0;  // hyperedge index, 1-based

  // role-derived vertex id: "qstar", "u1", "u2", "v", "w", "x",
  // "q<i>", "S<j>", "Sp<j>", "q<i>_<j>"
  std::string vertex_id() const;
  std::string encode() const;
  static VertexRole decode(const std::string& text);

  friend bool operator==(const VertexRole& a, const VertexRole& b) = default;
};

enum class GadgetKind { p5, c6, p6 };

// A constructed gadget graph with its role labelling and the normalized
// source hypergraph it was built from.
struct LabeledGadget {
  GadgetKind kind;
  Graph graph;
  std::map<std::string, VertexRole> roles;
  Hypergraph source;

  friend bool operator==(const LabeledGadget& a, const LabeledGadget& b) = default;
};

// P5 gadget: the subdivided incidence graph of (Q,S) plus the copy layer S',
// the complete bipartite S-S' join, the hub q* over all subdivision vertices,
// the guards u1,u2 over S, and the tails v and w.  Requires a normalized
// input (final hyperedge = Q, at least two hyperedges, none empty).
LabeledGadget build_p5_gadget(const Hypergraph& h);

// C6 gadget: the P5 gadget minus q* and u2, plus a fresh vertex x adjacent
// to v and w.
LabeledGadget build_c6_gadget(const Hypergraph& h);

// P6 gadget: the C6 gadget minus the edge vx.
LabeledGadget build_p6_gadget(const Hypergraph& h);

// Valid 2-colouring -> P5 witness: {v}, {q*,u1,u2}, S u Q1 u Q', S' u Q2, {w}.
WitnessStructure colouring_to_p5_witness(const LabeledGadget& gadget, const TwoColouring& c);

// Valid 2-colouring -> C6 witness: {v}, {u1}, S u Q1 u Q', S' u Q2, {w}, {x}.
WitnessStructure colouring_to_c6_witness(const LabeledGadget& gadget, const TwoColouring& c);

// Reverse direction for P5 witnesses with endpoint classes {v} and {w} (in
// either orientation): Q1 = Q n W(p3), Q2 = Q n W(p4).  Elements falling in
// neither class, or an extracted colouring that fails check_colouring, are
// impossible for a verified witness and raise std::logic_error.
TwoColouring p5_witness_to_colouring(const LabeledGadget& gadget, const WitnessStructure& ws);

// canonical graph JSON extended with "roles" and the embedded "source"
// hypergraph; parsing revalidates against a rebuild from the source
std::string gadget_to_json(const LabeledGadget& gadget);
LabeledGadget gadget_from_json(const std::string& text);

// DOT export with one fill colour per role class
std::string gadget_to_dot(const LabeledGadget& gadget);

}  // namespace ctract
