#include "ctract/gadgets.hpp"

#include <algorithm>
#include <cctype>

#include "ctract/graph_io.hpp"
#include "json.hpp"

namespace ctract {

using nlohmann::json;
using nlohmann::ordered_json;

std::string VertexRole::vertex_id() const {
  switch (kind) {
    case RoleKind::star:
      return "qstar";
    case RoleKind::u1:
      return "u1";
    case RoleKind::u2:
      return "u2";
    case RoleKind::v:
      return "v";
    case RoleKind::w:
      return "w";
    case RoleKind::x:
      return "x";
    case RoleKind::element:
      return "q" + std::to_string(i);
    case RoleKind::hyperedge:
      return "S" + std::to_string(j);
    case RoleKind::hyperedge_copy:
      return "Sp" + std::to_string(j);
    default:
      return "q" + std::to_string(i) + "_" + std::to_string(j);
  }
}

std::string VertexRole::encode() const {
  switch (kind) {
    case RoleKind::star:
      return "Star";
    case RoleKind::u1:
      return "U1";
    case RoleKind::u2:
      return "U2";
    case RoleKind::v:
      return "V";
    case RoleKind::w:
      return "W";
    case RoleKind::x:
      return "X";
    case RoleKind::element:
      return "Element:" + std::to_string(i);
    case RoleKind::hyperedge:
      return "Hyperedge:" + std::to_string(j);
    case RoleKind::hyperedge_copy:
      return "HyperedgeCopy:" + std::to_string(j);
    default:
      return "Subdivision:" + std::to_string(i) + ":" + std::to_string(j);
  }
}

VertexRole VertexRole::decode(const std::string& text) {
  auto num = [&](std::size_t from, std::size_t to) {
    int value = 0;
    if (from >= to) throw input_error("role: missing index in " + text);
    for (std::size_t k = from; k < to; ++k) {
      if (!std::isdigit(static_cast<unsigned char>(text[k])))
        throw input_error("role: bad index in " + text);
      value = value * 10 + (text[k] - '0');
    }
    if (value < 1) throw input_error("role: index must be positive in " + text);
    return value;
  };
  if (text == "Star") return {RoleKind::star, 0, 0};
  if (text == "U1") return {RoleKind::u1, 0, 0};
  if (text == "U2") return {RoleKind::u2, 0, 0};
  if (text == "V") return {RoleKind::v, 0, 0};
  if (text == "W") return {RoleKind::w, 0, 0};
  if (text == "X") return {RoleKind::x, 0, 0};
  if (text.rfind("Element:", 0) == 0) return {RoleKind::element, num(8, text.size()), 0};
  if (text.rfind("Hyperedge:", 0) == 0) return {RoleKind::hyperedge, 0, num(10, text.size())};
  if (text.rfind("HyperedgeCopy:", 0) == 0)
    return {RoleKind::hyperedge_copy, 0, num(14, text.size())};
  if (text.rfind("Subdivision:", 0) == 0) {
    auto sep = text.find(':', 12);
    if (sep == std::string::npos) throw input_error("role: bad subdivision " + text);
    return {RoleKind::subdivision, num(12, sep), num(sep + 1, text.size())};
  }
  throw input_error("role: unknown role " + text);
}

LabeledGadget build_p5_gadget(const Hypergraph& h) {
  if (!is_normalized(h))
    throw std::invalid_argument(
        "gadget: input must be normalized (>= 2 nonempty hyperedges, the last one = Q)");
  int m = h.element_count();
  int n = h.hyperedge_count();

  LabeledGadget out;
  out.kind = GadgetKind::p5;
  out.source = h;
  GraphBuilder b;
  auto add = [&](VertexRole role) {
    std::string id = role.vertex_id();
    b.add_vertex(id);
    out.roles.emplace(id, role);
    return id;
  };

  add({RoleKind::v, 0, 0});
  add({RoleKind::w, 0, 0});
  add({RoleKind::star, 0, 0});
  add({RoleKind::u1, 0, 0});
  add({RoleKind::u2, 0, 0});
  for (int j = 1; j <= n; ++j) add({RoleKind::hyperedge, 0, j});
  for (int j = 1; j <= n; ++j) add({RoleKind::hyperedge_copy, 0, j});
  for (int i = 1; i <= m; ++i) add({RoleKind::element, i, 0});
  for (int j = 1; j <= n; ++j)
    for (int idx : h.hyperedges[static_cast<std::size_t>(j - 1)])
      add({RoleKind::subdivision, idx + 1, j});

  auto S = [](int j) { return "S" + std::to_string(j); };
  auto Sp = [](int j) { return "Sp" + std::to_string(j); };
  auto q = [](int i) { return "q" + std::to_string(i); };
  auto sub = [](int i, int j) { return "q" + std::to_string(i) + "_" + std::to_string(j); };

  b.add_edge("u1", "v").add_edge("u2", "v");
  b.add_edge("qstar", "u1").add_edge("qstar", "u2");
  for (int j = 1; j <= n; ++j) {
    b.add_edge("u1", S(j)).add_edge("u2", S(j));
    b.add_edge("w", Sp(j));
    for (int k = 1; k <= n; ++k) b.add_edge(S(j), Sp(k));
    for (int idx : h.hyperedges[static_cast<std::size_t>(j - 1)]) {
      int i = idx + 1;
      b.add_edge(q(i), sub(i, j));      // subdivided incidence, element side
      b.add_edge(sub(i, j), S(j));      // subdivided incidence, hyperedge side
      b.add_edge(q(i), Sp(j));          // direct incidence into the copy layer
      b.add_edge("qstar", sub(i, j));
    }
  }
  out.graph = b.build();
  return out;
}

LabeledGadget build_c6_gadget(const Hypergraph& h) {
  LabeledGadget out = build_p5_gadget(h);
  out.kind = GadgetKind::c6;
  out.graph = out.graph.without_vertices({"qstar", "u2"}).with_vertex("x")
                  .with_edge("v", "x")
                  .with_edge("w", "x");
  out.roles.erase("qstar");
  out.roles.erase("u2");
  out.roles.emplace("x", VertexRole{RoleKind::x, 0, 0});
  return out;
}

LabeledGadget build_p6_gadget(const Hypergraph& h) {
  LabeledGadget out = build_c6_gadget(h);
  out.kind = GadgetKind::p6;
  out.graph = out.graph.without_edge("v", "x");
  return out;
}

namespace {

// class index per role for the colouring -> witness direction; elements go
// to the Q1 side class or the Q2 side class
int witness_class_of(const LabeledGadget& gadget, const TwoColouring& c,
                     const VertexRole& role) {
  switch (role.kind) {
    case RoleKind::v:
      return 1;
    case RoleKind::star:
    case RoleKind::u1:
    case RoleKind::u2:
      return 2;
    case RoleKind::hyperedge:
    case RoleKind::subdivision:
      return 3;
    case RoleKind::hyperedge_copy:
      return 4;
    case RoleKind::w:
      return 5;
    case RoleKind::x:
      return 6;
    default: {
      const auto& id = gadget.source.elements[static_cast<std::size_t>(role.i - 1)];
      if (c.q1.count(id)) return 3;
      if (c.q2.count(id)) return 4;
      throw std::invalid_argument("witness_class_of: element " + id + " uncoloured");
    }
  }
}

WitnessStructure colouring_witness(const LabeledGadget& gadget, const TwoColouring& c,
                                   bool cycle) {
  if (!check_colouring(gadget.source, c))
    throw std::invalid_argument("gadget: not a valid 2-colouring of the source hypergraph");
  WitnessStructure ws{cycle ? PatternSpec::cycle(6) : PatternSpec::path(5), {}};
  std::string prefix = cycle ? "c" : "p";
  for (const auto& [id, role] : gadget.roles) {
    int cls = witness_class_of(gadget, c, role);
    ws.classes[prefix + std::to_string(cls)].insert(id);
  }
  return ws;
}

}  // namespace

WitnessStructure colouring_to_p5_witness(const LabeledGadget& gadget, const TwoColouring& c) {
  if (gadget.kind != GadgetKind::p5)
    throw std::invalid_argument("colouring_to_p5_witness: not a P5 gadget");
  return colouring_witness(gadget, c, false);
}

WitnessStructure colouring_to_c6_witness(const LabeledGadget& gadget, const TwoColouring& c) {
  if (gadget.kind != GadgetKind::c6)
    throw std::invalid_argument("colouring_to_c6_witness: not a C6 gadget");
  return colouring_witness(gadget, c, true);
}

TwoColouring p5_witness_to_colouring(const LabeledGadget& gadget, const WitnessStructure& ws) {
  if (gadget.kind != GadgetKind::p5)
    throw std::invalid_argument("p5_witness_to_colouring: not a P5 gadget");
  if (!(ws.pattern == PatternSpec::path(5)))
    throw extraction_error("extraction: witness pattern is not P5");
  VerifyResult vr = verify_witness(gadget.graph, ws);
  if (!vr) throw extraction_error("extraction: invalid witness: " + vr.reason);

  const std::set<std::string>& front = ws.classes.at("p1");
  const std::set<std::string>& back = ws.classes.at("p5");
  bool forward = front == std::set<std::string>{"v"} && back == std::set<std::string>{"w"};
  bool reversed = front == std::set<std::string>{"w"} && back == std::set<std::string>{"v"};
  if (!forward && !reversed)
    throw extraction_error("extraction: endpoint classes must be {v} and {w}");
  // reorienting a reversed witness swaps p2 with p4 and fixes p3
  const auto& side1 = ws.classes.at("p3");
  const auto& side2 = ws.classes.at(forward ? "p4" : "p2");

  TwoColouring c;
  for (int i = 1; i <= gadget.source.element_count(); ++i) {
    std::string vid = "q" + std::to_string(i);
    const auto& element = gadget.source.elements[static_cast<std::size_t>(i - 1)];
    if (side1.count(vid))
      c.q1.insert(element);
    else if (side2.count(vid))
      c.q2.insert(element);
    else
      throw std::logic_error("extraction: element vertex " + vid +
                             " escaped the middle classes of a verified witness");
  }
  if (!check_colouring(gadget.source, c))
    throw std::logic_error("extraction: extracted colouring fails validation");
  return c;
}

std::string gadget_to_json(const LabeledGadget& gadget) {
  ordered_json j;
  j["vertices"] = gadget.graph.vertex_names();
  auto edges = ordered_json::array();
  for (const auto& [u, v] : gadget.graph.edge_list()) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  ordered_json roles;
  for (const auto& id : gadget.graph.vertex_names()) roles[id] = gadget.roles.at(id).encode();
  j["roles"] = std::move(roles);
  ordered_json source;
  source["elements"] = gadget.source.elements;
  auto hyperedges = ordered_json::array();
  for (int k = 0; k < gadget.source.hyperedge_count(); ++k)
    hyperedges.push_back(gadget.source.hyperedge_names(k));
  source["hyperedges"] = std::move(hyperedges);
  j["source"] = std::move(source);
  return j.dump(2) + "\n";
}

LabeledGadget gadget_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw input_error(std::string("gadget: invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("roles") || !j.contains("source") ||
      !j["roles"].is_object())
    throw input_error("gadget: expected graph JSON with roles and source");
  Graph graph = graph_from_json(text);
  Hypergraph source = hypergraph_from_json(j["source"].dump());

  std::map<std::string, VertexRole> roles;
  bool has_star = false, has_x = false;
  for (const auto& [id, enc] : j["roles"].items()) {
    if (!enc.is_string()) throw input_error("gadget: role values must be strings");
    VertexRole role = VertexRole::decode(enc.get<std::string>());
    if (role.vertex_id() != id)
      throw input_error("gadget: vertex " + id + " does not match its role " +
                        enc.get<std::string>());
    roles.emplace(id, role);
    has_star |= role.kind == RoleKind::star;
    has_x |= role.kind == RoleKind::x;
  }

  GadgetKind kind;
  if (has_star && !has_x)
    kind = GadgetKind::p5;
  else if (has_x && !has_star)
    kind = graph.has_edge("v", "x") ? GadgetKind::c6 : GadgetKind::p6;
  else
    throw input_error("gadget: roles do not describe a known gadget kind");

  LabeledGadget rebuilt;
  try {
    switch (kind) {
      case GadgetKind::p5:
        rebuilt = build_p5_gadget(source);
        break;
      case GadgetKind::c6:
        rebuilt = build_c6_gadget(source);
        break;
      default:
        rebuilt = build_p6_gadget(source);
        break;
    }
  } catch (const std::invalid_argument& e) {
    throw input_error(std::string("gadget: ") + e.what());
  }
  if (!(rebuilt.graph == graph) || rebuilt.roles != roles)
    throw input_error("gadget: graph and roles are inconsistent with the embedded source");
  return rebuilt;
}

std::string gadget_to_dot(const LabeledGadget& gadget) {
  std::map<std::string, std::string> fill;
  for (const auto& [id, role] : gadget.roles) {
    switch (role.kind) {
      case RoleKind::star:
        fill[id] = "gold";
        break;
      case RoleKind::u1:
      case RoleKind::u2:
        fill[id] = "orange";
        break;
      case RoleKind::v:
        fill[id] = "palegreen";
        break;
      case RoleKind::w:
        fill[id] = "salmon";
        break;
      case RoleKind::x:
        fill[id] = "plum";
        break;
      case RoleKind::element:
        fill[id] = "khaki";
        break;
      case RoleKind::hyperedge:
        fill[id] = "lightblue";
        break;
      case RoleKind::hyperedge_copy:
        fill[id] = "skyblue";
        break;
      default:
        fill[id] = "gray90";
        break;
    }
  }
  return graph_to_dot(gadget.graph, "gadget", fill);
}

}  // namespace ctract
