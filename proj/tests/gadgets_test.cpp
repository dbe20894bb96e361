#include "ctract/gadgets.hpp"

#include <map>
#include <random>

#include "ctract/graph_io.hpp"
#include "ctract/search.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace ctract;

namespace {

Hypergraph sample_instance() {
  return normalize(make_hypergraph({"q1", "q2", "q3"}, {{"q2", "q3"}, {"q1", "q2"}}));
}

// group vertex ids by role class: u1, u2, v, w, x, qstar, S, Sp, Q, Qp
std::map<std::string, std::set<std::string>> role_classes(const LabeledGadget& g) {
  std::map<std::string, std::set<std::string>> out;
  for (const auto& [id, role] : g.roles) {
    switch (role.kind) {
      case RoleKind::star: out["qstar"].insert(id); break;
      case RoleKind::u1: out["u1"].insert(id); break;
      case RoleKind::u2: out["u2"].insert(id); break;
      case RoleKind::v: out["v"].insert(id); break;
      case RoleKind::w: out["w"].insert(id); break;
      case RoleKind::x: out["x"].insert(id); break;
      case RoleKind::element: out["Q"].insert(id); break;
      case RoleKind::hyperedge: out["S"].insert(id); break;
      case RoleKind::hyperedge_copy: out["Sp"].insert(id); break;
      case RoleKind::subdivision: out["Qp"].insert(id); break;
    }
  }
  return out;
}

int max_class_distance(const Graph& g, const std::vector<std::vector<int>>& dm,
                       const std::set<std::string>& a, const std::set<std::string>& b) {
  int best = -1;
  for (const auto& x : a)
    for (const auto& y : b)
      best = std::max(best, dm[static_cast<std::size_t>(g.index_of(x))]
                               [static_cast<std::size_t>(g.index_of(y))]);
  return best;
}

}  // namespace

TEST_CASE("role encoding round trips") {
  VertexRole sub{RoleKind::subdivision, 2, 3};
  CHECK(sub.vertex_id() == "q2_3");
  CHECK(sub.encode() == "Subdivision:2:3");
  CHECK(VertexRole::decode("Subdivision:2:3") == sub);
  CHECK(VertexRole::decode("Star").vertex_id() == "qstar");
  CHECK(VertexRole::decode("HyperedgeCopy:2").vertex_id() == "Sp2");
  CHECK(VertexRole::decode("Element:1").vertex_id() == "q1");
  CHECK_THROWS_AS(VertexRole::decode("Blob:1"), input_error);
  CHECK_THROWS_AS(VertexRole::decode("Element:0"), input_error);
}

TEST_CASE("sample instance gadget has the constructed shape") {
  LabeledGadget g = build_p5_gadget(sample_instance());
  CHECK(g.kind == GadgetKind::p5);
  CHECK(g.graph.order() == 21);
  CHECK(g.graph.size() == 50);

  // neighbourhoods, bullet by bullet
  CHECK(g.graph.neighbor_names("v") == std::set<std::string>{"u1", "u2"});
  CHECK(g.graph.neighbor_names("qstar") ==
        std::set<std::string>{"u1", "u2", "q1_2", "q1_3", "q2_1", "q2_2", "q2_3", "q3_1",
                              "q3_3"});
  CHECK(g.graph.neighbor_names("u1") ==
        std::set<std::string>{"v", "qstar", "S1", "S2", "S3"});
  CHECK(g.graph.neighbor_names("w") == std::set<std::string>{"Sp1", "Sp2", "Sp3"});
  // S1 = {q2,q3}: joined to all copies, both guards, its two subdivisions
  CHECK(g.graph.neighbor_names("S1") ==
        std::set<std::string>{"u1", "u2", "Sp1", "Sp2", "Sp3", "q2_1", "q3_1"});
  // Sp2 is the copy of S2 = {q1,q2}: all of S, w, and its elements directly
  CHECK(g.graph.neighbor_names("Sp2") ==
        std::set<std::string>{"S1", "S2", "S3", "w", "q1", "q2"});
  // q2 lies in every hyperedge: one subdivision and one copy per hyperedge
  CHECK(g.graph.neighbor_names("q2") ==
        std::set<std::string>{"q2_1", "q2_2", "q2_3", "Sp1", "Sp2", "Sp3"});
  // every subdivision vertex has exactly its element, its hyperedge, the hub
  CHECK(g.graph.neighbor_names("q3_1") == std::set<std::string>{"q3", "S1", "qstar"});

  auto classes = role_classes(g);
  CHECK(classes["S"] == std::set<std::string>{"S1", "S2", "S3"});
  CHECK(classes["Qp"].size() == 7);
  CHECK(classes.count("x") == 0);
}

TEST_CASE("gadget size formulas hold across instances") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> elems(2, 5), edges(0, 4);
  for (int trial = 0; trial < 30; ++trial) {
    int m = elems(rng);
    std::vector<std::string> names;
    for (int i = 1; i <= m; ++i) names.push_back("q" + std::to_string(i));
    std::vector<std::vector<std::string>> family;
    int count = edges(rng);
    for (int e = 0; e < count; ++e) {
      std::vector<std::string> edge;
      for (int i = 0; i < m; ++i)
        if (rng() % 2) edge.push_back(names[static_cast<std::size_t>(i)]);
      if (!edge.empty()) family.push_back(edge);
    }
    Hypergraph h = normalize(make_hypergraph(names, family));
    int n = h.hyperedge_count();
    int I = h.incidence_count();
    LabeledGadget p5 = build_p5_gadget(h);
    CHECK(p5.graph.order() == m + 2 * n + I + 5);
    CHECK(p5.graph.size() == n * n + 3 * n + 4 * I + 4);
    CHECK(p5.graph.connected());
    CHECK(p5.graph.bipartition().has_value());

    LabeledGadget c6 = build_c6_gadget(h);
    CHECK(c6.graph.order() == m + 2 * n + I + 4);
    CHECK(c6.graph.size() == n * n + 2 * n + 3 * I + 3);
    CHECK(c6.graph.has_edge("v", "x"));
    CHECK(c6.graph.has_edge("w", "x"));
    CHECK_FALSE(c6.graph.has_vertex("qstar"));
    CHECK_FALSE(c6.graph.has_vertex("u2"));

    LabeledGadget p6 = build_p6_gadget(h);
    CHECK(p6.graph.size() == c6.graph.size() - 1);
    CHECK_FALSE(p6.graph.has_edge("v", "x"));
    CHECK(p6.graph.has_edge("w", "x"));
  }
}

TEST_CASE("builders insist on normalized input") {
  Hypergraph raw = make_hypergraph({"q1", "q2"}, {{"q1"}});
  CHECK_THROWS_AS(build_p5_gadget(raw), std::invalid_argument);
  CHECK_THROWS_AS(build_c6_gadget(raw), std::invalid_argument);
  CHECK_THROWS_AS(build_p6_gadget(raw), std::invalid_argument);
}

TEST_CASE("sample instance distance profile") {
  LabeledGadget g = build_p5_gadget(sample_instance());
  auto dm = g.graph.distance_matrix();
  auto classes = role_classes(g);
  CHECK(g.graph.diameter() == 4);

  // frozen maximum distances between role classes
  const std::map<std::pair<std::string, std::string>, int> expected = {
      {{"u1", "u1"}, 0},    {{"u1", "u2"}, 2},   {{"u1", "v"}, 1},    {{"u1", "w"}, 3},
      {{"u1", "S"}, 1},     {{"u1", "Sp"}, 2},   {{"u1", "Q"}, 3},    {{"u1", "Qp"}, 2},
      {{"u1", "qstar"}, 1}, {{"u2", "u2"}, 0},   {{"u2", "v"}, 1},    {{"u2", "w"}, 3},
      {{"u2", "S"}, 1},     {{"u2", "Sp"}, 2},   {{"u2", "Q"}, 3},    {{"u2", "Qp"}, 2},
      {{"u2", "qstar"}, 1}, {{"v", "v"}, 0},     {{"v", "w"}, 4},     {{"v", "S"}, 2},
      {{"v", "Sp"}, 3},     {{"v", "Q"}, 4},     {{"v", "Qp"}, 3},    {{"v", "qstar"}, 2},
      {{"w", "w"}, 0},      {{"w", "S"}, 2},     {{"w", "Sp"}, 1},    {{"w", "Q"}, 2},
      {{"w", "Qp"}, 3},     {{"w", "qstar"}, 4}, {{"S", "S"}, 2},     {{"S", "Sp"}, 1},
      {{"S", "Q"}, 2},      {{"S", "Qp"}, 3},    {{"S", "qstar"}, 2}, {{"Sp", "Sp"}, 2},
      {{"Sp", "Q"}, 3},     {{"Sp", "Qp"}, 2},   {{"Sp", "qstar"}, 3},
      {{"Q", "Q"}, 2},      {{"Q", "Qp"}, 3},    {{"Q", "qstar"}, 2}, {{"Qp", "Qp"}, 2},
      {{"Qp", "qstar"}, 1}, {{"qstar", "qstar"}, 0}};
  for (const auto& [pair, want] : expected) {
    int got = max_class_distance(g.graph, dm, classes[pair.first], classes[pair.second]);
    CHECK_MESSAGE(got == want, pair.first, "-", pair.second, " expected ", want, " got ", got);
  }

  // the pairs at distance >= 4 are exactly v-w, qstar-w and v-q_i
  std::set<std::pair<std::string, std::string>> far;
  auto names = g.graph.vertex_names();
  for (std::size_t a = 0; a < names.size(); ++a)
    for (std::size_t b = a + 1; b < names.size(); ++b)
      if (dm[g.graph.index_of(names[a])][g.graph.index_of(names[b])] >= 4)
        far.insert({names[a], names[b]});
  CHECK(far == std::set<std::pair<std::string, std::string>>{
                   {"qstar", "w"}, {"q1", "v"}, {"q2", "v"}, {"q3", "v"}, {"v", "w"}});
}

TEST_CASE("sample instance bipartition matches the construction classes") {
  LabeledGadget g = build_p5_gadget(sample_instance());
  auto bp = g.graph.bipartition();
  REQUIRE(bp.has_value());
  auto classes = role_classes(g);
  std::set<std::string> a, b;
  for (const auto& id : classes["qstar"]) a.insert(id);
  for (const auto& id : classes["v"]) a.insert(id);
  for (const auto& id : classes["w"]) a.insert(id);
  for (const auto& id : classes["S"]) a.insert(id);
  for (const auto& id : classes["Q"]) a.insert(id);
  for (const auto& id : classes["u1"]) b.insert(id);
  for (const auto& id : classes["u2"]) b.insert(id);
  for (const auto& id : classes["Sp"]) b.insert(id);
  for (const auto& id : classes["Qp"]) b.insert(id);
  bool forward = bp->first == a && bp->second == b;
  bool reversed = bp->first == b && bp->second == a;
  CHECK((forward || reversed));
}

TEST_CASE("colouring to witness to colouring round trip") {
  LabeledGadget g = build_p5_gadget(sample_instance());
  auto c = is_two_colourable(g.source);
  REQUIRE(c.has_value());

  WitnessStructure ws = colouring_to_p5_witness(g, *c);
  auto check = verify_witness(g.graph, ws);
  REQUIRE_MESSAGE(check.ok, check.reason);
  CHECK(ws.classes.at("p1") == std::set<std::string>{"v"});
  CHECK(ws.classes.at("p2") == std::set<std::string>{"qstar", "u1", "u2"});
  CHECK(ws.classes.at("p5") == std::set<std::string>{"w"});
  CHECK(p5_witness_to_colouring(g, ws) == *c);

  // the swapped orientation of the colouring round trips as well
  TwoColouring swapped{c->q2, c->q1};
  WitnessStructure ws2 = colouring_to_p5_witness(g, swapped);
  REQUIRE(verify_witness(g.graph, ws2).ok);
  CHECK(p5_witness_to_colouring(g, ws2) == swapped);

  // a witness read in the reversed direction yields the swapped sides
  WitnessStructure rev{ws.pattern,
                       {{"p1", ws.classes.at("p5")},
                        {"p2", ws.classes.at("p4")},
                        {"p3", ws.classes.at("p3")},
                        {"p4", ws.classes.at("p2")},
                        {"p5", ws.classes.at("p1")}}};
  REQUIRE(verify_witness(g.graph, rev).ok);
  TwoColouring from_rev = p5_witness_to_colouring(g, rev);
  CHECK(check_colouring(g.source, from_rev));
}

TEST_CASE("c6 witness from a colouring verifies") {
  LabeledGadget g = build_c6_gadget(sample_instance());
  auto c = is_two_colourable(g.source);
  REQUIRE(c.has_value());
  WitnessStructure ws = colouring_to_c6_witness(g, *c);
  auto check = verify_witness(g.graph, ws);
  REQUIRE_MESSAGE(check.ok, check.reason);
  CHECK(ws.classes.at("c1") == std::set<std::string>{"v"});
  CHECK(ws.classes.at("c6") == std::set<std::string>{"x"});
  CHECK(ws.pattern == PatternSpec::cycle(6));
}

TEST_CASE("witness extraction rejects foreign witnesses") {
  LabeledGadget g = build_p5_gadget(sample_instance());
  auto c = is_two_colourable(g.source);
  REQUIRE(c.has_value());
  WitnessStructure ws = colouring_to_p5_witness(g, *c);

  WitnessStructure wrong = ws;
  wrong.pattern = PatternSpec::path(4);
  CHECK_THROWS_AS(p5_witness_to_colouring(g, wrong), extraction_error);

  wrong = ws;
  wrong.classes["p2"].erase("qstar");
  CHECK_THROWS_AS(p5_witness_to_colouring(g, wrong), extraction_error);

  // endpoints must be {v} and {w}
  wrong = ws;
  std::swap(wrong.classes.at("p1"), wrong.classes.at("p2"));
  CHECK_THROWS_AS(p5_witness_to_colouring(g, wrong), extraction_error);

  // handing over the wrong gadget kind is a caller error, not a failed match
  LabeledGadget c6 = build_c6_gadget(sample_instance());
  CHECK_THROWS_AS(p5_witness_to_colouring(c6, ws), std::invalid_argument);
}

TEST_CASE("engine witnesses on the gadget extract to valid colourings") {
  LabeledGadget g = build_p5_gadget(sample_instance());
  Outcome<SuitablePair> r = find_suitable_pair(g.graph, 5);
  REQUIRE(r.is_found());
  TwoColouring c = p5_witness_to_colouring(g, r.value->witness);
  CHECK(check_colouring(g.source, c));
}

TEST_CASE("gadget json round trips and tampering is caught") {
  for (auto kind : {GadgetKind::p5, GadgetKind::c6, GadgetKind::p6}) {
    LabeledGadget g = kind == GadgetKind::p5   ? build_p5_gadget(sample_instance())
                      : kind == GadgetKind::c6 ? build_c6_gadget(sample_instance())
                                               : build_p6_gadget(sample_instance());
    std::string text = gadget_to_json(g);
    LabeledGadget back = gadget_from_json(text);
    CHECK(back == g);
    CHECK(gadget_to_json(back) == text);
  }

  LabeledGadget g = build_p5_gadget(sample_instance());
  std::string text = gadget_to_json(g);
  // drop one edge: the rebuild from the embedded source no longer matches
  auto pos = text.find("[\n      \"S1\",\n      \"Sp1\"\n    ],\n");
  REQUIRE(pos != std::string::npos);
  std::string tampered = text;
  tampered.erase(pos, std::string("[\n      \"S1\",\n      \"Sp1\"\n    ],\n").size());
  CHECK_THROWS_AS(gadget_from_json(tampered), input_error);
  CHECK_THROWS_AS(gadget_from_json("{\"vertices\":[],\"edges\":[]}"), input_error);
}

TEST_CASE("gadget dot export colours the roles") {
  LabeledGadget g = build_c6_gadget(sample_instance());
  std::string dot = gadget_to_dot(g);
  CHECK(dot.find("\"x\"") != std::string::npos);
  CHECK(dot.find("fillcolor") != std::string::npos);
}

TEST_CASE("gadget files parse as plain graphs") {
  LabeledGadget g = build_p6_gadget(sample_instance());
  Graph plain = graph_from_json(gadget_to_json(g));
  CHECK(plain == g.graph);
}
