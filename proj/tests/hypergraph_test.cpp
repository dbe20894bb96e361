#include "ctract/hypergraph.hpp"

#include <cstdint>

#include "doctest.h"
#include "oracles.hpp"

using namespace ctract;

namespace {

// every family of distinct nonempty hyperedges over q1..qm with at most
// max_edges members, as Hypergraphs, by increasing subset masks
std::vector<Hypergraph> all_families(int m, int max_edges) {
  std::vector<std::string> elements;
  for (int i = 1; i <= m; ++i) elements.push_back("q" + std::to_string(i));
  int subsets = (1 << m) - 1;
  std::vector<std::vector<int>> families{{}};
  for (int size = 1; size <= max_edges; ++size) {
    std::vector<std::vector<int>> next;
    for (const auto& f : families)
      if (static_cast<int>(f.size()) == size - 1)
        for (int mask = f.empty() ? 1 : f.back() + 1; mask <= subsets; ++mask)
          next.push_back([&] {
            auto g = f;
            g.push_back(mask);
            return g;
          }());
    families.insert(families.end(), next.begin(), next.end());
  }
  std::vector<Hypergraph> out;
  for (const auto& f : families) {
    std::vector<std::vector<std::string>> edges;
    for (int mask : f) {
      std::vector<std::string> edge;
      for (int i = 0; i < m; ++i)
        if (mask >> i & 1) edge.push_back(elements[static_cast<std::size_t>(i)]);
      edges.push_back(edge);
    }
    out.push_back(make_hypergraph(elements, edges));
  }
  return out;
}

}  // namespace

TEST_CASE("make_hypergraph validates and sorts") {
  Hypergraph h = make_hypergraph({"b", "a"}, {{"b", "a"}});
  CHECK(h.element_count() == 2);
  CHECK(h.hyperedges[0] == std::vector<int>{0, 1});
  CHECK(h.hyperedge_names(0) == std::vector<std::string>{"b", "a"});
  CHECK(h.incidence_count() == 2);
  CHECK_THROWS_AS(make_hypergraph({"a", "a"}, {}), std::invalid_argument);
  CHECK_THROWS_AS(make_hypergraph({"a"}, {{"z"}}), std::invalid_argument);
  CHECK_THROWS_AS(make_hypergraph({"a", "b"}, {{"a", "a"}}), std::invalid_argument);
}

TEST_CASE("normalize always appends the full element set") {
  Hypergraph h = make_hypergraph({"q1", "q2"}, {{"q1"}});
  Hypergraph n = normalize(h);
  CHECK(n.hyperedge_count() == 2);
  CHECK(n.hyperedges.back() == std::vector<int>{0, 1});
  CHECK(is_normalized(n));
  CHECK_FALSE(is_normalized(h));

  // an empty family gains the full set twice so at least two hyperedges exist
  Hypergraph e = normalize(make_hypergraph({"q1", "q2"}, {}));
  CHECK(e.hyperedge_count() == 2);
  CHECK(e.hyperedges[0] == e.hyperedges[1]);
  CHECK(is_normalized(e));

  // normalizing twice keeps appending; duplicates of the full set are allowed
  Hypergraph nn = normalize(n);
  CHECK(nn.hyperedge_count() == 3);
  CHECK(is_normalized(nn));

  CHECK_THROWS_AS(normalize(make_hypergraph({"a"}, {})), std::invalid_argument);
  CHECK_THROWS_AS(normalize(make_hypergraph({"a", "b"}, {{}})), std::invalid_argument);
}

TEST_CASE("two-colourability matches subset enumeration on every small family") {
  for (int m = 2; m <= 4; ++m) {
    int checked = 0;
    for (const auto& h : all_families(m, m == 4 ? 2 : 3)) {
      Hypergraph n = normalize(h);
      auto mine = is_two_colourable(n);
      auto ref = oracle::brute_two_colourable(n);
      REQUIRE(mine.has_value() == ref.has_value());
      if (mine) {
        CHECK(*mine == *ref);
        CHECK(check_colouring(n, *mine));
      }
      ++checked;
    }
    CHECK(checked > 0);
  }
}

TEST_CASE("colouring conventions") {
  Hypergraph n = normalize(make_hypergraph({"q1", "q2", "q3"}, {{"q2", "q3"}, {"q1", "q2"}}));
  auto c = is_two_colourable(n);
  REQUIRE(c.has_value());
  CHECK(c->q1 == std::set<std::string>{"q1", "q3"});
  CHECK(c->q2 == std::set<std::string>{"q2"});

  // a singleton hyperedge can never meet both sides
  Hypergraph bad = normalize(make_hypergraph({"q1", "q2", "q3"}, {{"q1"}}));
  CHECK_FALSE(is_two_colourable(bad).has_value());
}

TEST_CASE("check_colouring rejects bad partitions") {
  Hypergraph n = normalize(make_hypergraph({"q1", "q2"}, {}));
  CHECK(check_colouring(n, {{"q1"}, {"q2"}}));
  CHECK_FALSE(check_colouring(n, {{"q1", "q2"}, {}}));        // one side empty
  CHECK_FALSE(check_colouring(n, {{"q1"}, {"q1", "q2"}}));    // overlap
  CHECK_FALSE(check_colouring(n, {{"q1"}, {}}));              // q2 unassigned
  CHECK_FALSE(check_colouring(n, {{"q1"}, {"zz"}}));          // unknown element
  Hypergraph s = normalize(make_hypergraph({"q1", "q2", "q3"}, {{"q2", "q3"}}));
  CHECK_FALSE(check_colouring(s, {{"q1"}, {"q2", "q3"}}));    // monochrome hyperedge
}

TEST_CASE("hypergraph json round trip") {
  Hypergraph h = normalize(make_hypergraph({"q1", "q2", "q3"}, {{"q2", "q3"}, {"q1", "q2"}}));
  std::string text = hypergraph_to_json(h);
  Hypergraph back = hypergraph_from_json(text);
  CHECK(back == h);
  CHECK(hypergraph_to_json(back) == text);
  CHECK_THROWS_AS(hypergraph_from_json("[]"), input_error);
  CHECK_THROWS_AS(hypergraph_from_json("{\"elements\":[\"a\",\"a\"],\"hyperedges\":[]}"),
                  input_error);
}

TEST_CASE("colouring json round trip") {
  Hypergraph h = normalize(make_hypergraph({"q1", "q2", "q3"}, {{"q2", "q3"}, {"q1", "q2"}}));
  TwoColouring c{{"q1", "q3"}, {"q2"}};
  std::string text = colouring_to_json(h, c);
  TwoColouring back = colouring_from_json(text);
  CHECK(back == c);
  // elements are listed in hypergraph order inside each side
  CHECK(text.find("\"q1\"") < text.find("\"q3\""));
  CHECK_THROWS_AS(colouring_from_json("{}"), input_error);
}
