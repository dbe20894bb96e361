#include "ctract/hypergraph.hpp"

#include <algorithm>
#include <map>

#include "json.hpp"

namespace ctract {

using nlohmann::json;
using nlohmann::ordered_json;

int Hypergraph::incidence_count() const {
  int total = 0;
  for (const auto& s : hyperedges) total += static_cast<int>(s.size());
  return total;
}

std::vector<std::string> Hypergraph::hyperedge_names(int j) const {
  std::vector<std::string> out;
  for (int i : hyperedges[static_cast<std::size_t>(j)])
    out.push_back(elements[static_cast<std::size_t>(i)]);
  return out;
}

Hypergraph make_hypergraph(const std::vector<std::string>& elements,
                           const std::vector<std::vector<std::string>>& hyperedges) {
  Hypergraph h;
  std::map<std::string, int> index;
  for (const auto& e : elements) {
    if (e.empty()) throw std::invalid_argument("hypergraph: empty element id");
    if (index.count(e)) throw std::invalid_argument("hypergraph: duplicate element " + e);
    index[e] = static_cast<int>(h.elements.size());
    h.elements.push_back(e);
  }
  for (const auto& s : hyperedges) {
    std::vector<int> members;
    for (const auto& e : s) {
      auto it = index.find(e);
      if (it == index.end())
        throw std::invalid_argument("hypergraph: hyperedge uses unknown element " + e);
      members.push_back(it->second);
    }
    std::sort(members.begin(), members.end());
    if (std::adjacent_find(members.begin(), members.end()) != members.end())
      throw std::invalid_argument("hypergraph: repeated element inside a hyperedge");
    h.hyperedges.push_back(std::move(members));
  }
  return h;
}

Hypergraph normalize(const Hypergraph& h) {
  if (h.element_count() < 2)
    throw std::invalid_argument("normalize: need at least two elements");
  for (const auto& s : h.hyperedges)
    if (s.empty()) throw std::invalid_argument("normalize: empty hyperedge");
  Hypergraph out = h;
  std::vector<int> full(static_cast<std::size_t>(h.element_count()));
  for (int i = 0; i < h.element_count(); ++i) full[static_cast<std::size_t>(i)] = i;
  out.hyperedges.push_back(full);
  if (out.hyperedge_count() < 2) out.hyperedges.push_back(full);
  return out;
}

bool is_normalized(const Hypergraph& h) {
  if (h.element_count() < 2 || h.hyperedge_count() < 2) return false;
  for (const auto& s : h.hyperedges)
    if (s.empty()) return false;
  return static_cast<int>(h.hyperedges.back().size()) == h.element_count();
}

namespace {

bool valid_assignment(const Hypergraph& h, const std::vector<int>& side) {
  int c1 = 0, c2 = 0;
  for (int s : side) (s == 0 ? c1 : c2)++;
  if (c1 == 0 || c2 == 0) return false;
  for (const auto& edge : h.hyperedges) {
    bool hit1 = false, hit2 = false;
    for (int i : edge) (side[static_cast<std::size_t>(i)] == 0 ? hit1 : hit2) = true;
    if (!hit1 || !hit2) return false;
  }
  return true;
}

TwoColouring to_colouring(const Hypergraph& h, const std::vector<int>& side) {
  TwoColouring c;
  for (int i = 0; i < h.element_count(); ++i) {
    const auto& id = h.elements[static_cast<std::size_t>(i)];
    if (side[static_cast<std::size_t>(i)] == 0)
      c.q1.insert(id);
    else
      c.q2.insert(id);
  }
  return c;
}

}  // namespace

std::optional<TwoColouring> is_two_colourable(const Hypergraph& h) {
  int m = h.element_count();
  if (m < 2) return std::nullopt;
  // side[0] pinned to 1; the remaining m-1 element sides are scanned in
  // lexicographic order, most significant bit = second element
  std::vector<int> side(static_cast<std::size_t>(m), 0);
  for (long mask = 0; mask < (1L << (m - 1)); ++mask) {
    for (int i = 1; i < m; ++i)
      side[static_cast<std::size_t>(i)] = (mask >> (m - 1 - i)) & 1;
    if (valid_assignment(h, side)) return to_colouring(h, side);
  }
  return std::nullopt;
}

bool check_colouring(const Hypergraph& h, const TwoColouring& c) {
  std::vector<int> side(static_cast<std::size_t>(h.element_count()), -1);
  std::map<std::string, int> index;
  for (int i = 0; i < h.element_count(); ++i)
    index[h.elements[static_cast<std::size_t>(i)]] = i;
  for (const auto& id : c.q1) {
    auto it = index.find(id);
    if (it == index.end()) return false;
    side[static_cast<std::size_t>(it->second)] = 0;
  }
  for (const auto& id : c.q2) {
    auto it = index.find(id);
    if (it == index.end()) return false;
    if (side[static_cast<std::size_t>(it->second)] == 0) return false;  // overlap
    side[static_cast<std::size_t>(it->second)] = 1;
  }
  for (int s : side)
    if (s == -1) return false;  // not covered
  return valid_assignment(h, side);
}

std::string hypergraph_to_json(const Hypergraph& h) {
  ordered_json j;
  j["elements"] = h.elements;
  auto edges = ordered_json::array();
  for (int k = 0; k < h.hyperedge_count(); ++k) edges.push_back(h.hyperedge_names(k));
  j["hyperedges"] = std::move(edges);
  return j.dump(2) + "\n";
}

Hypergraph hypergraph_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw input_error(std::string("hypergraph: invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("elements") || !j.contains("hyperedges"))
    throw input_error("hypergraph: expected an object with elements and hyperedges");
  if (!j["elements"].is_array() || !j["hyperedges"].is_array())
    throw input_error("hypergraph: elements and hyperedges must be arrays");
  std::vector<std::string> elements;
  std::vector<std::vector<std::string>> hyperedges;
  for (const auto& e : j["elements"]) {
    if (!e.is_string()) throw input_error("hypergraph: element ids must be strings");
    elements.push_back(e.get<std::string>());
  }
  for (const auto& s : j["hyperedges"]) {
    if (!s.is_array()) throw input_error("hypergraph: each hyperedge must be an array");
    std::vector<std::string> members;
    for (const auto& e : s) {
      if (!e.is_string()) throw input_error("hypergraph: hyperedge members must be strings");
      members.push_back(e.get<std::string>());
    }
    hyperedges.push_back(std::move(members));
  }
  try {
    return make_hypergraph(elements, hyperedges);
  } catch (const std::invalid_argument& e) {
    throw input_error(e.what());
  }
}

std::string colouring_to_json(const Hypergraph& h, const TwoColouring& c) {
  ordered_json j;
  std::vector<std::string> a, b;
  for (const auto& e : h.elements) {
    if (c.q1.count(e)) a.push_back(e);
    if (c.q2.count(e)) b.push_back(e);
  }
  j["q1"] = a;
  j["q2"] = b;
  return j.dump(2) + "\n";
}

TwoColouring colouring_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw input_error(std::string("colouring: invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("q1") || !j.contains("q2") ||
      !j["q1"].is_array() || !j["q2"].is_array())
    throw input_error("colouring: expected an object with arrays q1 and q2");
  TwoColouring c;
  for (const auto& e : j["q1"]) {
    if (!e.is_string()) throw input_error("colouring: element ids must be strings");
    c.q1.insert(e.get<std::string>());
  }
  for (const auto& e : j["q2"]) {
    if (!e.is_string()) throw input_error("colouring: element ids must be strings");
    c.q2.insert(e.get<std::string>());
  }
  return c;
}

}  // namespace ctract
