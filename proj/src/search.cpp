#include "ctract/search.hpp"

#include <algorithm>
#include <cstring>

namespace ctract {

namespace {

constexpr int kMaxClasses = 31;

struct PatternData {
  int k = 0;
  std::vector<std::string> labels;           // class index -> pattern vertex id
  std::vector<std::uint32_t> adj;            // adjacency mask per class
  std::vector<std::vector<int>> dist;        // -1 = unreachable inside pattern
  std::vector<std::vector<std::uint32_t>> allow;  // [c][min(d,max_finite)]
  int max_finite = 0;
  std::uint32_t full_mask = 0;
  bool connected = true;
};

PatternData make_pattern_data(const PatternSpec& p) {
  PatternData pd;
  pd.k = p.order();
  if (pd.k > kMaxClasses)
    throw std::invalid_argument("search: patterns with more than 31 vertices are unsupported");
  const Graph& h = p.expanded();
  switch (p.kind()) {
    case PatternSpec::Kind::path:
      for (int i = 1; i <= pd.k; ++i) pd.labels.push_back("p" + std::to_string(i));
      break;
    case PatternSpec::Kind::cycle:
      for (int i = 1; i <= pd.k; ++i) pd.labels.push_back("c" + std::to_string(i));
      break;
    default:
      pd.labels = h.vertex_names();
      break;
  }
  pd.full_mask = (pd.k == 31) ? 0x7fffffffu : ((std::uint32_t{1} << pd.k) - 1);
  pd.adj.assign(static_cast<std::size_t>(pd.k), 0);
  for (int a = 0; a < pd.k; ++a)
    for (int b = 0; b < pd.k; ++b)
      if (a != b && h.has_edge(pd.labels[static_cast<std::size_t>(a)],
                               pd.labels[static_cast<std::size_t>(b)]))
        pd.adj[static_cast<std::size_t>(a)] |= std::uint32_t{1} << b;

  pd.dist.assign(static_cast<std::size_t>(pd.k),
                 std::vector<int>(static_cast<std::size_t>(pd.k), -1));
  for (int s = 0; s < pd.k; ++s) {
    auto& row = pd.dist[static_cast<std::size_t>(s)];
    row[static_cast<std::size_t>(s)] = 0;
    std::vector<int> queue{s};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int a = queue[head];
      std::uint32_t nb = pd.adj[static_cast<std::size_t>(a)];
      while (nb) {
        int b = __builtin_ctz(nb);
        nb &= nb - 1;
        if (row[static_cast<std::size_t>(b)] == -1) {
          row[static_cast<std::size_t>(b)] = row[static_cast<std::size_t>(a)] + 1;
          queue.push_back(b);
        }
      }
    }
  }
  for (const auto& row : pd.dist)
    for (int d : row) {
      if (d == -1)
        pd.connected = false;
      else
        pd.max_finite = std::max(pd.max_finite, d);
    }

  pd.allow.assign(static_cast<std::size_t>(pd.k),
                  std::vector<std::uint32_t>(static_cast<std::size_t>(pd.max_finite + 1), 0));
  for (int c = 0; c < pd.k; ++c)
    for (int d = 0; d <= pd.max_finite; ++d) {
      std::uint32_t m = 0;
      for (int b = 0; b < pd.k; ++b) {
        int hd = pd.dist[static_cast<std::size_t>(c)][static_cast<std::size_t>(b)];
        if (hd != -1 && hd <= d) m |= std::uint32_t{1} << b;
      }
      pd.allow[static_cast<std::size_t>(c)][static_cast<std::size_t>(d)] = m;
    }
  return pd;
}

struct Searcher {
  const Graph& g;
  const PatternData& pd;
  std::uint64_t max_nodes;
  std::uint64_t& nodes;

  int n;
  std::vector<std::vector<int>> gdist;
  std::vector<int> cls;                 // class per vertex, -1 unassigned
  std::vector<std::uint32_t> allowed;   // candidate class mask per vertex
  std::vector<VertexSet> members;
  std::vector<int> count;
  std::uint32_t singleton_mask = 0;
  std::vector<int> order;               // free vertices in assignment order
  std::vector<std::vector<std::uint32_t>> saved;

  Searcher(const Graph& graph, const PatternData& pattern, std::uint64_t budget,
           std::uint64_t& counter)
      : g(graph),
        pd(pattern),
        max_nodes(budget),
        nodes(counter),
        n(graph.order()),
        gdist(graph.distance_matrix()),
        cls(static_cast<std::size_t>(graph.order()), -1),
        allowed(static_cast<std::size_t>(graph.order()), pattern.full_mask),
        members(static_cast<std::size_t>(pattern.k), VertexSet(graph.order())),
        count(static_cast<std::size_t>(pattern.k), 0) {}

  bool place(int v, int c) {
    cls[static_cast<std::size_t>(v)] = c;
    members[static_cast<std::size_t>(c)].set(v);
    ++count[static_cast<std::size_t>(c)];
    bool single = (singleton_mask >> c) & 1;
    const auto& row = gdist[static_cast<std::size_t>(v)];
    const auto& allow_c = pd.allow[static_cast<std::size_t>(c)];
    for (int u = 0; u < n; ++u) {
      if (cls[static_cast<std::size_t>(u)] != -1) continue;
      std::uint32_t m = allowed[static_cast<std::size_t>(u)];
      int d = row[static_cast<std::size_t>(u)];
      if (d >= 0) m &= allow_c[static_cast<std::size_t>(std::min(d, pd.max_finite))];
      if (single) m &= ~(std::uint32_t{1} << c);
      allowed[static_cast<std::size_t>(u)] = m;
      if (!m) return false;
    }
    return feasible();
  }

  void unplace(int v, int c) {
    cls[static_cast<std::size_t>(v)] = -1;
    members[static_cast<std::size_t>(c)].reset(v);
    --count[static_cast<std::size_t>(c)];
  }

  // every still-empty class must have a candidate vertex left, and there
  // must be enough unassigned vertices to fill all empty classes
  bool feasible() const {
    std::uint32_t empty = 0;
    for (int c = 0; c < pd.k; ++c)
      if (count[static_cast<std::size_t>(c)] == 0) empty |= std::uint32_t{1} << c;
    if (!empty) return true;
    std::uint32_t reachable = 0;
    int free = 0;
    for (int u = 0; u < n; ++u)
      if (cls[static_cast<std::size_t>(u)] == -1) {
        reachable |= allowed[static_cast<std::size_t>(u)];
        ++free;
      }
    return (empty & ~reachable) == 0 && free >= __builtin_popcount(empty);
  }

  bool leaf_valid() const {
    for (int c = 0; c < pd.k; ++c)
      if (count[static_cast<std::size_t>(c)] == 0) return false;
    for (int c = 0; c < pd.k; ++c) {
      const VertexSet& mem = members[static_cast<std::size_t>(c)];
      if (g.reach_within(mem, mem.first()).count() != count[static_cast<std::size_t>(c)])
        return false;
    }
    for (int a = 0; a < pd.k; ++a) {
      std::uint32_t nb = pd.adj[static_cast<std::size_t>(a)] >> (a + 1) << (a + 1);
      while (nb) {
        int b = __builtin_ctz(nb);
        nb &= nb - 1;
        bool covered = false;
        const VertexSet& mem = members[static_cast<std::size_t>(a)];
        for (int v = mem.first(); v >= 0 && !covered; v = mem.next(v))
          covered = g.adj(v).intersects(members[static_cast<std::size_t>(b)]);
        if (!covered) return false;
      }
    }
    return true;
  }

  SearchStatus run(std::size_t pos) {
    if (pos == order.size())
      return leaf_valid() ? SearchStatus::found : SearchStatus::exhausted;
    int v = order[pos];
    std::uint32_t m = allowed[static_cast<std::size_t>(v)];
    while (m) {
      int c = __builtin_ctz(m);
      m &= m - 1;
      if (++nodes > max_nodes) return SearchStatus::budget_exceeded;
      saved[pos] = allowed;
      bool ok = place(v, c);
      if (ok) {
        SearchStatus r = run(pos + 1);
        if (r != SearchStatus::exhausted) return r;
      }
      allowed = saved[pos];
      unplace(v, c);
    }
    return SearchStatus::exhausted;
  }

  WitnessStructure witness(const PatternSpec& pattern) const {
    WitnessStructure ws{pattern, {}};
    for (int c = 0; c < pd.k; ++c) {
      auto& dst = ws.classes[pd.labels[static_cast<std::size_t>(c)]];
      const VertexSet& mem = members[static_cast<std::size_t>(c)];
      for (int v = mem.first(); v >= 0; v = mem.next(v)) dst.insert(g.name(v));
    }
    return ws;
  }
};

struct EngineResult {
  SearchStatus status;
  std::optional<WitnessStructure> witness;
};

// seeds are (vertex index, class) pairs applied before the search starts
EngineResult run_engine(const Graph& g, const PatternSpec& pattern, const PatternData& pd,
                        const std::vector<std::pair<int, int>>& seeds,
                        std::uint32_t singleton_mask, std::uint32_t first_free_mask,
                        std::uint64_t max_nodes, std::uint64_t& nodes) {
  Searcher s(g, pd, max_nodes, nodes);
  s.singleton_mask = singleton_mask;
  for (auto [v, c] : seeds) {
    int prev = s.cls[static_cast<std::size_t>(v)];
    if (prev == c) continue;
    if (prev != -1) return {SearchStatus::exhausted, std::nullopt};
    if (!((s.allowed[static_cast<std::size_t>(v)] >> c) & 1))
      return {SearchStatus::exhausted, std::nullopt};
    if (!s.place(v, c)) return {SearchStatus::exhausted, std::nullopt};
  }
  std::vector<int> free;
  for (int v = 0; v < s.n; ++v)
    if (s.cls[static_cast<std::size_t>(v)] == -1) free.push_back(v);
  std::sort(free.begin(), free.end(), [&](int a, int b) {
    int da = g.degree(a), db = g.degree(b);
    if (da != db) return da > db;
    return g.name(a) < g.name(b);
  });
  s.order = std::move(free);
  s.saved.assign(s.order.size(), {});
  if (!s.order.empty()) {
    auto& head = s.allowed[static_cast<std::size_t>(s.order.front())];
    head &= first_free_mask;
    if (!head) return {SearchStatus::exhausted, std::nullopt};
  }
  SearchStatus r = s.run(0);
  if (r == SearchStatus::found) return {r, s.witness(pattern)};
  return {r, std::nullopt};
}

std::uint32_t path_symmetry_mask(int l) {
  // endpoints of a path are interchangeable, so the first assigned vertex
  // can be confined to the lower half of the classes
  std::uint32_t m = 0;
  for (int c = 0; c <= (l - 1) / 2; ++c) m |= std::uint32_t{1} << c;
  return m;
}

}  // namespace

Outcome<WitnessStructure> contracts_to(const Graph& g, const PatternSpec& h,
                                       const SearchLimits& limits) {
  // contractions only shrink a graph, so a larger pattern is simply absent
  if (h.order() > g.order()) return Outcome<WitnessStructure>::no();
  PatternData pd = make_pattern_data(h);
  if (pd.connected && !g.connected()) return Outcome<WitnessStructure>::no();
  if (g.size() < h.expanded().size()) return Outcome<WitnessStructure>::no();

  std::uint32_t first_mask = pd.full_mask;
  if (h.kind() == PatternSpec::Kind::cycle) first_mask = 1;
  if (h.kind() == PatternSpec::Kind::path) first_mask = path_symmetry_mask(h.order());

  std::uint64_t nodes = 0;
  EngineResult r = run_engine(g, h, pd, {}, 0, first_mask, limits.max_nodes, nodes);
  switch (r.status) {
    case SearchStatus::found:
      return Outcome<WitnessStructure>::found(std::move(*r.witness));
    case SearchStatus::budget_exceeded:
      return Outcome<WitnessStructure>::budget();
    default:
      return Outcome<WitnessStructure>::no();
  }
}

Outcome<SuitablePair> find_suitable_pair(const Graph& g, int l, const SearchLimits& limits) {
  if (l < 3) throw std::invalid_argument("find_suitable_pair: path length must be >= 3");
  if (g.order() < l || !g.connected()) return Outcome<SuitablePair>::no();

  PatternSpec pattern = PatternSpec::path(l);
  PatternData pd = make_pattern_data(pattern);
  auto dist = g.distance_matrix();
  std::vector<std::string> names = g.vertex_names();
  std::uint32_t singletons = (std::uint32_t{1}) | (std::uint32_t{1} << (l - 1));

  std::uint64_t nodes = 0;
  for (std::size_t a = 0; a < names.size(); ++a) {
    for (std::size_t b = a + 1; b < names.size(); ++b) {
      int u = g.index_of(names[a]);
      int v = g.index_of(names[b]);
      int d = dist[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
      if (d < l - 1) continue;
      std::vector<std::pair<int, int>> seeds{{u, 0}, {v, l - 1}};
      const VertexSet& nu = g.adj(u);
      for (int x = nu.first(); x >= 0; x = nu.next(x)) seeds.push_back({x, 1});
      const VertexSet& nv = g.adj(v);
      for (int y = nv.first(); y >= 0; y = nv.next(y)) seeds.push_back({y, l - 2});
      EngineResult r = run_engine(g, pattern, pd, seeds, singletons, pd.full_mask,
                                  limits.max_nodes, nodes);
      if (r.status == SearchStatus::found)
        return Outcome<SuitablePair>::found({names[a], names[b], std::move(*r.witness)});
      if (r.status == SearchStatus::budget_exceeded) return Outcome<SuitablePair>::budget();
    }
  }
  return Outcome<SuitablePair>::no();
}

namespace {

struct DcsSearcher {
  const Graph& g;
  int n;
  VertexSet side1, side2, unassigned;
  const std::vector<int>& free;

  DcsSearcher(const Graph& graph, const std::vector<int>& free_vertices)
      : g(graph),
        n(graph.order()),
        side1(graph.order()),
        side2(graph.order()),
        unassigned(graph.order()),
        free(free_vertices) {}

  bool side_alive(const VertexSet& side) const {
    VertexSet pot = side;
    pot |= unassigned;
    VertexSet seen = g.reach_within(pot, side.first());
    return seen.contains_all(side);
  }

  bool connected_side(const VertexSet& side) const {
    return g.reach_within(side, side.first()).count() == side.count();
  }

  bool run(std::size_t i) {
    if (!side_alive(side1) || !side_alive(side2)) return false;
    if (i == free.size()) return connected_side(side1) && connected_side(side2);
    int v = free[i];
    unassigned.reset(v);
    side1.set(v);
    if (run(i + 1)) return true;
    side1.reset(v);
    side2.set(v);
    if (run(i + 1)) return true;
    side2.reset(v);
    unassigned.set(v);
    return false;
  }
};

}  // namespace

std::optional<TwoDCSSolution> solve_2dcs(const Graph& g, const std::set<std::string>& z1,
                                         const std::set<std::string>& z2) {
  if (z1.empty() || z2.empty())
    throw std::invalid_argument("solve_2dcs: terminal sets must be nonempty");
  for (const auto& id : z1)
    if (z2.count(id))
      throw std::invalid_argument("solve_2dcs: terminal sets overlap at " + id);

  std::vector<int> free;
  {
    std::set<std::string> terminals;
    terminals.insert(z1.begin(), z1.end());
    terminals.insert(z2.begin(), z2.end());
    for (const auto& id : g.vertex_names())
      if (!terminals.count(id)) free.push_back(g.index_of(id));
  }
  DcsSearcher s(g, free);
  for (const auto& id : z1) s.side1.set(g.index_of(id));
  for (const auto& id : z2) s.side2.set(g.index_of(id));
  for (int v : free) s.unassigned.set(v);
  if (!s.run(0)) return std::nullopt;
  TwoDCSSolution sol;
  for (int v = s.side1.first(); v >= 0; v = s.side1.next(v)) sol.a1.insert(g.name(v));
  for (int v = s.side2.first(); v >= 0; v = s.side2.next(v)) sol.a2.insert(g.name(v));
  return sol;
}

std::optional<WitnessStructure> p4_contractible(const Graph& g) {
  std::vector<std::string> names = g.vertex_names();
  for (std::size_t a = 0; a < names.size(); ++a) {
    for (std::size_t b = a + 1; b < names.size(); ++b) {
      const std::string& u = names[a];
      const std::string& v = names[b];
      int iu = g.index_of(u);
      int iv = g.index_of(v);
      if (g.adjacent(iu, iv)) continue;
      if (g.adj(iu).none() || g.adj(iv).none()) continue;
      if (g.adj(iu).intersects(g.adj(iv))) continue;
      Graph rest = g.without_vertices({u, v});
      auto sol = solve_2dcs(rest, g.neighbor_names(u), g.neighbor_names(v));
      if (!sol) continue;
      // a cross edge between the middle classes is automatic when g is
      // connected; for disconnected inputs the candidate must be discarded
      bool linked = false;
      for (const auto& x : sol->a1) {
        for (const auto& y : sol->a2)
          if (g.has_edge(x, y)) {
            linked = true;
            break;
          }
        if (linked) break;
      }
      if (!linked) continue;
      WitnessStructure ws{PatternSpec::path(4), {}};
      ws.classes["p1"] = {u};
      ws.classes["p2"] = sol->a1;
      ws.classes["p3"] = sol->a2;
      ws.classes["p4"] = {v};
      return ws;
    }
  }
  return std::nullopt;
}

bool c3_contractible(const Graph& g) {
  return g.order() >= 1 && g.connected() && g.size() >= g.order();
}

Outcome<int> cyclicity(const Graph& g, const SearchLimits& limits) {
  for (int k = g.order(); k >= 3; --k) {
    Outcome<WitnessStructure> r = contracts_to(g, PatternSpec::cycle(k), limits);
    if (r.is_found()) return Outcome<int>::found(k);
    if (r.is_budget()) return Outcome<int>::budget();
  }
  return Outcome<int>::found(0);
}

}  // namespace ctract
