#include "ctract/graph.hpp"

#include <algorithm>
#include <cctype>
#include <queue>

namespace ctract {

GraphBuilder& GraphBuilder::add_vertex(const std::string& id) {
  if (id.empty()) throw std::invalid_argument("add_vertex: empty vertex id");
  if (index_.count(id)) throw std::invalid_argument("add_vertex: duplicate vertex id " + id);
  index_[id] = static_cast<int>(names_.size());
  names_.push_back(id);
  return *this;
}

GraphBuilder& GraphBuilder::add_edge(const std::string& u, const std::string& v) {
  auto iu = index_.find(u);
  auto iv = index_.find(v);
  if (iu == index_.end()) throw std::invalid_argument("add_edge: unknown vertex " + u);
  if (iv == index_.end()) throw std::invalid_argument("add_edge: unknown vertex " + v);
  if (iu->second == iv->second) throw std::invalid_argument("add_edge: self-loop at " + u);
  auto e = std::minmax(iu->second, iv->second);
  if (!edges_.insert({e.first, e.second}).second)
    throw std::invalid_argument("add_edge: duplicate edge " + u + "," + v);
  return *this;
}

Graph GraphBuilder::build() const {
  Graph g;
  g.names_ = names_;
  g.index_ = index_;
  g.adj_.assign(names_.size(), VertexSet(static_cast<int>(names_.size())));
  for (auto [a, b] : edges_) {
    g.adj_[static_cast<std::size_t>(a)].set(b);
    g.adj_[static_cast<std::size_t>(b)].set(a);
  }
  g.edge_count_ = static_cast<int>(edges_.size());
  return g;
}

int Graph::index_of(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw std::invalid_argument("unknown vertex id " + id);
  return it->second;
}

std::optional<int> Graph::find(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool Graph::has_edge(const std::string& u, const std::string& v) const {
  auto iu = find(u);
  auto iv = find(v);
  if (!iu || !iv) return false;
  return adjacent(*iu, *iv);
}

std::vector<std::string> Graph::vertex_names() const {
  std::vector<std::string> out;
  out.reserve(names_.size());
  for (const auto& [id, i] : index_) out.push_back(id);
  return out;
}

std::vector<std::pair<std::string, std::string>> Graph::edge_list() const {
  std::vector<std::pair<std::string, std::string>> out;
  out.reserve(static_cast<std::size_t>(edge_count_));
  for (int i = 0; i < order(); ++i) {
    for (int j = adj_[static_cast<std::size_t>(i)].next(i); j >= 0;
         j = adj_[static_cast<std::size_t>(i)].next(j)) {
      auto p = std::minmax(names_[static_cast<std::size_t>(i)],
                           names_[static_cast<std::size_t>(j)]);
      out.push_back(p);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::set<std::string> Graph::neighbor_names(const std::string& id) const {
  int i = index_of(id);
  std::set<std::string> out;
  const VertexSet& a = adj_[static_cast<std::size_t>(i)];
  for (int j = a.first(); j >= 0; j = a.next(j)) out.insert(names_[static_cast<std::size_t>(j)]);
  return out;
}

namespace {

// strip a "~<count>" suffix; returns {base, count}, count 1 when absent
std::pair<std::string, long> split_merge_suffix(const std::string& id) {
  auto pos = id.rfind('~');
  if (pos == std::string::npos || pos + 1 == id.size()) return {id, 1};
  long c = 0;
  for (std::size_t k = pos + 1; k < id.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(id[k]))) return {id, 1};
    c = c * 10 + (id[k] - '0');
  }
  return {id.substr(0, pos), c};
}

}  // namespace

Graph Graph::contract_edge(const std::string& u, const std::string& v) const {
  int iu = index_of(u);
  int iv = index_of(v);
  if (iu == iv) throw std::invalid_argument("contract_edge: u and v coincide");
  if (!adjacent(iu, iv)) throw std::invalid_argument("contract_edge: " + u + v + " is not an edge");

  std::string base = split_merge_suffix(std::min(u, v)).first;
  long total = split_merge_suffix(u).second + split_merge_suffix(v).second;
  std::string merged = base + "~" + std::to_string(total);
  while (index_.count(merged) && merged != u && merged != v)
    merged = base + "~" + std::to_string(++total);

  GraphBuilder b;
  for (const auto& id : names_)
    if (id != u && id != v) b.add_vertex(id);
  b.add_vertex(merged);
  for (int i = 0; i < order(); ++i) {
    if (i == iu || i == iv) continue;
    const VertexSet& a = adj_[static_cast<std::size_t>(i)];
    for (int j = a.next(i); j >= 0; j = a.next(j)) {
      if (j == iu || j == iv) continue;
      b.add_edge(names_[static_cast<std::size_t>(i)], names_[static_cast<std::size_t>(j)]);
    }
  }
  VertexSet nb = adj_[static_cast<std::size_t>(iu)];
  nb |= adj_[static_cast<std::size_t>(iv)];
  nb.reset(iu);
  nb.reset(iv);
  for (int j = nb.first(); j >= 0; j = nb.next(j))
    b.add_edge(merged, names_[static_cast<std::size_t>(j)]);
  return b.build();
}

Graph Graph::subdivide_edge(const std::string& u, const std::string& v) const {
  int iu = index_of(u);
  int iv = index_of(v);
  if (!adjacent(iu, iv)) throw std::invalid_argument("subdivide_edge: " + u + v + " is not an edge");
  auto ends = std::minmax(u, v);
  std::string z = ends.first + ":" + ends.second;
  while (index_.count(z)) z += "'";
  GraphBuilder b;
  for (const auto& id : names_) b.add_vertex(id);
  b.add_vertex(z);
  for (const auto& [a, c] : edge_list())
    if (!(a == ends.first && c == ends.second)) b.add_edge(a, c);
  b.add_edge(u, z);
  b.add_edge(z, v);
  return b.build();
}

Graph Graph::quotient(
    const std::vector<std::pair<std::string, std::set<std::string>>>& parts) const {
  std::vector<int> part_of(static_cast<std::size_t>(order()), -1);
  GraphBuilder b;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    const auto& [label, members] = parts[p];
    if (members.empty()) throw std::invalid_argument("quotient: class " + label + " is empty");
    b.add_vertex(label);
    for (const auto& id : members) {
      int i = index_of(id);
      if (part_of[static_cast<std::size_t>(i)] != -1)
        throw std::invalid_argument("quotient: vertex " + id + " appears in two classes");
      part_of[static_cast<std::size_t>(i)] = static_cast<int>(p);
    }
  }
  for (int i = 0; i < order(); ++i)
    if (part_of[static_cast<std::size_t>(i)] == -1)
      throw std::invalid_argument("quotient: vertex " + names_[static_cast<std::size_t>(i)] +
                                  " not covered by any class");
  std::set<std::pair<int, int>> cross;
  for (int i = 0; i < order(); ++i) {
    const VertexSet& a = adj_[static_cast<std::size_t>(i)];
    for (int j = a.next(i); j >= 0; j = a.next(j)) {
      int pi = part_of[static_cast<std::size_t>(i)];
      int pj = part_of[static_cast<std::size_t>(j)];
      if (pi != pj) cross.insert(std::minmax(pi, pj));
    }
  }
  for (auto [p, q] : cross) b.add_edge(parts[static_cast<std::size_t>(p)].first,
                                       parts[static_cast<std::size_t>(q)].first);
  return b.build();
}

Graph Graph::with_vertex(const std::string& id) const {
  GraphBuilder b;
  for (const auto& v : names_) b.add_vertex(v);
  b.add_vertex(id);
  for (const auto& [a, c] : edge_list()) b.add_edge(a, c);
  return b.build();
}

Graph Graph::with_edge(const std::string& u, const std::string& v) const {
  GraphBuilder b;
  for (const auto& id : names_) b.add_vertex(id);
  for (const auto& [a, c] : edge_list()) b.add_edge(a, c);
  b.add_edge(u, v);
  return b.build();
}

Graph Graph::without_edge(const std::string& u, const std::string& v) const {
  int iu = index_of(u);
  int iv = index_of(v);
  if (!adjacent(iu, iv)) throw std::invalid_argument("without_edge: " + u + v + " is not an edge");
  std::pair<std::string, std::string> drop{std::min(u, v), std::max(u, v)};
  GraphBuilder b;
  for (const auto& id : names_) b.add_vertex(id);
  for (const auto& e : edge_list())
    if (e != drop) b.add_edge(e.first, e.second);
  return b.build();
}

Graph Graph::without_vertices(const std::set<std::string>& drop) const {
  for (const auto& id : drop) (void)index_of(id);
  GraphBuilder b;
  for (const auto& id : names_)
    if (!drop.count(id)) b.add_vertex(id);
  for (const auto& [a, c] : edge_list())
    if (!drop.count(a) && !drop.count(c)) b.add_edge(a, c);
  return b.build();
}

std::optional<std::pair<std::set<std::string>, std::set<std::string>>>
Graph::bipartition() const {
  std::vector<int> side(static_cast<std::size_t>(order()), -1);
  for (const auto& [root_id, root] : index_) {
    if (side[static_cast<std::size_t>(root)] != -1) continue;
    side[static_cast<std::size_t>(root)] = 0;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      int i = q.front();
      q.pop();
      const VertexSet& a = adj_[static_cast<std::size_t>(i)];
      for (int j = a.first(); j >= 0; j = a.next(j)) {
        if (side[static_cast<std::size_t>(j)] == -1) {
          side[static_cast<std::size_t>(j)] = 1 - side[static_cast<std::size_t>(i)];
          q.push(j);
        } else if (side[static_cast<std::size_t>(j)] == side[static_cast<std::size_t>(i)]) {
          return std::nullopt;
        }
      }
    }
  }
  std::pair<std::set<std::string>, std::set<std::string>> out;
  for (int i = 0; i < order(); ++i) {
    if (side[static_cast<std::size_t>(i)] == 0)
      out.first.insert(names_[static_cast<std::size_t>(i)]);
    else
      out.second.insert(names_[static_cast<std::size_t>(i)]);
  }
  return out;
}

std::vector<std::vector<int>> Graph::distance_matrix() const {
  int n = order();
  std::vector<std::vector<int>> d(static_cast<std::size_t>(n),
                                  std::vector<int>(static_cast<std::size_t>(n), -1));
  for (int s = 0; s < n; ++s) {
    auto& row = d[static_cast<std::size_t>(s)];
    row[static_cast<std::size_t>(s)] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int i = q.front();
      q.pop();
      const VertexSet& a = adj_[static_cast<std::size_t>(i)];
      for (int j = a.first(); j >= 0; j = a.next(j)) {
        if (row[static_cast<std::size_t>(j)] == -1) {
          row[static_cast<std::size_t>(j)] = row[static_cast<std::size_t>(i)] + 1;
          q.push(j);
        }
      }
    }
  }
  return d;
}

std::optional<int> Graph::diameter() const {
  auto d = distance_matrix();
  int best = 0;
  for (int i = 0; i < order(); ++i)
    for (int j = i + 1; j < order(); ++j) {
      int x = d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (x == -1) return std::nullopt;
      best = std::max(best, x);
    }
  return best;
}

VertexSet Graph::reach_within(const VertexSet& mask, int from) const {
  VertexSet seen(order());
  if (!mask.test(from)) return seen;
  seen.set(from);
  std::vector<int> stack{from};
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    VertexSet nb = adj_[static_cast<std::size_t>(i)];
    nb &= mask;
    nb.subtract(seen);
    for (int j = nb.first(); j >= 0; j = nb.next(j)) {
      seen.set(j);
      stack.push_back(j);
    }
  }
  return seen;
}

bool Graph::connected() const {
  if (order() == 0) return true;
  VertexSet all(order());
  for (int i = 0; i < order(); ++i) all.set(i);
  return reach_within(all, 0).count() == order();
}

bool Graph::connected_subset(const std::set<std::string>& s) const {
  if (s.empty()) throw std::invalid_argument("connected_subset: empty set");
  VertexSet mask(order());
  for (const auto& id : s) mask.set(index_of(id));
  return reach_within(mask, mask.first()).count() == static_cast<int>(s.size());
}

Graph Graph::path(int n, const std::string& prefix) {
  if (n < 1) throw std::invalid_argument("path: order must be >= 1");
  GraphBuilder b;
  for (int i = 1; i <= n; ++i) b.add_vertex(prefix + std::to_string(i));
  for (int i = 1; i < n; ++i)
    b.add_edge(prefix + std::to_string(i), prefix + std::to_string(i + 1));
  return b.build();
}

Graph Graph::cycle(int n, const std::string& prefix) {
  if (n < 3) throw std::invalid_argument("cycle: order must be >= 3");
  GraphBuilder b;
  for (int i = 1; i <= n; ++i) b.add_vertex(prefix + std::to_string(i));
  for (int i = 1; i < n; ++i)
    b.add_edge(prefix + std::to_string(i), prefix + std::to_string(i + 1));
  b.add_edge(prefix + std::to_string(n), prefix + "1");
  return b.build();
}

Graph Graph::from_edges(
    const std::vector<std::string>& vertices,
    const std::vector<std::pair<std::string, std::string>>& edges) {
  GraphBuilder b;
  for (const auto& id : vertices) b.add_vertex(id);
  for (const auto& [u, v] : edges) b.add_edge(u, v);
  return b.build();
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  if (a.vertex_names() != b.vertex_names()) return false;
  return a.edge_list() == b.edge_list();
}

bool is_path_graph(const Graph& g) {
  if (g.order() == 0 || !g.connected()) return false;
  if (g.order() == 1) return g.size() == 0;
  int deg1 = 0;
  for (int i = 0; i < g.order(); ++i) {
    int d = g.degree(i);
    if (d == 1)
      ++deg1;
    else if (d != 2)
      return false;
  }
  return deg1 == 2 && g.size() == g.order() - 1;
}

bool is_cycle_graph(const Graph& g) {
  if (g.order() < 3 || !g.connected()) return false;
  for (int i = 0; i < g.order(); ++i)
    if (g.degree(i) != 2) return false;
  return g.size() == g.order();
}

bool isomorphic_small(const Graph& a, const Graph& b) {
  int n = a.order();
  if (n != b.order() || a.size() != b.size()) return false;
  if (n > 8) throw std::invalid_argument("isomorphic_small: order > 8");
  std::vector<int> da, db;
  for (int i = 0; i < n; ++i) da.push_back(a.degree(i));
  for (int i = 0; i < n; ++i) db.push_back(b.degree(i));
  {
    auto sa = da, sb = db;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  do {
    bool ok = true;
    for (int i = 0; ok && i < n; ++i) {
      if (da[static_cast<std::size_t>(i)] !=
          db[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])]) {
        ok = false;
        break;
      }
      for (int j = i + 1; j < n; ++j) {
        if (a.adjacent(i, j) != b.adjacent(perm[static_cast<std::size_t>(i)],
                                           perm[static_cast<std::size_t>(j)])) {
          ok = false;
          break;
        }
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace ctract
