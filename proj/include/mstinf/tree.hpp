#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <ostream>
#include <vector>

#include "mstinf/metric_space.hpp"

namespace mstinf {

/// Unordered vertex pair, stored normalized with u < v.
struct Edge {
  int u = 0, v = 0;
  auto operator<=>(const Edge&) const = default;
};

inline Edge edge(int a, int b) {
  if (a == b) throw std::invalid_argument("edge: endpoints must differ");
  return a < b ? Edge{a, b} : Edge{b, a};
}

inline std::ostream& operator<<(std::ostream& os, const Edge& e) {
  return os << "{" << e.u << "," << e.v << "}";
}

namespace detail {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

}  // namespace detail

/// Spanning tree on vertices 0..n-1. Edges are kept sorted; adjacency lists
/// are sorted as well, so traversals are deterministic. Immutable by
/// convention: operations return new trees.
struct Tree {
  int n = 0;
  std::vector<Edge> edges;
  std::vector<std::vector<int>> adj;

  bool has_edge(const Edge& e) const {
    return std::binary_search(edges.begin(), edges.end(), e);
  }
  int edge_index(const Edge& e) const {
    const auto it = std::lower_bound(edges.begin(), edges.end(), e);
    if (it == edges.end() || *it != e)
      throw std::invalid_argument("not an edge of the tree");
    return static_cast<int>(it - edges.begin());
  }
};

/// Validates and builds: exactly n-1 distinct edges, acyclic, connected.
inline Tree make_tree(int n, std::vector<Edge> edges) {
  if (n < 1) throw std::invalid_argument("make_tree: n must be >= 1");
  if (static_cast<int>(edges.size()) != n - 1)
    throw std::invalid_argument("make_tree: a tree on n vertices has n-1 edges");
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw std::invalid_argument("make_tree: duplicate edge");
  detail::UnionFind uf(n);
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v >= n)
      throw std::invalid_argument("make_tree: vertex out of range");
    if (!uf.unite(e.u, e.v))
      throw std::invalid_argument("make_tree: edges contain a cycle");
  }
  Tree t;
  t.n = n;
  t.edges = std::move(edges);
  t.adj.assign(n, {});
  for (const Edge& e : t.edges) {
    t.adj[e.u].push_back(e.v);
    t.adj[e.v].push_back(e.u);
  }
  for (auto& nb : t.adj) std::sort(nb.begin(), nb.end());
  return t;
}

/// Edges of the unique simple path from v to w, in order. v must differ
/// from w; callers that want the empty-path convention handle v == w
/// themselves.
inline std::vector<Edge> path(const Tree& t, int v, int w) {
  if (v < 0 || v >= t.n || w < 0 || w >= t.n)
    throw std::invalid_argument("path: vertex out of range");
  if (v == w) throw std::invalid_argument("path: endpoints must differ");
  std::vector<int> parent(t.n, -1);
  std::vector<int> stack{v};
  parent[v] = v;
  while (!stack.empty()) {
    const int cur = stack.back();
    stack.pop_back();
    if (cur == w) break;
    for (int nb : t.adj[cur])
      if (parent[nb] == -1) {
        parent[nb] = cur;
        stack.push_back(nb);
      }
  }
  std::vector<Edge> out;
  for (int cur = w; cur != v; cur = parent[cur])
    out.push_back(edge(cur, parent[cur]));
  std::reverse(out.begin(), out.end());
  return out;
}

/// The two components of T with one edge removed.
struct CutPartition {
  std::vector<int> side1, side2;  // sorted; side1 holds the smaller endpoint
};

inline CutPartition cut_partition(const Tree& t, const Edge& e) {
  t.edge_index(e);  // throws if e is not an edge
  std::vector<char> visited(t.n, 0);
  std::vector<int> stack{e.u};
  visited[e.u] = 1;
  while (!stack.empty()) {
    const int cur = stack.back();
    stack.pop_back();
    for (int nb : t.adj[cur]) {
      if (cur == e.u && nb == e.v) continue;
      if (cur == e.v && nb == e.u) continue;
      if (!visited[nb]) {
        visited[nb] = 1;
        stack.push_back(nb);
      }
    }
  }
  CutPartition p;
  for (int i = 0; i < t.n; ++i) (visited[i] ? p.side1 : p.side2).push_back(i);
  return p;
}

/// Components of T with a whole edge set removed; their count exceeds the
/// number of distinct removed edges by one.
inline std::vector<std::vector<int>> cut_partition_set(
    const Tree& t, const std::vector<Edge>& removed) {
  std::vector<Edge> gone(removed);
  std::sort(gone.begin(), gone.end());
  gone.erase(std::unique(gone.begin(), gone.end()), gone.end());
  for (const Edge& e : gone) t.edge_index(e);

  const auto is_gone = [&](int a, int b) {
    return std::binary_search(gone.begin(), gone.end(), edge(a, b));
  };
  std::vector<char> visited(t.n, 0);
  std::vector<std::vector<int>> comps;
  for (int root = 0; root < t.n; ++root) {
    if (visited[root]) continue;
    std::vector<int> comp;
    std::vector<int> stack{root};
    visited[root] = 1;
    while (!stack.empty()) {
      const int cur = stack.back();
      stack.pop_back();
      comp.push_back(cur);
      for (int nb : t.adj[cur])
        if (!visited[nb] && !is_gone(cur, nb)) {
          visited[nb] = 1;
          stack.push_back(nb);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

/// T[e -> f]: removes e and inserts the vertex pair f. Valid exactly when
/// e lies on the path between f's endpoints; otherwise the result would
/// contain a cycle and the call throws.
inline Tree swap_edge(const Tree& t, const Edge& e, const Edge& f) {
  t.edge_index(e);
  if (f.u < 0 || f.v >= t.n)
    throw std::invalid_argument("swap_edge: vertex out of range");
  const auto route = path(t, f.u, f.v);
  if (std::find(route.begin(), route.end(), e) == route.end())
    throw std::invalid_argument(
        "swap_edge: replacement does not bridge the removed edge's cut; "
        "the result would contain a cycle");
  if (e == f) return t;
  std::vector<Edge> next;
  next.reserve(t.edges.size());
  for (const Edge& g : t.edges)
    if (g != e) next.push_back(g);
  next.push_back(f);
  return make_tree(t.n, std::move(next));
}

template <typename S>
S tree_length(const Tree& t, const MetricSpace<S>& space) {
  if (t.n != space.size())
    throw std::invalid_argument("tree_length: vertex count mismatch");
  S total(0);
  for (const Edge& e : t.edges) total += space.dist(e.u, e.v);
  return total;
}

/// Number of tree edges with endpoints on different sides of a partition.
inline int cross_edge_count(const Tree& t, const CutPartition& p) {
  std::vector<signed char> side(t.n, -1);
  std::size_t seen = 0;
  for (int i : p.side1) {
    if (i < 0 || i >= t.n || side[i] != -1)
      throw std::invalid_argument("cross_edge_count: invalid partition");
    side[i] = 0;
    ++seen;
  }
  for (int i : p.side2) {
    if (i < 0 || i >= t.n || side[i] != -1)
      throw std::invalid_argument("cross_edge_count: invalid partition");
    side[i] = 1;
    ++seen;
  }
  if (seen != static_cast<std::size_t>(t.n) || p.side1.empty() || p.side2.empty())
    throw std::invalid_argument("cross_edge_count: invalid partition");
  int count = 0;
  for (const Edge& e : t.edges)
    if (side[e.u] != side[e.v]) ++count;
  return count;
}

}  // namespace mstinf
