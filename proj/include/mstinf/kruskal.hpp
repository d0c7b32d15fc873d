#pragma once

#include "mstinf/tree.hpp"

namespace mstinf {

/// Minimal spanning tree by greedy edge insertion in ascending distance
/// order. Equal distances are broken by lexicographic vertex pair, so the
/// result is a deterministic function of the distance table.
template <typename S>
Tree kruskal_mst(const MetricSpace<S>& space) {
  const int n = space.size();
  if (n < 1) throw std::invalid_argument("kruskal_mst: empty space");
  std::vector<Edge> all;
  all.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) all.push_back({u, v});
  std::sort(all.begin(), all.end(), [&](const Edge& a, const Edge& b) {
    if (space.dist(a.u, a.v) != space.dist(b.u, b.v))
      return space.dist(a.u, a.v) < space.dist(b.u, b.v);
    return a < b;
  });
  detail::UnionFind uf(n);
  std::vector<Edge> chosen;
  chosen.reserve(n - 1);
  for (const Edge& e : all) {
    if (uf.unite(e.u, e.v)) {
      chosen.push_back(e);
      if (static_cast<int>(chosen.size()) == n - 1) break;
    }
  }
  return make_tree(n, std::move(chosen));
}

}  // namespace mstinf
