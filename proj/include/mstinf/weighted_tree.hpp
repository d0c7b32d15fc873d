#pragma once

#include "mstinf/tree.hpp"

namespace mstinf {

/// Tree with a positive weight per edge, aligned with tree.edges.
template <typename S>
struct WeightedTree {
  Tree tree;
  std::vector<S> weights;

  const S& weight(const Edge& e) const { return weights[tree.edge_index(e)]; }
};

template <typename S>
WeightedTree<S> make_weighted_tree(Tree t, std::vector<S> weights) {
  if (weights.size() != t.edges.size())
    throw std::invalid_argument("make_weighted_tree: one weight per edge");
  for (const S& w : weights)
    if (!(S(0) < w))
      throw std::invalid_argument("make_weighted_tree: weights must be positive");
  return {std::move(t), std::move(weights)};
}

/// Restricts the space's metric to the tree's edges.
template <typename S>
WeightedTree<S> induced_weighted_tree(const Tree& t, const MetricSpace<S>& space) {
  if (t.n != space.size())
    throw std::invalid_argument("induced_weighted_tree: vertex count mismatch");
  std::vector<S> w;
  w.reserve(t.edges.size());
  for (const Edge& e : t.edges) w.push_back(space.dist(e.u, e.v));
  return {t, std::move(w)};
}

template <typename S>
S total_weight(const WeightedTree<S>& wt) {
  S total(0);
  for (const S& w : wt.weights) total += w;
  return total;
}

}  // namespace mstinf
