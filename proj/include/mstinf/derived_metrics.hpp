#pragma once

#include <optional>

#include "mstinf/weighted_tree.hpp"

namespace mstinf {

/// Sum of edge weights along the tree path from v to w; zero when v == w.
/// This is the usual weighted path metric of the tree.
template <typename S>
S path_sum_distance(const WeightedTree<S>& wt, int v, int w) {
  if (v == w) return S(0);
  S total(0);
  for (const Edge& e : path(wt.tree, v, w)) total += wt.weight(e);
  return total;
}

/// Maximum edge weight along the tree path from v to w. The empty path has
/// maximum zero, so the distance of a point to itself is zero.
template <typename S>
S bottleneck_distance(const WeightedTree<S>& wt, int v, int w) {
  if (v == w) return S(0);
  S best(0);
  for (const Edge& e : path(wt.tree, v, w))
    if (best < wt.weight(e)) best = wt.weight(e);
  return best;
}

namespace detail {

// One rooted traversal fills a full row of either derived metric.
template <typename S, typename Step>
void fill_row_from_root(const WeightedTree<S>& wt, int root, Step step,
                        Mat<S>& out) {
  std::vector<char> visited(wt.tree.n, 0);
  std::vector<int> stack{root};
  visited[root] = 1;
  out(root, root) = S(0);
  while (!stack.empty()) {
    const int cur = stack.back();
    stack.pop_back();
    for (int nb : wt.tree.adj[cur])
      if (!visited[nb]) {
        visited[nb] = 1;
        out(root, nb) = step(out(root, cur), wt.weight(edge(cur, nb)));
        stack.push_back(nb);
      }
  }
}

}  // namespace detail

/// Full table of the path-sum metric.
template <typename S>
Mat<S> path_sum_matrix(const WeightedTree<S>& wt) {
  const int n = wt.tree.n;
  Mat<S> out(n, n);
  for (int root = 0; root < n; ++root)
    detail::fill_row_from_root(
        wt, root, [](const S& acc, const S& w) { return S(acc + w); }, out);
  return out;
}

/// Full table of the bottleneck metric. It is an ultrametric: every triple
/// satisfies d(v,w) <= max(d(v,u), d(u,w)).
template <typename S>
Mat<S> bottleneck_matrix(const WeightedTree<S>& wt) {
  const int n = wt.tree.n;
  Mat<S> out(n, n);
  for (int root = 0; root < n; ++root)
    detail::fill_row_from_root(
        wt, root, [](const S& acc, const S& w) { return acc < w ? w : acc; },
        out);
  return out;
}

enum class EnvelopeSide { Lower, Upper };

template <typename S>
struct EnvelopeViolation {
  EnvelopeSide side;
  int v = 0, w = 0;
  S metric_value{};
  S bound_value{};
};

template <typename S>
struct EnvelopeResult {
  bool inside = false;
  std::optional<EnvelopeViolation<S>> violation;  // first by (v, w), lex
};

/// Checks whether a metric lies between the tree's bottleneck metric
/// (below) and its path-sum metric (above), pairwise. For the first
/// offending pair the lower bound is reported before the upper.
template <typename S>
EnvelopeResult<S> in_tree_envelope(const MetricSpace<S>& space,
                                   const WeightedTree<S>& wt,
                                   Compare<S> cmp = default_compare<S>()) {
  if (space.size() != wt.tree.n)
    throw std::invalid_argument("in_tree_envelope: vertex count mismatch");
  const Mat<S> lo = bottleneck_matrix(wt);
  const Mat<S> hi = path_sum_matrix(wt);
  for (int v = 0; v < space.size(); ++v)
    for (int w = v + 1; w < space.size(); ++w) {
      if (!cmp.le(lo(v, w), space.dist(v, w)))
        return {false,
                EnvelopeViolation<S>{EnvelopeSide::Lower, v, w,
                                     space.dist(v, w), lo(v, w)}};
      if (!cmp.le(space.dist(v, w), hi(v, w)))
        return {false,
                EnvelopeViolation<S>{EnvelopeSide::Upper, v, w,
                                     space.dist(v, w), hi(v, w)}};
    }
  return {true, std::nullopt};
}

/// Convex blend lambda * bottleneck + (1 - lambda) * path-sum. Every blend
/// is a metric inside the tree's envelope, which makes it a convenient
/// generator of spaces for which the tree is minimal.
template <typename S>
MetricSpace<S> sample_envelope_metric(const WeightedTree<S>& wt, const S& lambda) {
  if (lambda < S(0) || S(1) < lambda)
    throw std::invalid_argument("sample_envelope_metric: lambda must be in [0,1]");
  const Mat<S> lo = bottleneck_matrix(wt);
  const Mat<S> hi = path_sum_matrix(wt);
  const int n = wt.tree.n;
  MetricSpace<S> out;
  out.dist.resize(n, n);
  for (int v = 0; v < n; ++v)
    for (int w = 0; w < n; ++w)
      out.dist(v, w) = lambda * lo(v, w) + (S(1) - lambda) * hi(v, w);
  return out;
}

}  // namespace mstinf
