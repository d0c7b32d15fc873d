#pragma once

#include "mstinf/certify.hpp"

namespace mstinf {

enum class StepAction { Kept, Swapped };

/// One step of the exactification pass: the processed edge was either
/// already exact (Kept) or replaced by the cheapest pair bridging its cut
/// (Swapped). Side sizes describe the cut of the processed edge.
template <typename S>
struct ExactifyStep {
  int index = 0;
  Edge processed;
  StepAction action = StepAction::Kept;
  std::optional<Edge> removed;
  std::optional<std::pair<int, int>> inserted;
  int side1_size = 0, side2_size = 0;
  S length_before{};
  S length_after{};
};

template <typename S>
struct ExactifyTrace {
  std::vector<ExactifyStep<S>> steps;
  S initial_length{};
  S final_length{};
};

/// Replaces e by the cheapest pair bridging its cut; identity when e is
/// already exact. Never lengthens the tree.
template <typename S>
std::pair<Tree, ExactifyStep<S>> exactify_step(
    const MetricSpace<S>& space, const Tree& t, const Edge& e,
    Compare<S> cmp = default_compare<S>()) {
  const CutPartition cut = cut_partition(t, e);
  const auto best = set_distance(space, cut.side1, cut.side2);

  ExactifyStep<S> step;
  step.processed = e;
  step.side1_size = static_cast<int>(cut.side1.size());
  step.side2_size = static_cast<int>(cut.side2.size());
  step.length_before = tree_length(t, space);

  if (cmp.eq(space.dist(e.u, e.v), best.value)) {
    step.action = StepAction::Kept;
    step.length_after = step.length_before;
    return {t, step};
  }
  const Edge f = edge(best.witness.first, best.witness.second);
  Tree next = swap_edge(t, e, f);
  step.action = StepAction::Swapped;
  step.removed = e;
  step.inserted = best.witness;
  step.length_after = tree_length(next, space);
  return {std::move(next), step};
}

/// Indices of t's edges in ascending length order, ties broken by vertex
/// pair.
template <typename S>
std::vector<int> ascending_length_order(const MetricSpace<S>& space,
                                        const Tree& t) {
  std::vector<int> order(t.edges.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    const Edge& ea = t.edges[a];
    const Edge& eb = t.edges[b];
    if (space.dist(ea.u, ea.v) != space.dist(eb.u, eb.v))
      return space.dist(ea.u, ea.v) < space.dist(eb.u, eb.v);
    return ea < eb;
  });
  return order;
}

/// One pass over the starting tree's edges, each processed in its current
/// tree: exact edges stay, non-exact edges are swapped out. Edges inserted
/// by earlier steps are not reprocessed. Earlier steps' edges stay exact
/// through later steps, so the final tree has every edge exact and is
/// minimal; the tree length never increases along the trace.
///
/// `order` is a permutation of the edge indices of t0; any order works,
/// the default is ascending length with ties by vertex pair.
template <typename S>
std::pair<Tree, ExactifyTrace<S>> exactify(
    const MetricSpace<S>& space, const Tree& t0,
    std::optional<std::vector<int>> order = std::nullopt,
    Compare<S> cmp = default_compare<S>()) {
  if (space.size() != t0.n)
    throw std::invalid_argument("exactify: size mismatch");
  std::vector<int> perm =
      order ? std::move(*order) : ascending_length_order(space, t0);
  {
    std::vector<int> sorted(perm);
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> want(t0.edges.size());
    std::iota(want.begin(), want.end(), 0);
    if (sorted != want)
      throw std::invalid_argument(
          "exactify: order must be a permutation of the edge indices");
  }

  ExactifyTrace<S> trace;
  trace.initial_length = tree_length(t0, space);
  Tree current = t0;
  for (std::size_t k = 0; k < perm.size(); ++k) {
    const Edge e = t0.edges[perm[k]];
    auto [next, step] = exactify_step(space, current, e, cmp);
    step.index = static_cast<int>(k);
    trace.steps.push_back(std::move(step));
    current = std::move(next);
  }
  trace.final_length = tree_length(current, space);
  return {std::move(current), std::move(trace)};
}

/// Probes the persistence property that makes the one-pass procedure work:
/// start from an exact edge f, run one step on another edge e, and report
/// whether f is still exact afterwards. Always true; a false return would
/// contradict the persistence of exact edges under these swaps.
template <typename S>
bool exactness_persists_after_step(const MetricSpace<S>& space, const Tree& t,
                                   const Edge& f, const Edge& e,
                                   Compare<S> cmp = default_compare<S>()) {
  if (e == f)
    throw std::invalid_argument(
        "exactness_persists_after_step: e and f must differ");
  if (!is_exact_edge(space, t, f, cmp))
    throw std::invalid_argument("exactness_persists_after_step: f must be exact");
  auto [next, step] = exactify_step(space, t, e, cmp);
  return is_exact_edge(space, next, f, cmp);
}

}  // namespace mstinf
