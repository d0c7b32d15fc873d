#pragma once

#include <memory>
#include <random>
#include <set>

#include "mstinf/countable_space.hpp"
#include "mstinf/derived_metrics.hpp"

namespace mstinf {

namespace detail {

inline Rational harmonic_value(int k) { return k == 0 ? Rational(0) : Rational(1, k); }

inline Rational two_sided_value(int k) {
  const int j = k / 2 + 1;
  return k % 2 == 0 ? Rational(1, j) : Rational(-1, j);
}

}  // namespace detail

/// The points 1/k on the real line together with their limit 0.
/// Point 0 is the limit; point k >= 1 sits at 1/k.
inline CountableSpace harmonic_with_limit() {
  CountableSpace cs;
  cs.name = "harmonic_with_limit";
  cs.point_label = [](int k) { return format_rational_short(detail::harmonic_value(k)); };
  cs.distance = [](int j, int k) {
    return Rational(abs(detail::harmonic_value(j) - detail::harmonic_value(k)));
  };
  cs.meta = {
      "harmonic_with_limit", true, false, std::nullopt,
      "Points 1/k on the real line with their limit 0. Spanning trees of "
      "finite length exist (the infimum of lengths is 1, approached by "
      "consecutive paths), but no tree attains it: a minimal spanning tree "
      "does not exist."};
  return cs;
}

/// The points 1/k and -1/k, with nothing at 0. Points alternate sides:
/// point 2j is 1/(j+1), point 2j+1 is -1/(j+1).
inline CountableSpace two_sided_harmonic() {
  CountableSpace cs;
  cs.name = "two_sided_harmonic";
  cs.point_label = [](int k) { return format_rational_short(detail::two_sided_value(k)); };
  cs.distance = [](int j, int k) {
    return Rational(abs(detail::two_sided_value(j) - detail::two_sided_value(k)));
  };
  cs.meta = {
      "two_sided_harmonic", true, false, std::nullopt,
      "Points 1/k and -1/k with no point at 0. Every spanning tree needs an "
      "edge between the halves and such edges get arbitrarily short, so the "
      "infimum of tree lengths (2) is not attained: no minimal spanning tree."};
  return cs;
}

/// Countably many points at pairwise distance 1.
inline CountableSpace uniform_countable() {
  CountableSpace cs;
  cs.name = "uniform_countable";
  cs.point_label = [](int k) { return "m" + std::to_string(k); };
  cs.distance = [](int, int) { return Rational(1); };
  cs.meta = {
      "uniform_countable", false, false, std::nullopt,
      "Countably many points at pairwise distance 1. Every pair attains a "
      "one-point cut distance, so the candidate edge graph is complete and "
      "connected, yet every spanning tree has infinite length."};
  return cs;
}

/// Harmonic points with their limit, plus an extra point at distance 1
/// from all of them. Point 0 is the limit 0, point 1 is the extra point x,
/// point k >= 2 sits at 1/(k-1).
inline CountableSpace good_no_mst() {
  const auto value = [](int k) { return detail::harmonic_value(k == 0 ? 0 : k - 1); };
  CountableSpace cs;
  cs.name = "good_no_mst";
  cs.point_label = [value](int k) {
    return k == 1 ? std::string("x") : format_rational_short(value(k));
  };
  cs.distance = [value](int j, int k) {
    if (j == 1 || k == 1) return Rational(1);
    return Rational(abs(value(j) - value(k)));
  };
  cs.meta = {
      "good_no_mst", true, false, std::nullopt,
      "Points 1/k with their limit 0, plus a point x at distance 1 from all "
      "of them. Finite-length spanning trees exist and the candidate edge "
      "graph is connected, but no minimal spanning tree exists: spanning the "
      "harmonic part already leaves its infimum unattained."};
  return cs;
}

/// Star: point 0 is the center, leaf k sits at distance 1/k^2 from it and
/// at 1/j^2 + 1/k^2 from leaf j.
inline CountableSpace star_quadratic() {
  CountableSpace cs;
  cs.name = "star_quadratic";
  cs.point_label = [](int k) {
    return k == 0 ? std::string("m") : "leaf_" + std::to_string(k);
  };
  cs.distance = [](int j, int k) {
    if (j > k) std::swap(j, k);
    const Rational rk(1, static_cast<long long>(k) * k);
    if (j == 0) return rk;
    return Rational(Rational(1, static_cast<long long>(j) * j) + rk);
  };
  cs.meta = {
      "star_quadratic", true, true, "pi^2/6",
      "Center at distance 1/k^2 from leaf k; leaves at mutual distance "
      "1/j^2 + 1/k^2. The star on the center is a minimal spanning tree of "
      "the full space, of length pi^2/6, the sum of the 1/k^2."};
  return cs;
}

/// Finite space carrying a prescribed edge-weighted tree: distances are
/// path sums of the weights, which makes the given tree minimal.
inline CountableSpace any_tree_space(const WeightedTree<Rational>& wt) {
  auto table = std::make_shared<Mat<Rational>>(path_sum_matrix(wt));
  CountableSpace cs;
  cs.name = "any_tree";
  cs.max_points = wt.tree.n;
  cs.point_label = [](int k) { return "v" + std::to_string(k); };
  cs.distance = [table](int j, int k) { return (*table)(j, k); };
  cs.meta = {"any_tree", true, true, format_rational(total_weight(wt)),
             "Finite space realizing a prescribed edge-weighted tree: "
             "distances are path sums of the weights, so the tree itself is "
             "a minimal spanning tree and its length is the weight total."};
  return cs;
}

inline const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names{
      "harmonic_with_limit", "two_sided_harmonic", "uniform_countable",
      "good_no_mst", "star_quadratic"};
  return names;
}

/// Parameterless fixtures by name. The any_tree family needs a weighted
/// tree and is built through any_tree_space instead.
inline CountableSpace fixture(const std::string& name) {
  if (name == "harmonic_with_limit") return harmonic_with_limit();
  if (name == "two_sided_harmonic") return two_sided_harmonic();
  if (name == "uniform_countable") return uniform_countable();
  if (name == "good_no_mst") return good_no_mst();
  if (name == "star_quadratic") return star_quadratic();
  if (name == "any_tree")
    throw input_error(
        "fixture 'any_tree' needs a weighted tree; build it with any_tree_space");
  throw input_error("unknown fixture: '" + name + "'");
}

inline std::vector<FixtureMeta> fixture_catalog() {
  std::vector<FixtureMeta> out;
  for (const auto& name : fixture_names()) out.push_back(fixture(name).meta);
  out.push_back({"any_tree", true, true, std::nullopt,
                 "Family parameterized by an edge-weighted tree; distances "
                 "are path sums of the weights and the tree is a minimal "
                 "spanning tree of the resulting space."});
  return out;
}

enum class RandomModel { PointsOnLine, MetricCompletion };

/// Deterministic random metric space. PointsOnLine places n distinct
/// points with spacing granularity 1/8 on a segment. MetricCompletion
/// draws pairwise values in [1/10, 1] and takes the shortest-path closure,
/// which restores the triangle inequality while keeping positivity.
inline MetricSpace<Rational> random_space(int n, std::uint64_t seed,
                                          RandomModel model) {
  if (n < 1) throw std::invalid_argument("random_space: need at least 1 point");
  std::mt19937_64 rng(seed);
  if (model == RandomModel::PointsOnLine) {
    const std::uint64_t span = 16 * static_cast<std::uint64_t>(n) + 1;
    std::set<std::uint64_t> ticks;
    while (static_cast<int>(ticks.size()) < n) ticks.insert(rng() % span);
    std::vector<Rational> pts;
    for (std::uint64_t t : ticks) pts.emplace_back(Rational(t) / 8);
    return space_from_line_points(pts);
  }
  Mat<Rational> d(n, n);
  for (int i = 0; i < n; ++i) d(i, i) = Rational(0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const Rational v(100 + static_cast<long long>(rng() % 901), 1000);
      d(i, j) = v;
      d(j, i) = v;
    }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (d(i, k) + d(k, j) < d(i, j)) d(i, j) = d(i, k) + d(k, j);
  MetricSpace<Rational> out;
  out.dist = std::move(d);
  return out;
}

/// The pair attaining the distance between the sides of a bipartition of
/// the whole space, when that pair is unique; empty on ties. A unique
/// attaining pair is an edge of every minimal spanning tree.
template <typename S>
std::optional<std::pair<int, int>> unique_pair_probe(
    const MetricSpace<S>& space, const std::vector<int>& side1,
    const std::vector<int>& side2, Compare<S> cmp = default_compare<S>()) {
  std::vector<char> seen(space.size(), 0);
  std::size_t covered = 0;
  for (const auto* side : {&side1, &side2})
    for (int v : *side) {
      if (v < 0 || v >= space.size() || seen[v])
        throw std::invalid_argument("unique_pair_probe: not a partition");
      seen[v] = 1;
      ++covered;
    }
  if (covered != static_cast<std::size_t>(space.size()) || side1.empty() ||
      side2.empty())
    throw std::invalid_argument("unique_pair_probe: not a partition");
  const auto best = set_distance(space, side1, side2);
  int count = 0;
  for (int v : side1)
    for (int w : side2)
      if (cmp.eq(space.dist(v, w), best.value)) ++count;
  return count == 1 ? std::optional(best.witness) : std::nullopt;
}

}  // namespace mstinf
