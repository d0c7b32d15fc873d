#pragma once

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

#include "mstinf/fwd.hpp"
#include "mstinf/rational.hpp"

namespace mstinf {

/// A finite metric space: symmetric nonnegative distance table over vertex
/// indices 0..n-1, optionally labeled. The table is the data; validity is
/// established separately with check_metric_axioms.
template <typename S>
struct MetricSpace {
  Mat<S> dist;
  std::vector<std::string> labels;  // empty or size n

  int size() const { return static_cast<int>(dist.rows()); }
  const S& operator()(int i, int j) const { return dist(i, j); }
};

template <typename S>
MetricSpace<S> space_from_line_points(const std::vector<S>& points) {
  const int n = static_cast<int>(points.size());
  Mat<S> d(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      d(i, j) = points[i] < points[j] ? S(points[j] - points[i])
                                      : S(points[i] - points[j]);
  return MetricSpace<S>{std::move(d), {}};
}

enum class AxiomKind {
  DiagonalNotZero,
  NotSymmetric,
  NotPositive,     // off-diagonal entry <= 0 (strict metric, no pseudometrics)
  TriangleBroken,  // dist(i,k) > dist(i,j) + dist(j,k)
};

struct AxiomViolation {
  AxiomKind kind;
  int i = -1, j = -1, k = -1;

  std::string describe() const {
    switch (kind) {
      case AxiomKind::DiagonalNotZero:
        return "dist(" + std::to_string(i) + "," + std::to_string(i) +
               ") must be zero";
      case AxiomKind::NotSymmetric:
        return "dist(" + std::to_string(i) + "," + std::to_string(j) +
               ") != dist(" + std::to_string(j) + "," + std::to_string(i) + ")";
      case AxiomKind::NotPositive:
        return "dist(" + std::to_string(i) + "," + std::to_string(j) +
               ") must be positive for distinct points";
      case AxiomKind::TriangleBroken:
        return "dist(" + std::to_string(i) + "," + std::to_string(k) +
               ") > dist(" + std::to_string(i) + "," + std::to_string(j) +
               ") + dist(" + std::to_string(j) + "," + std::to_string(k) + ")";
    }
    return "unknown";
  }
};

/// Checks all metric axioms on a square table. Returns the violations in a
/// deterministic scan order; an empty list means a valid (strict) metric.
/// Non-square tables and NaN entries are input errors, not violations.
template <typename S>
std::vector<AxiomViolation> check_metric_axioms(
    const Mat<S>& dist, Compare<S> cmp = default_compare<S>()) {
  if (dist.rows() != dist.cols())
    throw input_error("distance table must be square");
  const int n = static_cast<int>(dist.rows());
  if constexpr (std::is_floating_point_v<S>) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (std::isnan(dist(i, j)))
          throw input_error("distance table contains NaN");
  }

  std::vector<AxiomViolation> out;
  for (int i = 0; i < n; ++i)
    if (!cmp.eq(dist(i, i), S(0)))
      out.push_back({AxiomKind::DiagonalNotZero, i, -1, -1});
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (!cmp.eq(dist(i, j), dist(j, i)))
        out.push_back({AxiomKind::NotSymmetric, i, j, -1});
      if (!cmp.lt(S(0), dist(i, j)))
        out.push_back({AxiomKind::NotPositive, i, j, -1});
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      for (int k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        if (!cmp.le(dist(i, k), S(dist(i, j) + dist(j, k))))
          out.push_back({AxiomKind::TriangleBroken, i, j, k});
      }
    }
  return out;
}

template <typename S>
struct SetDistanceResult {
  S value;
  std::pair<int, int> witness;  // normalized (min,max), lexicographically
                                // smallest among attaining pairs
};

/// min over a in A, b in B of dist(a,b), with the attaining pair.
/// A and B must be nonempty, disjoint, and in range.
template <typename S>
SetDistanceResult<S> set_distance(const MetricSpace<S>& space,
                                  const std::vector<int>& side_a,
                                  const std::vector<int>& side_b) {
  const int n = space.size();
  if (side_a.empty() || side_b.empty())
    throw std::invalid_argument("set_distance: sets must be nonempty");
  std::vector<char> in_a(n, 0);
  for (int a : side_a) {
    if (a < 0 || a >= n) throw std::invalid_argument("set_distance: index out of range");
    in_a[a] = 1;
  }
  for (int b : side_b) {
    if (b < 0 || b >= n) throw std::invalid_argument("set_distance: index out of range");
    if (in_a[b]) throw std::invalid_argument("set_distance: sets must be disjoint");
  }

  bool have = false;
  S best{};
  std::pair<int, int> best_pair{-1, -1};
  for (int a : side_a)
    for (int b : side_b) {
      const std::pair<int, int> p = a < b ? std::pair{a, b} : std::pair{b, a};
      const S& d = space.dist(a, b);
      if (!have || d < best || (d == best && p < best_pair)) {
        have = true;
        best = d;
        best_pair = p;
      }
    }
  return {best, best_pair};
}

}  // namespace mstinf
