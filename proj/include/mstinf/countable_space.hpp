#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>

#include "mstinf/metric_space.hpp"
#include "mstinf/rational.hpp"

namespace mstinf {

/// Declared analytic facts about a countable space. These are statements,
/// never computed from finite data; they gate which asymptotic tests apply.
struct FixtureMeta {
  std::string name;
  bool is_good = false;      // infimum of spanning-tree lengths is finite
  bool mst_exists = false;   // the infimum is attained by some spanning tree
  std::optional<std::string> mst_length;  // display form of the exact value
  std::string notes;
};

/// A lazily enumerated countable metric space: point labels and a distance
/// oracle over enumeration indices. Distances are exact rationals. The
/// enumeration order is part of the definition and frozen per space.
struct CountableSpace {
  std::string name;
  std::function<std::string(int)> point_label;
  std::function<Rational(int, int)> distance;
  FixtureMeta meta;
  std::optional<int> max_points;  // set for spaces that are actually finite
};

/// The finite restriction to the first n enumerated points.
inline MetricSpace<Rational> prefix(const CountableSpace& space, int n) {
  if (n < 1) throw std::invalid_argument("prefix: n must be >= 1");
  if (space.max_points && n > *space.max_points)
    throw input_error("prefix: " + space.name + " has only " +
                      std::to_string(*space.max_points) + " points");
  Mat<Rational> d(n, n);
  for (int j = 0; j < n; ++j) {
    d(j, j) = 0;
    for (int k = j + 1; k < n; ++k) {
      d(j, k) = space.distance(j, k);
      d(k, j) = d(j, k);
    }
  }
  std::vector<std::string> labels(n);
  for (int j = 0; j < n; ++j) labels[j] = space.point_label(j);
  return MetricSpace<Rational>{std::move(d), std::move(labels)};
}

}  // namespace mstinf
