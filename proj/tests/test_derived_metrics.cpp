#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mstinf/certify.hpp"
#include "mstinf/fixtures.hpp"
#include "oracles.hpp"

using namespace mstinf;

namespace {

WeightedTree<Rational> random_weighted_tree(int n, std::mt19937_64& rng) {
  Tree t = make_tree(n, oracles::random_tree_edges(n, rng));
  std::vector<Rational> w;
  for (std::size_t i = 0; i < t.edges.size(); ++i)
    w.emplace_back(1 + static_cast<long long>(rng() % 64), 8);
  return make_weighted_tree(std::move(t), std::move(w));
}

bool same_matrix(const Mat<Rational>& a, const Mat<Rational>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

}  // namespace

TEST_CASE("weighted tree construction validates weights") {
  Tree t = make_tree(3, {edge(0, 1), edge(1, 2)});
  CHECK_THROWS_AS(make_weighted_tree(t, std::vector<Rational>{Rational(1)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      make_weighted_tree(t, std::vector<Rational>{Rational(1), Rational(0)}),
      std::invalid_argument);
  CHECK_THROWS_AS(
      make_weighted_tree(t, std::vector<Rational>{Rational(1), Rational(-1)}),
      std::invalid_argument);
  const auto wt =
      make_weighted_tree(t, std::vector<Rational>{Rational(1), Rational(2)});
  CHECK(wt.weight(edge(0, 1)) == Rational(1));
  CHECK(wt.weight(edge(1, 2)) == Rational(2));
  CHECK(total_weight(wt) == Rational(3));
}

TEST_CASE("induced weights restrict the metric to tree edges") {
  const auto space = space_from_line_points<Rational>(
      {Rational(0), Rational(1), Rational(3)});
  const auto wt = induced_weighted_tree(make_tree(3, {edge(0, 2), edge(1, 2)}), space);
  CHECK(wt.weight(edge(0, 2)) == Rational(3));
  CHECK(wt.weight(edge(1, 2)) == Rational(2));
  CHECK_THROWS_AS(induced_weighted_tree(make_tree(2, {edge(0, 1)}), space),
                  std::invalid_argument);
}

TEST_CASE("path metrics on a two-edge path") {
  auto wt = make_weighted_tree(make_tree(3, {edge(0, 1), edge(1, 2)}),
                               std::vector<Rational>{Rational(1), Rational(2)});
  CHECK(path_sum_distance(wt, 0, 2) == Rational(3));
  CHECK(bottleneck_distance(wt, 0, 2) == Rational(2));
  CHECK(path_sum_distance(wt, 0, 0) == Rational(0));
  CHECK(bottleneck_distance(wt, 1, 1) == Rational(0));
  CHECK(path_sum_distance(wt, 2, 0) == Rational(3));
}

TEST_CASE("full tables on tiny trees") {
  const auto pair = make_weighted_tree(make_tree(2, {edge(0, 1)}),
                                       std::vector<Rational>{Rational(7)});
  const auto sum2 = path_sum_matrix(pair);
  const auto max2 = bottleneck_matrix(pair);
  for (const auto* m : {&sum2, &max2}) {
    CHECK((*m)(0, 0) == Rational(0));
    CHECK((*m)(0, 1) == Rational(7));
    CHECK((*m)(1, 0) == Rational(7));
  }

  const auto star = make_weighted_tree(
      make_tree(4, {edge(0, 1), edge(0, 2), edge(0, 3)}),
      std::vector<Rational>{Rational(1), Rational(2), Rational(3)});
  CHECK(bottleneck_matrix(star)(1, 3) == Rational(3));
  CHECK(path_sum_matrix(star)(1, 3) == Rational(4));
}

TEST_CASE("tables agree with pairwise folds over the path oracle") {
  std::mt19937_64 rng(21);
  for (int iter = 0; iter < 30; ++iter) {
    const int n = 2 + static_cast<int>(rng() % 19);
    const auto wt = random_weighted_tree(n, rng);
    const auto sums = path_sum_matrix(wt);
    const auto maxes = bottleneck_matrix(wt);
    for (int v = 0; v < n; ++v)
      for (int w = 0; w < n; ++w) {
        Rational s(0), m(0);
        if (v != w)
          for (const Edge& e : oracles::bfs_path(wt.tree, v, w)) {
            s += wt.weight(e);
            if (m < wt.weight(e)) m = wt.weight(e);
          }
        CHECK(sums(v, w) == s);
        CHECK(maxes(v, w) == m);
        CHECK(path_sum_distance(wt, v, w) == s);
        CHECK(bottleneck_distance(wt, v, w) == m);
      }
  }
}

TEST_CASE("bottleneck metric is an ultrametric, path sum a metric, and they sandwich") {
  std::mt19937_64 rng(22);
  for (int iter = 0; iter < 20; ++iter) {
    const int n = 2 + static_cast<int>(rng() % 14);
    const auto wt = random_weighted_tree(n, rng);
    const auto sums = path_sum_matrix(wt);
    const auto maxes = bottleneck_matrix(wt);
    CHECK(check_metric_axioms(sums).empty());
    CHECK(check_metric_axioms(maxes).empty());
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) {
        CHECK(maxes(u, v) <= sums(u, v));
        for (int w = 0; w < n; ++w)
          CHECK(maxes(u, w) <= std::max(Rational(maxes(u, v)), Rational(maxes(v, w))));
      }
  }
}

TEST_CASE("envelope membership of the defining tables") {
  std::mt19937_64 rng(23);
  const auto wt = random_weighted_tree(9, rng);
  const MetricSpace<Rational> upper{path_sum_matrix(wt), {}};
  const MetricSpace<Rational> lower{bottleneck_matrix(wt), {}};
  CHECK(in_tree_envelope(upper, wt).inside);
  CHECK(in_tree_envelope(lower, wt).inside);
}

TEST_CASE("envelope violations carry a witness") {
  const auto wt = make_weighted_tree(make_tree(2, {edge(0, 1)}),
                                     std::vector<Rational>{Rational(5)});
  Mat<Rational> low(2, 2);
  low << Rational(0), Rational(4), Rational(4), Rational(0);
  const auto below = in_tree_envelope(MetricSpace<Rational>{low, {}}, wt);
  REQUIRE_FALSE(below.inside);
  CHECK(below.violation->side == EnvelopeSide::Lower);
  CHECK(below.violation->v == 0);
  CHECK(below.violation->w == 1);
  CHECK(below.violation->metric_value == Rational(4));
  CHECK(below.violation->bound_value == Rational(5));

  Mat<Rational> high(2, 2);
  high << Rational(0), Rational(6), Rational(6), Rational(0);
  const auto above = in_tree_envelope(MetricSpace<Rational>{high, {}}, wt);
  REQUIRE_FALSE(above.inside);
  CHECK(above.violation->side == EnvelopeSide::Upper);
}

TEST_CASE("every metric restricted to tree weights sits under the path-sum bound") {
  std::mt19937_64 rng(24);
  for (int iter = 0; iter < 50; ++iter) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const auto space = random_space(n, rng(), iter % 2 == 0
                                                  ? RandomModel::MetricCompletion
                                                  : RandomModel::PointsOnLine);
    const Tree t = make_tree(n, oracles::random_tree_edges(n, rng));
    const auto wt = induced_weighted_tree(t, space);
    const auto sums = path_sum_matrix(wt);
    for (int v = 0; v < n; ++v)
      for (int w = 0; w < n; ++w) CHECK(space.dist(v, w) <= sums(v, w));
  }
}

TEST_CASE("convex blends stay inside the envelope and pin edge values") {
  std::mt19937_64 rng(25);
  const std::vector<Rational> lambdas{Rational(0), Rational(1, 4), Rational(1, 2),
                                      Rational(3, 4), Rational(1)};
  for (int iter = 0; iter < 10; ++iter) {
    const int n = 2 + static_cast<int>(rng() % 14);
    const auto wt = random_weighted_tree(n, rng);
    for (const auto& lambda : lambdas) {
      const auto blend = sample_envelope_metric(wt, lambda);
      CHECK(check_metric_axioms(blend.dist).empty());
      CHECK(in_tree_envelope(blend, wt).inside);
      for (const Edge& e : wt.tree.edges)
        CHECK(blend.dist(e.u, e.v) == wt.weight(e));
    }
  }
}

TEST_CASE("blend endpoints reproduce the defining tables") {
  std::mt19937_64 rng(26);
  const auto wt = random_weighted_tree(8, rng);
  CHECK(same_matrix(sample_envelope_metric(wt, Rational(0)).dist,
                    path_sum_matrix(wt)));
  CHECK(same_matrix(sample_envelope_metric(wt, Rational(1)).dist,
                    bottleneck_matrix(wt)));
  CHECK_THROWS_AS(sample_envelope_metric(wt, Rational(2)), std::invalid_argument);
  CHECK_THROWS_AS(sample_envelope_metric(wt, Rational(-1, 2)), std::invalid_argument);
}

TEST_CASE("certifiers accept the generating tree of a blend") {
  std::mt19937_64 rng(27);
  for (int iter = 0; iter < 10; ++iter) {
    const int n = 2 + static_cast<int>(rng() % 14);
    const auto wt = random_weighted_tree(n, rng);
    const auto blend = sample_envelope_metric(wt, Rational(1, 2));
    CHECK(verify_mst_by_exactness(blend, wt.tree).verdict == Verdict::Minimal);
    CHECK(verify_mst_by_bottleneck(blend, wt.tree).verdict == Verdict::Minimal);
  }
}
