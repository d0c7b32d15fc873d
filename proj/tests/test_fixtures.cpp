#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mstinf/exactify.hpp"
#include "mstinf/fixtures.hpp"
#include "oracles.hpp"

using namespace mstinf;

namespace {

bool same_matrix(const Mat<Rational>& a, const Mat<Rational>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

std::vector<Edge> harmonic_path_edges(int n) {
  std::vector<Edge> out;
  for (int k = 1; k + 1 < n; ++k) out.push_back(edge(k, k + 1));
  out.push_back(edge(0, n - 1));
  std::sort(out.begin(), out.end());
  return out;
}

WeightedTree<Rational> random_weighted_tree(int n, std::mt19937_64& rng) {
  std::vector<Rational> weights;
  for (int i = 0; i + 1 < n; ++i)
    weights.emplace_back(1 + static_cast<long long>(rng() % 16), 4);
  return make_weighted_tree(make_tree(n, oracles::random_tree_edges(n, rng)),
                            std::move(weights));
}

}  // namespace

TEST_CASE("harmonic enumeration starts at the limit and walks 1/k") {
  const auto space = prefix(fixture("harmonic_with_limit"), 3);
  CHECK(space.labels == std::vector<std::string>{"0", "1", "1/2"});
  CHECK(space.dist(0, 1) == Rational(1));
  CHECK(space.dist(0, 2) == Rational(1, 2));
  CHECK(space.dist(1, 2) == Rational(1, 2));
}

TEST_CASE("two sided enumeration alternates signs") {
  const auto space = prefix(fixture("two_sided_harmonic"), 4);
  CHECK(space.labels == std::vector<std::string>{"1", "-1", "1/2", "-1/2"});
  CHECK(space.dist(0, 1) == Rational(2));
  CHECK(space.dist(2, 3) == Rational(1));
  CHECK(space.dist(0, 2) == Rational(1, 2));
  CHECK(space.dist(1, 3) == Rational(1, 2));
}

TEST_CASE("uniform space is all ones off the diagonal") {
  const auto space = prefix(fixture("uniform_countable"), 3);
  CHECK(space.labels == std::vector<std::string>{"m0", "m1", "m2"});
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k)
      CHECK(space.dist(j, k) == (j == k ? Rational(0) : Rational(1)));
}

TEST_CASE("good_no_mst puts the limit first and x second") {
  const auto space = prefix(fixture("good_no_mst"), 5);
  CHECK(space.labels == std::vector<std::string>{"0", "x", "1", "1/2", "1/3"});
  for (int k : {0, 2, 3, 4}) CHECK(space.dist(1, k) == Rational(1));
  CHECK(space.dist(0, 2) == Rational(1));
  CHECK(space.dist(0, 3) == Rational(1, 2));
  CHECK(space.dist(2, 3) == Rational(1, 2));
  CHECK(space.dist(3, 4) == Rational(1, 6));
}

TEST_CASE("star space measures leaves quadratically") {
  const auto space = prefix(fixture("star_quadratic"), 4);
  CHECK(space.labels ==
        std::vector<std::string>{"m", "leaf_1", "leaf_2", "leaf_3"});
  CHECK(space.dist(0, 2) == Rational(1, 4));
  CHECK(space.dist(0, 3) == Rational(1, 9));
  CHECK(space.dist(2, 3) == Rational(13, 36));
  CHECK(space.dist(1, 2) == Rational(5, 4));
}

TEST_CASE("prefix rejects bad sizes") {
  CHECK_THROWS_AS(prefix(fixture("harmonic_with_limit"), 0),
                  std::invalid_argument);
  const auto wt = make_weighted_tree(make_tree(2, {edge(0, 1)}),
                                     std::vector<Rational>{Rational(3)});
  const auto cs = any_tree_space(wt);
  CHECK(prefix(cs, 2).dist(0, 1) == Rational(3));
  CHECK_THROWS_AS(prefix(cs, 3), input_error);
  CHECK(prefix(fixture("harmonic_with_limit"), 1).size() == 1);
}

TEST_CASE("catalog lists six fixtures with their analytic verdicts") {
  const auto catalog = fixture_catalog();
  REQUIRE(catalog.size() == 6);
  const auto find = [&](const std::string& name) -> const FixtureMeta& {
    for (const auto& m : catalog)
      if (m.name == name) return m;
    throw std::logic_error("missing fixture meta");
  };
  CHECK(find("harmonic_with_limit").is_good);
  CHECK_FALSE(find("harmonic_with_limit").mst_exists);
  CHECK(find("two_sided_harmonic").is_good);
  CHECK_FALSE(find("two_sided_harmonic").mst_exists);
  CHECK_FALSE(find("uniform_countable").is_good);
  CHECK_FALSE(find("uniform_countable").mst_exists);
  CHECK(find("good_no_mst").is_good);
  CHECK_FALSE(find("good_no_mst").mst_exists);
  CHECK(find("star_quadratic").is_good);
  CHECK(find("star_quadratic").mst_exists);
  CHECK(find("star_quadratic").mst_length == "pi^2/6");
  CHECK(find("any_tree").is_good);
  CHECK(find("any_tree").mst_exists);
  for (const auto& m : catalog) CHECK_FALSE(m.notes.empty());
}

TEST_CASE("fixture lookup rejects unknown names and bare any_tree") {
  CHECK_THROWS_AS(fixture("any_tree"), input_error);
  CHECK_THROWS_AS(fixture("harmonic"), input_error);
  for (const auto& name : fixture_names()) CHECK(fixture(name).name == name);
}

TEST_CASE("prefixes nest: smaller ones are corners of larger ones") {
  for (const auto& name : fixture_names()) {
    const auto cs = fixture(name);
    const auto big = prefix(cs, 64);
    for (int n : {1, 2, 3, 7, 16, 40, 64}) {
      const auto small = prefix(cs, n);
      Mat<Rational> corner(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) corner(i, j) = big.dist(i, j);
      CHECK(same_matrix(small.dist, corner));
    }
  }
}

TEST_CASE("harmonic truncations have the value-sorted path as unique optimum") {
  const auto cs = fixture("harmonic_with_limit");
  for (int n = 2; n <= 64; ++n) {
    const auto space = prefix(cs, n);
    const Tree mst = kruskal_mst(space);
    CHECK(mst.edges == harmonic_path_edges(n));
    CHECK(tree_length(mst, space) == Rational(1));
  }
  for (int n : {2, 3, 5, 9, 17, 33, 64}) {
    const auto space = prefix(cs, n);
    CHECK(verify_mst_by_exactness(space, kruskal_mst(space)).verdict ==
          Verdict::Minimal);
  }
}

TEST_CASE("star truncations have the star as optimum") {
  const auto cs = fixture("star_quadratic");
  for (int n = 2; n <= 64; ++n) {
    const auto space = prefix(cs, n);
    const Tree mst = kruskal_mst(space);
    std::vector<Edge> star;
    for (int k = 1; k < n; ++k) star.push_back(edge(0, k));
    CHECK(mst.edges == star);
    Rational expect(0);
    for (int k = 1; k < n; ++k)
      expect += Rational(1, static_cast<long long>(k) * k);
    CHECK(tree_length(mst, space) == expect);
  }
  for (int n : {2, 5, 17, 64}) {
    const auto space = prefix(cs, n);
    CHECK(verify_mst_by_bottleneck(space, kruskal_mst(space)).verdict ==
          Verdict::Minimal);
  }
}

TEST_CASE("good_no_mst truncations still have minimal spanning trees") {
  const auto cs = fixture("good_no_mst");
  for (int n : {2, 3, 5, 9, 17, 33, 64}) {
    const auto space = prefix(cs, n);
    const Tree mst = kruskal_mst(space);
    CHECK(verify_mst_by_exactness(space, mst).verdict == Verdict::Minimal);
    CHECK(verify_mst_by_bottleneck(space, mst).verdict == Verdict::Minimal);
  }
}

TEST_CASE("any_tree realizes a prescribed weighted tree as the optimum") {
  std::mt19937_64 rng(51);
  const int n = 200;
  const auto wt = random_weighted_tree(n, rng);
  const auto cs = any_tree_space(wt);
  CHECK(cs.max_points == n);
  CHECK(cs.meta.mst_length == format_rational(total_weight(wt)));

  const auto space = prefix(cs, n);
  CHECK(same_matrix(space.dist, path_sum_matrix(wt)));
  CHECK(space.labels[7] == "v7");
  CHECK(tree_length(wt.tree, space) == total_weight(wt));
  CHECK(verify_mst_by_bottleneck(space, wt.tree).verdict == Verdict::Minimal);

  const auto part = prefix(cs, 50);
  CHECK(part.size() == 50);
  CHECK(part.dist(3, 11) == space.dist(3, 11));
}

TEST_CASE("random spaces are deterministic in the seed") {
  for (const auto model :
       {RandomModel::PointsOnLine, RandomModel::MetricCompletion}) {
    const auto a = random_space(9, 1234, model);
    const auto b = random_space(9, 1234, model);
    CHECK(same_matrix(a.dist, b.dist));
    const auto c = random_space(9, 1235, model);
    CHECK_FALSE(same_matrix(a.dist, c.dist));
  }
}

TEST_CASE("random spaces satisfy the metric axioms") {
  std::mt19937_64 rng(52);
  for (int iter = 0; iter < 60; ++iter) {
    const int n = 1 + static_cast<int>(rng() % 9);
    const auto model = iter % 2 == 0 ? RandomModel::PointsOnLine
                                     : RandomModel::MetricCompletion;
    const auto space = random_space(n, rng(), model);
    CHECK(space.size() == n);
    CHECK(check_metric_axioms(space.dist).empty());
  }
  CHECK(random_space(1, 7, RandomModel::MetricCompletion).dist(0, 0) ==
        Rational(0));
  CHECK_THROWS_AS(random_space(0, 7, RandomModel::PointsOnLine),
                  std::invalid_argument);
}

TEST_CASE("the probe finds the forced edge of harmonic splits") {
  const auto space = prefix(fixture("harmonic_with_limit"), 6);
  for (int k = 1; k <= 4; ++k) {
    std::vector<int> side1, side2;
    for (int v = 0; v < 6; ++v) (v >= 1 && v <= k ? side1 : side2).push_back(v);
    const auto hit = unique_pair_probe(space, side1, side2);
    REQUIRE(hit.has_value());
    CHECK(*hit == std::pair{k, k + 1});
  }
}

TEST_CASE("the probe reports ties as empty") {
  const auto space = prefix(fixture("uniform_countable"), 5);
  CHECK_FALSE(unique_pair_probe(space, {0, 1}, {2, 3, 4}).has_value());
  CHECK_FALSE(unique_pair_probe(space, {0}, {1, 2, 3, 4}).has_value());
}

TEST_CASE("the probe matches an exhaustive attaining-pair count") {
  std::mt19937_64 rng(53);
  int unique_hits = 0;
  for (int iter = 0; iter < 150; ++iter) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const auto model = iter % 2 == 0 ? RandomModel::PointsOnLine
                                     : RandomModel::MetricCompletion;
    const auto space = random_space(n, rng(), model);

    std::vector<int> side1, side2;
    do {
      side1.clear();
      side2.clear();
      for (int v = 0; v < n; ++v) (rng() % 2 ? side1 : side2).push_back(v);
    } while (side1.empty() || side2.empty());

    const auto best = set_distance(space, side1, side2);
    int attained = 0;
    for (int v : side1)
      for (int w : side2)
        if (space.dist(v, w) == best.value) ++attained;

    const auto hit = unique_pair_probe(space, side1, side2);
    CHECK(hit.has_value() == (attained == 1));
    if (hit) {
      ++unique_hits;
      CHECK(space.dist(hit->first, hit->second) == best.value);
      // A unique attaining pair is an edge of every optimum, so in
      // particular of the one Kruskal builds.
      CHECK(kruskal_mst(space).has_edge(edge(hit->first, hit->second)));
    }
  }
  CHECK(unique_hits > 30);
}

TEST_CASE("the probe rejects non-partitions") {
  const auto space = prefix(fixture("uniform_countable"), 4);
  CHECK_THROWS_AS(unique_pair_probe(space, {0, 1}, {1, 2, 3}),
                  std::invalid_argument);
  CHECK_THROWS_AS(unique_pair_probe(space, {0, 1}, {2}), std::invalid_argument);
  CHECK_THROWS_AS(unique_pair_probe(space, {}, {0, 1, 2, 3}),
                  std::invalid_argument);
  CHECK_THROWS_AS(unique_pair_probe(space, {0, 1}, {2, 7}),
                  std::invalid_argument);
}
