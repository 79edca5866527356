#include <catch2/catch_amalgamated.hpp>

#include "omet/generators.hpp"
#include "omet/greedy_tree.hpp"
#include "omet/steiner_tree.hpp"

using namespace omet;

namespace {

MetricSpace<Rational> chain_0_1_3() {
  MetricSpace<Rational> s;
  s.expose({});
  s.expose({Rational(1)});
  s.expose({Rational(3), Rational(2)});
  return s;
}

MetricSpace<Rational> star_222() {
  MetricSpace<Rational> s;
  s.expose({});
  s.expose({Rational(2)});
  s.expose({Rational(2), Rational(2)});
  return s;
}

MetricSpace<Rational> unit_4_cycle() {
  MetricSpace<Rational> s;
  s.expose({});
  s.expose({Rational(1)});
  s.expose({Rational(2), Rational(1)});
  s.expose({Rational(1), Rational(2), Rational(1)});
  return s;
}

}  // namespace

TEST_CASE("greedy: two points embed isometrically") {
  MetricSpace<Rational> s;
  s.expose({});
  s.expose({Rational(1)});
  GreedyTreeEmbedder<Rational> emb;
  emb.run(s);
  auto r = distortion_report(s, emb.tree());
  REQUIRE(r.distortion() == 1);
}

TEST_CASE("greedy: collinear 0,1,3 chains up with distortion 1") {
  auto s = chain_0_1_3();
  GreedyTreeEmbedder<Rational> emb;
  emb.run(s);
  REQUIRE(emb.fathers() == std::vector<PointId>{-1, 0, 1});
  REQUIRE(emb.tree().point_distance(0, 2) == 3);
  REQUIRE(distortion_report(s, emb.tree()).distortion() == 1);
}

TEST_CASE("greedy: tree metric dominates the input") {
  Rng rng(5);
  for (int t = 0; t < 10; ++t) {
    auto s = random_cycle_metric(7, rng);
    GreedyTreeEmbedder<Rational> emb;
    emb.run(s);
    for (int i = 0; i < 7; ++i)
      for (int j = 0; j < i; ++j)
        REQUIRE(emb.tree().point_distance(i, j) >= s.dist(i, j));
    REQUIRE(distortion_report(s, emb.tree()).expansion <= Rational(63));  // 2^6 - 1
  }
}

TEST_CASE("tree distances: additivity along a path") {
  WeightedTree<Rational> t;
  t.add_exposed(0);
  t.add_exposed(1);
  t.add_exposed(2);
  t.add_edge(0, 1, Rational(1));
  t.add_edge(1, 2, Rational(2));
  REQUIRE(t.distance(0, 0) == 0);
  REQUIRE(t.distance(0, 1) == 1);
  REQUIRE(t.distance(0, 2) == 3);
}

TEST_CASE("paths_intersect on a path graph") {
  WeightedTree<Rational> t;
  for (int i = 0; i < 4; ++i) t.add_exposed(i);
  t.add_edge(0, 1, Rational(1));
  t.add_edge(1, 2, Rational(1));
  t.add_edge(2, 3, Rational(1));
  REQUIRE_FALSE(t.paths_intersect(0, 1, 2, 3));
  REQUIRE(t.paths_intersect(0, 2, 1, 3));
}

TEST_CASE("one of the two pairings of any quadruple intersects") {
  Rng rng(17);
  for (int t = 0; t < 5; ++t) {
    auto s = random_cycle_metric(6, rng);
    GreedyTreeEmbedder<Rational> emb;
    emb.run(s);
    const auto& tr = emb.tree();
    for (int a = 0; a < 6; ++a)
      for (int b = a + 1; b < 6; ++b)
        for (int c = b + 1; c < 6; ++c)
          for (int d = c + 1; d < 6; ++d) {
            bool first = tr.paths_intersect(tr.vertex_of(a), tr.vertex_of(b),
                                            tr.vertex_of(c), tr.vertex_of(d));
            bool second = tr.paths_intersect(tr.vertex_of(b), tr.vertex_of(c),
                                             tr.vertex_of(d), tr.vertex_of(a));
            REQUIRE((first || second));
          }
  }
}

TEST_CASE("four-point condition: 3-point metrics are vacuously tree metrics") {
  REQUIRE_FALSE(four_point_check(star_222()).has_value());
  REQUIRE_FALSE(four_point_check(chain_0_1_3()).has_value());
}

TEST_CASE("four-point condition rejects the unit 4-cycle") {
  auto w = four_point_check(unit_4_cycle());
  REQUIRE(w.has_value());
  REQUIRE(*w == std::array<int, 4>{0, 1, 2, 3});
}

TEST_CASE("strict Steiner embedder rejects the unit 4-cycle online") {
  SteinerTreeEmbedder<Rational> emb;
  auto s = unit_4_cycle();
  REQUIRE_THROWS_AS(emb.run(s), not_a_tree_metric);
}

TEST_CASE("Steiner realization of the 3-star places the center") {
  auto s = star_222();
  SteinerTreeEmbedder<Rational> emb;
  emb.run(s);
  const auto& t = emb.tree();
  REQUIRE(t.vertex_count() == 4);  // three leaves + Steiner center
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < i; ++j) REQUIRE(t.point_distance(i, j) == 2);
  int center = -1;
  for (int v = 0; v < 4; ++v)
    if (t.vertex(v).kind == WeightedTree<Rational>::VertexKind::steiner) center = v;
  REQUIRE(center >= 0);
  for (int i = 0; i < 3; ++i) REQUIRE(t.distance(center, t.vertex_of(i)) == 1);
}

TEST_CASE("Steiner realization of the collinear chain needs no Steiner vertex") {
  auto s = chain_0_1_3();
  SteinerTreeEmbedder<Rational> emb;
  emb.run(s);
  REQUIRE(emb.tree().vertex_count() == 3);
  REQUIRE(emb.tree().point_distance(0, 2) == 3);
}

TEST_CASE("l1 coordinates of the 3-star match the hand computation") {
  auto s = star_222();
  SteinerTreeEmbedder<Rational> emb;
  emb.run(s);
  REQUIRE(emb.l1_dimension() == 2);
  REQUIRE(emb.l1_coordinate(0) == std::vector<Rational>{Rational(0), Rational(0)});
  REQUIRE(emb.l1_coordinate(1) == std::vector<Rational>{Rational(2), Rational(0)});
  REQUIRE(emb.l1_coordinate(2) == std::vector<Rational>{Rational(1), Rational(1)});
  auto h = emb.l1_embedding();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < i; ++j) REQUIRE(h.distance(i, j) == 2);
}

TEST_CASE("l1 embedding of two points is the weight itself") {
  MetricSpace<Rational> s;
  s.expose({});
  s.expose({Rational(7, 3)});
  SteinerTreeEmbedder<Rational> emb;
  emb.run(s);
  REQUIRE(emb.l1_coordinate(0) == std::vector<Rational>{Rational(0)});
  REQUIRE(emb.l1_coordinate(1) == std::vector<Rational>{Rational(7, 3)});
}

TEST_CASE("linf lift expands both sign patterns of the D=2 example") {
  std::vector<std::vector<Rational>> tuples{{Rational(0), Rational(0)},
                                            {Rational(1), Rational(1)},
                                            {Rational(2), Rational(0)}};
  auto h = l1_to_linf_lift(tuples, 2);
  REQUIRE(h.coords[0] == std::vector<Rational>{Rational(0), Rational(0)});
  REQUIRE(h.coords[1] == std::vector<Rational>{Rational(2), Rational(0)});
  REQUIRE(h.coords[2] == std::vector<Rational>{Rational(2), Rational(2)});
  REQUIRE(h.distance(0, 1) == 2);
  REQUIRE(h.distance(0, 2) == 2);
  REQUIRE(h.distance(1, 2) == 2);
}

TEST_CASE("linf lift with D=1 is the identity") {
  std::vector<std::vector<Rational>> tuples{{Rational(0)}, {Rational(5, 2)}};
  auto h = l1_to_linf_lift(tuples, 1);
  REQUIRE(h.coords[1] == std::vector<Rational>{Rational(5, 2)});
  REQUIRE_THROWS_AS(l1_to_linf_lift(tuples, 0), dimension_unknown);
}

TEST_CASE("random tree metrics: realization and lifts are exactly isometric") {
  Rng rng(23);
  for (int t = 0; t < 10; ++t) {
    const int n = 5 + static_cast<int>(rng.below(4));
    auto s = random_tree_metric(n, rng);
    SteinerTreeEmbedder<Rational> emb;
    emb.run(s);
    REQUIRE(emb.l1_dimension() <= n - 1);
    auto l1 = emb.l1_embedding();
    std::vector<std::vector<Rational>> tuples;
    for (int i = 0; i < n; ++i) tuples.push_back(emb.l1_coordinate(i));
    auto lift = l1_to_linf_lift(tuples, n - 1);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < i; ++j) {
        REQUIRE(emb.tree().point_distance(i, j) == s.dist(i, j));
        REQUIRE(l1.distance(i, j) == s.dist(i, j));
        REQUIRE(lift.distance(i, j) == s.dist(i, j));
      }
  }
}

TEST_CASE("realization is exposure-order independent on the same tree metric") {
  Rng rng(29);
  auto s = random_tree_metric(6, rng);
  std::vector<int> perm{3, 0, 5, 1, 4, 2};
  std::vector<std::vector<Rational>> m(6, std::vector<Rational>(6));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) m[perm[i]][perm[j]] = s.dist(i, j);
  auto sp = MetricSpace<Rational>::from_matrix(m);
  SteinerTreeEmbedder<Rational> a, b;
  a.run(s);
  b.run(sp);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < i; ++j) {
      REQUIRE(a.tree().point_distance(i, j) == s.dist(i, j));
      REQUIRE(b.tree().point_distance(perm[i], perm[j]) == s.dist(i, j));
    }
}
