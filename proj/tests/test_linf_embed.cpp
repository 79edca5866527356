#include <catch2/catch_amalgamated.hpp>

#include "omet/generators.hpp"
#include "omet/linf_embed.hpp"

using namespace omet;

namespace {

Rational q(long long p, long long d = 1) { return Rational(p, d); }

}  // namespace

TEST_CASE("feasible interval around a single point") {
  MetricSpace<Rational> s;
  s.expose({});
  s.expose({q(1)});
  Interval iv = BranchFamily::feasible_interval({q(0)}, s, 1);
  REQUIRE(iv.lo == q(-1));
  REQUIRE(iv.hi == q(1));
}

TEST_CASE("feasible interval intersects all predecessor constraints") {
  MetricSpace<Rational> s;
  s.expose({});
  s.expose({q(1)});
  s.expose({q(1), q(2)});
  Interval iv = BranchFamily::feasible_interval({q(0), q(1)}, s, 2);
  REQUIRE(iv.lo == q(-1));
  REQUIRE(iv.hi == q(1));
}

TEST_CASE("feasible interval collapses to a point in the tight collinear case") {
  MetricSpace<Rational> s;
  s.expose({});
  s.expose({q(2)});
  s.expose({q(1), q(1)});
  Interval iv = BranchFamily::feasible_interval({q(0), q(2)}, s, 2);
  REQUIRE(iv.lo == q(1));
  REQUIRE(iv.hi == q(1));
  REQUIRE(iv.mid() == q(1));
}

TEST_CASE("admissible points: lattice plus history") {
  MetricSpace<Rational> s;
  s.expose({});
  s.expose({q(1)});
  auto p = BranchFamily::admissible_points(s, 1, q(1, 2), {q(0)});
  REQUIRE(p == std::vector<Rational>{q(-1), q(-1, 2), q(0), q(1, 2), q(1)});
  auto p2 = BranchFamily::admissible_points(s, 1, q(1), {q(0)});
  REQUIRE(p2 == std::vector<Rational>{q(-1), q(0), q(1)});
}

TEST_CASE("admissible points for the first point is {0}") {
  MetricSpace<Rational> s;
  s.expose({});
  auto p = BranchFamily::admissible_points(s, 0, q(1, 2), {});
  REQUIRE(p == std::vector<Rational>{q(0)});
}

TEST_CASE("n=2, delta=1/2 spawns five branches") {
  MetricSpace<Rational> s;
  s.expose({});
  s.expose({q(1)});
  BranchFamily fam({q(1, 2)});
  fam.run(s);
  REQUIRE(fam.branches().size() == 5);
  REQUIRE(fam.last_pre_dedup_count() == 5);
  std::vector<Rational> seconds;
  for (const auto& br : fam.branches()) {
    REQUIRE(br[0] == 0);
    seconds.push_back(br[1]);
  }
  std::sort(seconds.begin(), seconds.end());
  REQUIRE(seconds == std::vector<Rational>{q(-1), q(-1, 2), q(0), q(1, 2), q(1)});
}

TEST_CASE("empty admissible set falls back to the interval midpoint") {
  // Crafted so the branch 0, 4/5, 24/25 has a singleton feasible interval
  // {21/25} hitting neither lattice nor history.
  MetricSpace<Rational> s;
  s.expose({});
  s.expose({q(1)});
  s.expose({q(29, 25), q(4, 25)});
  s.expose({q(26, 25), q(1, 25), q(3, 25)});
  const Rational delta = q(2, 5);
  std::vector<Rational> branch{q(0), q(4, 5), q(24, 25)};
  auto pts = BranchFamily::admissible_points(s, 3, delta, branch);
  REQUIRE(pts.empty());
  Interval iv = BranchFamily::feasible_interval(branch, s, 3);
  REQUIRE(iv.lo == q(21, 25));
  REQUIRE(iv.hi == q(21, 25));

  BranchFamily fam({delta});
  fam.run(s);
  branch.push_back(q(21, 25));  // the midpoint child
  bool found = false;
  for (const auto& br : fam.branches())
    if (br == branch) found = true;
  REQUIRE(found);
}

TEST_CASE("delta_for_epsilon instantiations") {
  REQUIRE(delta_for_epsilon(3, q(1)) == q(1, 180));
  REQUIRE(delta_for_epsilon(3, q(1, 2)) == q(1, 360));
  REQUIRE(delta_for_epsilon(2, q(1)) == q(1, 80));
  REQUIRE_THROWS_AS(delta_for_epsilon(3, q(2)), infeasible_parameters);
  REQUIRE_THROWS_AS(delta_for_epsilon(1, q(1)), infeasible_parameters);
}

TEST_CASE("dimension bound instantiations") {
  REQUIRE(dimension_bound(2, q(1)) == 4);
  REQUIRE(dimension_bound(3, q(1, 2)) == 72);
  REQUIRE(dimension_bound(3, q(1, 360)) == 1042568);
}

TEST_CASE("every branch is 1-Lipschitz and maps the first point to 0") {
  Rng rng(61);
  auto s = random_cycle_metric(4, rng);
  BranchFamily fam({q(1, 8)});
  fam.run(s);
  for (const auto& br : fam.branches()) {
    REQUIRE(br[0] == 0);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < i; ++j) REQUIRE(rabs(br[i] - br[j]) <= s.dist(i, j));
  }
  auto h = fam.finalize();
  REQUIRE(h.coords.size() == 4);
  REQUIRE(h.coords[0] == std::vector<Rational>(fam.branches().size(), q(0)));
  auto rep = distortion_report(s, h);
  REQUIRE(rep.expansion <= 1);
}

TEST_CASE("branch cap aborts with a clear error") {
  Rng rng(67);
  auto s = random_cycle_metric(4, rng);
  BranchFamily fam({q(1, 64), true, 50});
  REQUIRE_THROWS_AS(fam.run(s), branch_cap_exceeded);
}

TEST_CASE("pair certificates pass in guarantee mode at n=2") {
  MetricSpace<Rational> s;
  s.expose({});
  s.expose({q(1)});
  BranchFamily fam({delta_for_epsilon(2, q(1, 2))});
  fam.run(s);
  for (const auto& ps : pair_certificate(fam, s)) {
    REQUIRE(ps.pass);
    REQUIRE(ps.max_diff >= ps.bound);
  }
}

TEST_CASE("pair certificates and distortion bound at n=3 with coarse epsilon") {
  Rng rng(71);
  auto s = random_cycle_metric(3, rng);
  Rational eps = q(9, 10);
  BranchFamily fam({delta_for_epsilon(3, eps)});
  fam.run(s);
  for (const auto& ps : pair_certificate(fam, s)) REQUIRE(ps.pass);
  auto rep = distortion_report(s, [&](PointId i, PointId j) { return fam.host_dist(i, j); });
  REQUIRE(rep.expansion <= 1);
  REQUIRE(rep.distortion() <= 1 / (1 - eps));
}

TEST_CASE("dedup only merges identical branches") {
  Rng rng(73);
  auto s = random_cycle_metric(3, rng);
  BranchFamily with({q(1, 4), true});
  BranchFamily without({q(1, 4), false});
  with.run(s);
  without.run(s);
  REQUIRE(with.branches().size() <= without.branches().size());
  // same set of distinct value tuples either way
  auto a = with.branches();
  auto b = without.branches();
  std::sort(b.begin(), b.end());
  b.erase(std::unique(b.begin(), b.end()), b.end());
  REQUIRE(a == b);
}
