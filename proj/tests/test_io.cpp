#include <catch2/catch_amalgamated.hpp>

#include "omet/duel.hpp"
#include "omet/json_io.hpp"
#include "omet/line_embed.hpp"
#include "omet/steiner_tree.hpp"

using namespace omet;

namespace {

Rational q(long long p, long long d = 1) { return Rational(p, d); }

}  // namespace

TEST_CASE("rational formatting and parsing round trip") {
  REQUIRE(format_rational(q(3, 4)) == "3/4");
  REQUIRE(format_rational(q(-6, 8)) == "-3/4");
  REQUIRE(parse_rational("3/4") == q(3, 4));
  REQUIRE(parse_rational("2") == q(2));
  REQUIRE(parse_rational("0.25") == q(1, 4));
  REQUIRE(parse_rational("-1/2") == q(-1, 2));
  REQUIRE_THROWS(parse_rational("1/0"));
}

TEST_CASE("metric JSON round trip is bit exact on both backends") {
  MetricSpace<Rational> s;
  s.expose({});
  s.expose({q(1, 3)});
  s.expose({q(2, 3), q(1, 3)});
  json j = metric_to_json(s);
  REQUIRE(j["backend"] == "rational");
  auto back = std::get<MetricSpace<Rational>>(metric_from_json(j));
  REQUIRE(metric_to_json(back) == j);

  MetricSpace<double> f;
  f.expose({});
  f.expose({0.125});
  json jf = metric_to_json(f);
  auto backf = std::get<MetricSpace<double>>(metric_from_json(jf));
  REQUIRE(metric_to_json(backf) == jf);
}

TEST_CASE("host point set JSON round trip") {
  HostPointSet<Rational> h;
  h.norm = Norm::linf;
  h.coords = {{q(0), q(0)}, {q(1, 2), q(-1, 3)}};
  json j = host_to_json(h);
  auto back = rational_host_from_json(j);
  REQUIRE(back.norm == Norm::linf);
  REQUIRE(back.coords == h.coords);
  REQUIRE(host_to_json(back) == j);
}

TEST_CASE("tree JSON round trip preserves structure and weights") {
  MetricSpace<Rational> s;
  s.expose({});
  s.expose({q(2)});
  s.expose({q(2), q(2)});
  SteinerTreeEmbedder<Rational> emb;
  emb.run(s);
  json j = tree_to_json(emb.tree());
  auto back = tree_from_json(j);
  REQUIRE(tree_to_json(back) == j);
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < i; ++k)
      REQUIRE(back.point_distance(i, k) == emb.tree().point_distance(i, k));
}

TEST_CASE("line embedding JSON carries positions and fathers") {
  MetricSpace<Rational> s;
  s.expose({});
  s.expose({q(1)});
  LineEmbedder<> emb;
  emb.run(s);
  json j = line_to_json(emb);
  REQUIRE(j["norm"] == "line");
  REQUIRE(j["pos"][1] == "1/8");
  REQUIRE(j["father"][1] == 0);
}

TEST_CASE("transcript JSON round trip") {
  GreedyTreeEmbedder<Rational> emb;
  auto tr = tree_adversary_run(emb, 2);
  tr.config = {{"adversary", "tree"}, {"embedder", "greedy-tree"}, {"phases", 2}};
  json j = tr.to_json();
  auto back = Transcript::from_json(j);
  REQUIRE(back.to_json() == j);
  REQUIRE(back.all_passed() == tr.all_passed());
}

TEST_CASE("deterministic duels replay bit-identically") {
  json configs[] = {
      {{"adversary", "tree"}, {"embedder", "greedy-tree"}, {"phases", 3}},
      {{"adversary", "tree"}, {"embedder", "steiner-tree"}, {"phases", 2}},
      {{"adversary", "linf-dim"}, {"embedder", "branch-follower"}, {"k", 2}},
      {{"adversary", "linf-dim"}, {"embedder", "random-feasible"}, {"k", 2}, {"seed", 5}},
      {{"adversary", "l2"}, {"embedder", "l2-placer"}, {"generations", 2}, {"seed", 3}},
  };
  for (const auto& c : configs) {
    auto tr = run_duel(c);
    REQUIRE(replay_matches(tr));
  }
}
