#include <catch2/catch_amalgamated.hpp>

#include "omet/generators.hpp"
#include "omet/line_embed.hpp"

using namespace omet;

TEST_CASE("first point sits at the origin") {
  MetricSpace<Rational> s;
  s.expose({});
  LineEmbedder<> emb;
  emb.run(s);
  REQUIRE(emb.placements()[0].pos == 0);
  REQUIRE(emb.placements()[0].father == -1);
}

TEST_CASE("second point at distance 1 lands on 1/8") {
  MetricSpace<Rational> s;
  s.expose({});
  s.expose({Rational(1)});
  LineEmbedder<> emb;
  emb.run(s);
  const auto& p = emb.placements()[1];
  REQUIRE(p.father == 0);
  REQUIRE(p.start == 0);
  REQUIRE(p.len == Rational(1, 4));
  REQUIRE(p.pos == Rational(1, 8));
}

TEST_CASE("third point skips nothing when the blocker is outside the open interval") {
  // d(x3,x1)=1, d(x3,x2)=2 with x2 already at 1/8: father x1, interval
  // (0,1/8), position 1/16 -- 1/8 is not inside the open interval.
  MetricSpace<Rational> s;
  s.expose({});
  s.expose({Rational(1)});
  s.expose({Rational(1), Rational(2)});
  LineEmbedder<> emb;
  emb.run(s);
  const auto& p = emb.placements()[2];
  REQUIRE(p.father == 0);
  REQUIRE(p.start == 0);
  REQUIRE(p.len == Rational(1, 8));
  REQUIRE(p.pos == Rational(1, 16));
}

TEST_CASE("leftmost_gap cases") {
  using L = LineEmbedder<Rational>;
  // no points right of start
  REQUIRE(L::leftmost_gap({Rational(-1)}, Rational(0), Rational(1)) == 0);
  // one blocker in the middle of the first candidate
  REQUIRE(L::leftmost_gap({Rational(1, 2)}, Rational(0), Rational(1)) == Rational(1, 2));
  // dense prefix: scan to the first sufficient gap
  std::vector<Rational> pts{Rational(1, 8), Rational(1, 4), Rational(3, 8), Rational(2)};
  REQUIRE(L::leftmost_gap(pts, Rational(0), Rational(1, 2)) == Rational(3, 8));
}

TEST_CASE("identical streams yield bit-identical positions") {
  Rng rng(41);
  auto s = random_cycle_metric(8, rng);
  LineEmbedder<> a, b;
  a.run(s);
  b.run(s);
  REQUIRE(a.positions() == b.positions());
}

TEST_CASE("positions are pairwise distinct") {
  Rng rng(43);
  for (int t = 0; t < 5; ++t) {
    auto s = random_cycle_metric(7, rng);
    LineEmbedder<> emb;
    emb.run(s);
    auto pos = emb.positions();
    std::sort(pos.begin(), pos.end());
    REQUIRE(std::adjacent_find(pos.begin(), pos.end()) == pos.end());
  }
}

TEST_CASE("per-step expansion, final contraction, and gap claims hold") {
  Rng rng(47);
  for (int t = 0; t < 5; ++t) {
    const int n = 6;
    auto s = random_cycle_metric(n, rng);
    MetricSpace<Rational> prefix;
    LineEmbedder<> emb;
    for (int i = 0; i < n; ++i) {
      std::vector<Rational> row;
      for (int j = 0; j < i; ++j) row.push_back(s.dist(i, j));
      prefix.expose(row);
      emb.extend(prefix);
      const int k = prefix.size();
      if (k < 2) continue;
      auto rep = distortion_report(prefix, emb.embedding());
      REQUIRE(rep.expansion <= Rational(BigInt(1) << (k + 1)));
      REQUIRE_NOTHROW(emb.check_gap_claims());
    }
    auto rep = distortion_report(s, emb.embedding());
    REQUIRE_FALSE(rep.infinite_contraction);
    REQUIRE(rep.contraction <= n * Rational(BigInt(1) << (n + 1)));
  }
}

TEST_CASE("father offset stays within the blocked-slot bound") {
  Rng rng(53);
  for (int t = 0; t < 5; ++t) {
    auto s = random_tree_metric(8, rng);
    LineEmbedder<> emb;
    REQUIRE_NOTHROW(emb.run(s));  // extend() enforces the offset bound internally
    for (int x = 1; x < 8; ++x) {
      const auto& p = emb.placements()[x];
      Rational off = p.pos - emb.placements()[p.father].pos;
      REQUIRE(off >= 0);
      REQUIRE(off * 2 <= Rational(2 * (x + 1) - 3) * p.len);
    }
  }
}
