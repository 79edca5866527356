#pragma once

#include <array>
#include <vector>

#include "omet/generators.hpp"
#include "omet/transcript.hpp"
#include "omet/weighted_tree.hpp"

namespace omet {

// Midpoint of the shorter arc between two cycle points (positions in [0,1)).
inline Rational arc_median(const Rational& a, const Rational& b) {
  Rational diff = b - a;
  if (diff < 0) diff += 1;
  Rational m = (diff <= Rational(1, 2)) ? Rational(a + diff / 2) : Rational(b + (1 - diff) / 2);
  if (m >= 1) m -= 1;
  return m;
}

inline Rational arc_length(const Rational& a, const Rational& b) { return cycle_distance(a, b); }

// Adaptive cycle adversary against tree embedders. The embedder must expose
// extend(space) and tree(); the adversary inspects the tree's path structure
// after every exposure (the adaptive model allows this).
//
// Phase 1 exposes the four quarter points; each later phase exposes the two
// arc medians and keeps a quadruple whose interval images still intersect,
// halving the arc lengths. After phase t the measured distortion is at
// least 2^{t-1}, checked exactly on the rational backend.
template <class Embedder>
Transcript tree_adversary_run(Embedder& emb, int phases) {
  if (phases < 1) throw infeasible_parameters("need at least one phase");
  Transcript tr;
  MetricSpace<Rational> space;
  std::vector<Rational> pos;  // cycle position per PointId

  auto expose = [&](const Rational& p) -> PointId {
    std::vector<Rational> row;
    for (const Rational& q : pos) row.push_back(cycle_distance(p, q));
    tr.expose(static_cast<PointId>(pos.size()), rationals_json(row));
    PointId id = space.expose(row);
    pos.push_back(p);
    emb.extend(space);
    return id;
  };

  auto vtx = [&](PointId p) { return emb.tree().vertex_of(p); };
  auto intersects = [&](PointId a, PointId b, PointId c, PointId d) {
    return emb.tree().paths_intersect(vtx(a), vtx(b), vtx(c), vtx(d));
  };

  for (int q = 0; q < 4; ++q) expose(Rational(q, 4));

  std::array<PointId, 4> quad;
  if (intersects(0, 1, 2, 3))
    quad = {0, 1, 2, 3};
  else if (intersects(1, 2, 3, 0))
    quad = {1, 2, 3, 0};
  else
    throw no_intersecting_pairing();
  tr.decide({{"phase", 1}, {"quad", {quad[0], quad[1], quad[2], quad[3]}}});

  auto certify_phase = [&](int t) {
    auto rep = distortion_report(space, emb.tree());
    Rational bound(BigInt(1) << (t - 1));
    bool pass = rep.infinite_contraction || rep.distortion() >= bound;
    tr.certify("distortion[phase=" + std::to_string(t) + "]", format_rational(bound),
               rep.infinite_contraction ? json("inf") : json(format_rational(rep.distortion())),
               pass);
    tr.report = distortion_json(rep);
  };
  certify_phase(1);

  for (int t = 2; t <= phases; ++t) {
    PointId a = expose(arc_median(pos[quad[0]], pos[quad[1]]));
    PointId b = expose(arc_median(pos[quad[2]], pos[quad[3]]));
    std::array<std::pair<PointId, PointId>, 2> first{{{quad[0], a}, {a, quad[1]}}};
    std::array<std::pair<PointId, PointId>, 2> second{{{quad[2], b}, {b, quad[3]}}};
    bool found = false;
    for (const auto& [s0, s1] : first) {
      for (const auto& [s2, s3] : second) {
        if (intersects(s0, s1, s2, s3)) {
          quad = {s0, s1, s2, s3};
          found = true;
          break;
        }
      }
      if (found) break;
    }
    if (!found) throw no_intersecting_pairing();

    // arcs must stay inside the original quarters with length 2^{-t-1}
    Rational want(1, BigInt(1) << (t + 1));
    if (arc_length(pos[quad[0]], pos[quad[1]]) != want ||
        arc_length(pos[quad[2]], pos[quad[3]]) != want)
      throw certificate_failure("arc length invariant broken");
    tr.decide({{"phase", t}, {"quad", {quad[0], quad[1], quad[2], quad[3]}}});
    certify_phase(t);
  }
  tr.report["checks_passed"] = tr.all_passed();
  return tr;
}

}  // namespace omet
