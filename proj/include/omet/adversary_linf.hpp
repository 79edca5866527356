#pragma once

#include <algorithm>
#include <vector>

#include "omet/linf_embed.hpp"
#include "omet/transcript.hpp"

namespace omet {

// Online opponent into linf^k; place() returns the k coordinates of the
// newest point of `space`.
struct LinfOnlineEmbedder {
  virtual ~LinfOnlineEmbedder() = default;
  virtual std::vector<Rational> place(const MetricSpace<Rational>& space) = 0;
};

// The 4-point antipodal-pairs adversary: exposes a,b at distance 1, reads
// the k coordinate values of b, picks the midpoint p of the longest gap of
// the induced partition of [0,1] (leftmost on ties), sets alpha = (1-p)/2
// and exposes c,q accordingly. Any 1-Lipschitz opponent then contracts
// some pair by at least 1 + 1/(2k+1).
//
// Normalization (translate phi_i(a) to 0, reflect so phi_i(b) >= 0) is
// virtual: computed by the adversary from the raw responses.
inline Transcript linf_dim_adversary_run(LinfOnlineEmbedder& emb, int k) {
  if (k < 1) throw infeasible_parameters("need k >= 1");
  Transcript tr;
  MetricSpace<Rational> space;
  std::vector<std::vector<Rational>> vals;  // per point, k coordinates

  auto expose = [&](const std::vector<Rational>& row) -> PointId {
    tr.expose(space.size(), rationals_json(row));
    PointId id = space.expose(row);
    vals.push_back(emb.place(space));
    if (static_cast<int>(vals.back().size()) != k)
      throw error("opponent returned wrong dimension");
    tr.respond(id, rationals_json(vals.back()));
    for (PointId y = 0; y < id; ++y) {
      Rational h(0);
      for (int i = 0; i < k; ++i) h = std::max(h, rabs(vals[id][i] - vals[y][i]));
      if (h > space.dist(id, y))
        throw lipschitz_breach("pair (" + std::to_string(y) + "," + std::to_string(id) +
                               ") expanded by a claimed 1-Lipschitz opponent");
    }
    return id;
  };

  expose({});                 // a
  expose({Rational(1)});      // b, d(a,b) = 1

  std::vector<Rational> b(k);
  for (int i = 0; i < k; ++i) b[i] = rabs(vals[1][i] - vals[0][i]);
  std::sort(b.begin(), b.end());

  // longest interval of the partition of [0,1] by the b values, leftmost tie
  Rational prev(0), best_len(-1), p(0);
  std::vector<Rational> bounds = b;
  bounds.push_back(Rational(1));
  for (const Rational& cur : bounds) {
    if (cur - prev > best_len) {
      best_len = cur - prev;
      p = (prev + cur) / 2;
    }
    prev = cur;
  }
  Rational sep(1, 2 * (k + 1));
  for (const Rational& v : b)
    if (rabs(p - v) < sep)
      throw certificate_failure("pigeonhole gap smaller than 1/(2(k+1))");
  Rational alpha = (1 - p) / 2;
  tr.decide({{"p", format_rational(p)}, {"alpha", format_rational(alpha)}});

  expose({alpha, 1 - alpha});             // c
  expose({1 - alpha, alpha, Rational(1)});  // q

  auto rep = distortion_report(space, [&](PointId i, PointId j) {
    Rational h(0);
    for (int c = 0; c < k; ++c) h = std::max(h, rabs(vals[i][c] - vals[j][c]));
    return h;
  });
  Rational bound = 1 + Rational(1, 2 * k + 1);
  bool pass = rep.infinite_contraction || rep.contraction >= bound;
  tr.certify("contraction", format_rational(bound),
             rep.infinite_contraction ? json("inf") : json(format_rational(rep.contraction)),
             pass);
  tr.report = distortion_json(rep);
  tr.report["checks_passed"] = tr.all_passed();
  return tr;
}

}  // namespace omet
