#pragma once

#include <cmath>
#include <memory>
#include <vector>

#include "omet/series_parallel.hpp"
#include "omet/transcript.hpp"

namespace omet {

// Online opponent placing points in Euclidean space; place() returns the
// coordinates of the newest point of `space`.
struct L2OnlineEmbedder {
  virtual ~L2OnlineEmbedder() = default;
  virtual std::vector<double> place(const MetricSpace<double>& space) = 0;
};

inline double l2_dist(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    double v = a[i] - b[i];
    s += v * v;
  }
  return std::sqrt(s);
}

struct ParallelogramResult {
  double lhs = 0, rhs = 0;       // sum of squared new edges vs diagonals
  int best_edge = -1;            // index into {vx, xu, uy, yv}
  double best_expansion = 0;     // expansion of that edge
};

// Checks the inductive premise |pv-pu| >= sqrt(g-1) * w and locates the new
// 4-cycle edge expanded by at least sqrt(g). The inequality
// sum of the four new squared lengths >= |pv-pu|^2 + |px-py|^2 is the
// parallelogram law; both sides are reported for the transcript.
inline ParallelogramResult parallelogram_certificate(
    const std::vector<double>& pv, const std::vector<double>& pu,
    const std::vector<double>& px, const std::vector<double>& py, int g, double w,
    double rel_tol = 1e-3) {
  double dvu = l2_dist(pv, pu);
  if (dvu < std::sqrt(static_cast<double>(g - 1)) * w * (1.0 - rel_tol))
    throw certificate_failure("inductive premise fails: chosen edge not expanded by sqrt(g-1)");
  ParallelogramResult r;
  double half = w / 2;  // weight of the four new edges
  double e[4] = {l2_dist(pv, px), l2_dist(px, pu), l2_dist(pu, py), l2_dist(py, pv)};
  r.lhs = e[0] * e[0] + e[1] * e[1] + e[2] * e[2] + e[3] * e[3];
  double dxy = l2_dist(px, py);
  r.rhs = dvu * dvu + dxy * dxy;
  for (int i = 0; i < 4; ++i) {
    double exp = e[i] / half;
    if (exp > r.best_expansion) {
      r.best_expansion = exp;
      r.best_edge = i;
    }
  }
  if (r.best_expansion < std::sqrt(static_cast<double>(g)) * (1.0 - rel_tol))
    throw certificate_failure("no new edge expanded by sqrt(g)");
  return r;
}

// Runs the series-parallel adversary for `generations` generations against a
// non-contracting opponent. Non-contraction is verified after every
// placement (relative tolerance non_contraction_tol); a breach aborts.
inline Transcript l2_adversary_run(L2OnlineEmbedder& emb, int generations,
                                   double non_contraction_tol = 1e-7,
                                   double cert_rel_tol = 1e-3) {
  if (generations < 1) throw infeasible_parameters("need at least one generation");
  Transcript tr;
  SeriesParallelState sp;
  MetricSpace<double> fspace;
  std::vector<std::vector<double>> pos;

  auto expose_to_embedder = [&](int p) {
    std::vector<double> row;
    for (int j = 0; j < p; ++j) row.push_back(to_double(sp.metric().dist(p, j)));
    tr.expose(p, row.empty() ? json::array() : json(row));
    if (p == 0)
      fspace.expose({});
    else
      fspace.expose(row);
    pos.push_back(emb.place(fspace));
    tr.respond(p, json(pos.back()));
    for (int j = 0; j < p; ++j) {
      double h = l2_dist(pos[p], pos[j]);
      double d = fspace.dist(p, j);
      if (h < d * (1.0 - non_contraction_tol))
        throw non_contraction_breach("pair (" + std::to_string(j) + "," + std::to_string(p) +
                                     ") contracted beyond tolerance");
    }
  };

  expose_to_embedder(0);
  expose_to_embedder(1);

  for (int g = 2; g <= generations; ++g) {
    auto cands = sp.replaceable_edges(g);
    int best = -1;
    double best_exp = -1;
    for (int e : cands) {
      const auto& ed = sp.edges()[e];
      double exp = l2_dist(pos[ed.u], pos[ed.v]) / to_double(ed.w);
      int u = std::min(ed.u, ed.v), v = std::max(ed.u, ed.v);
      if (exp > best_exp) {
        best = e;
        best_exp = exp;
      } else if (exp == best_exp && best >= 0) {
        const auto& bd = sp.edges()[best];
        int bu = std::min(bd.u, bd.v), bv = std::max(bd.u, bd.v);
        if (std::pair(u, v) < std::pair(bu, bv)) best = e;
      }
    }
    const auto ed = sp.edges()[best];
    tr.decide({{"generation", g},
               {"edge", {ed.u, ed.v}},
               {"weight", format_rational(ed.w)},
               {"expansion", best_exp}});
    auto [x, y] = sp.replace(best, g);
    expose_to_embedder(x);
    expose_to_embedder(y);

    auto cert = parallelogram_certificate(pos[ed.v], pos[ed.u], pos[x], pos[y], g,
                                          to_double(ed.w), cert_rel_tol);
    tr.certify("parallelogram[g=" + std::to_string(g) + "]", cert.rhs, cert.lhs,
               cert.lhs >= cert.rhs * (1.0 - 1e-9));
    tr.certify("new-edge-expansion[g=" + std::to_string(g) + "]",
               std::sqrt(static_cast<double>(g)) * (1.0 - cert_rel_tol), cert.best_expansion,
               cert.best_expansion >= std::sqrt(static_cast<double>(g)) * (1.0 - cert_rel_tol));
  }

  // final certificate: some current-generation edge expanded by >= sqrt(n)
  double final_exp = 0;
  for (const auto& ed : sp.edges())
    final_exp = std::max(final_exp, l2_dist(pos[ed.u], pos[ed.v]) / to_double(ed.w));
  double bound = std::sqrt(static_cast<double>(generations)) * (1.0 - cert_rel_tol);
  tr.certify("final-max-expansion", bound, final_exp, final_exp >= bound);

  auto rep = distortion_report(fspace, [&](PointId i, PointId j) { return l2_dist(pos[i], pos[j]); });
  tr.report = distortion_json(rep);
  tr.report["checks_passed"] = tr.all_passed();
  return tr;
}

}  // namespace omet
