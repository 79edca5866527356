#pragma once

#include <vector>

#include "omet/adversary_l2.hpp"
#include "omet/adversary_linf.hpp"
#include "omet/generators.hpp"
#include "omet/linf_embed.hpp"

namespace omet {

// 1-Lipschitz-by-construction opponent: every coordinate places the new
// point uniformly at random (53-bit dyadic) inside its feasible interval.
class RandomFeasiblePlacer : public LinfOnlineEmbedder {
 public:
  RandomFeasiblePlacer(int k, uint64_t seed) : k_(k), rng_(seed) {}

  std::vector<Rational> place(const MetricSpace<Rational>& space) override {
    const PointId x = space.size() - 1;
    std::vector<Rational> out(k_);
    for (int i = 0; i < k_; ++i) {
      if (x == 0) {
        out[i] = 0;
      } else {
        Interval iv = BranchFamily::feasible_interval(coords_[i], space, x);
        Rational u(BigInt(rng_.next() >> 11), BigInt(1) << 53);
        out[i] = iv.lo + (iv.hi - iv.lo) * u;
      }
    }
    if (x == 0) coords_.assign(k_, {});
    for (int i = 0; i < k_; ++i) coords_[i].push_back(out[i]);
    return out;
  }

 private:
  int k_;
  Rng rng_;
  std::vector<std::vector<Rational>> coords_;  // per coordinate, per point
};

// Follows k deterministic branches of the lattice branching family: each
// coordinate i picks an evenly spaced element of the feasible range P^t
// (the midpoint fallback when P^t is empty).
class BranchFollowerPlacer : public LinfOnlineEmbedder {
 public:
  BranchFollowerPlacer(int k, Rational delta) : k_(k), delta_(std::move(delta)) {}

  std::vector<Rational> place(const MetricSpace<Rational>& space) override {
    const PointId x = space.size() - 1;
    if (x == 0) coords_.assign(k_, {});
    std::vector<Rational> out(k_);
    for (int i = 0; i < k_; ++i) {
      auto pts = BranchFamily::admissible_points(space, x, delta_, coords_[i]);
      if (pts.empty()) {
        out[i] = BranchFamily::feasible_interval(coords_[i], space, x).mid();
      } else {
        size_t idx = (k_ == 1) ? (pts.size() - 1) / 2
                               : static_cast<size_t>(i) * (pts.size() - 1) / (k_ - 1);
        out[i] = pts[idx];
      }
      coords_[i].push_back(out[i]);
    }
    return out;
  }

 private:
  int k_;
  Rational delta_;
  std::vector<std::vector<Rational>> coords_;
};

// Non-contracting opponent for the series-parallel adversary: multi-start
// local search minimizing the maximum expansion of the new point, subject
// to ||w - phi(y)|| >= d(x,y) for every predecessor. Feasibility is
// repaired by pushing away from the nearest violated constraint.
class L2Placer : public L2OnlineEmbedder {
 public:
  L2Placer(int dim, int restarts, uint64_t seed)
      : dim_(dim), restarts_(restarts), rng_(seed) {}

  std::vector<double> place(const MetricSpace<double>& space) override {
    const PointId x = space.size() - 1;
    if (x >= dim_) throw infeasible_parameters("placer dimension too small for point count");
    std::vector<double> best;
    double best_obj = 0;
    if (x == 0) {
      pos_.push_back(std::vector<double>(dim_, 0.0));
      return pos_.back();
    }
    PointId z = 0;
    for (PointId y = 1; y < x; ++y)
      if (space.dist(x, y) < space.dist(x, z)) z = y;
    for (int r = 0; r < restarts_; ++r) {
      std::vector<double> w;
      if (r == 0) {
        // fresh-axis lift off the closest predecessor; exact for two points
        w = pos_[z];
        w[x] += space.dist(x, z);
      } else {
        w = pos_[z];
        for (int c = 0; c < dim_; ++c) w[c] += (rng_.unit() - 0.5) * 2.0 * space.dist(x, z);
      }
      if (!repair(space, x, w)) continue;
      refine(space, x, w);
      double obj = objective(space, x, w);
      if (best.empty() || obj < best_obj) {
        best = w;
        best_obj = obj;
      }
    }
    if (best.empty())
      throw placement_infeasible("no feasible placement found in " +
                                 std::to_string(restarts_) + " restarts");
    pos_.push_back(best);
    return best;
  }

 private:
  double objective(const MetricSpace<double>& space, PointId x,
                   const std::vector<double>& w) const {
    double m = 0;
    for (PointId y = 0; y < x; ++y) m = std::max(m, l2_dist(w, pos_[y]) / space.dist(x, y));
    return m;
  }

  bool feasible(const MetricSpace<double>& space, PointId x,
                const std::vector<double>& w) const {
    for (PointId y = 0; y < x; ++y)
      if (l2_dist(w, pos_[y]) < space.dist(x, y)) return false;
    return true;
  }

  bool repair(const MetricSpace<double>& space, PointId x, std::vector<double>& w) {
    for (int iter = 0; iter < 200; ++iter) {
      PointId worst = -1;
      double worst_ratio = 1.0;
      for (PointId y = 0; y < x; ++y) {
        double ratio = l2_dist(w, pos_[y]) / space.dist(x, y);
        if (ratio < worst_ratio) {
          worst_ratio = ratio;
          worst = y;
        }
      }
      if (worst < 0) return true;
      double cur = l2_dist(w, pos_[worst]);
      double want = space.dist(x, worst) * (1.0 + 1e-12);
      if (cur == 0) {
        w[x % dim_] += want;  // degenerate start; push along some axis
        continue;
      }
      for (int c = 0; c < dim_; ++c)
        w[c] = pos_[worst][c] + (w[c] - pos_[worst][c]) * (want / cur);
    }
    return feasible(space, x, w);
  }

  void refine(const MetricSpace<double>& space, PointId x, std::vector<double>& w) {
    double obj = objective(space, x, w);
    double sigma = 0.25 * space.dist(x, 0);
    for (int step = 0; step < 300; ++step) {
      if (step % 60 == 59) sigma *= 0.5;
      std::vector<double> cand = w;
      for (int c = 0; c < dim_; ++c) cand[c] += (rng_.unit() - 0.5) * sigma;
      if (!feasible(space, x, cand)) continue;
      double o = objective(space, x, cand);
      if (o < obj) {
        obj = o;
        w = cand;
      }
    }
  }

  int dim_;
  int restarts_;
  Rng rng_;
  std::vector<std::vector<double>> pos_;
};

}  // namespace omet
