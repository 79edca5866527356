#pragma once

#include <algorithm>
#include <vector>

#include "omet/host.hpp"
#include "omet/metric.hpp"

namespace omet {

struct Interval {
  Rational lo, hi;
  Rational mid() const { return (lo + hi) / 2; }
};

// delta = epsilon / (20 n^2): the scale parameter that turns the additive
// per-pair slack into a (1-epsilon) lower bound.
inline Rational delta_for_epsilon(int n, const Rational& eps) {
  if (n < 2) throw infeasible_parameters("need n >= 2");
  if (!(eps > 0) || eps > 1) throw infeasible_parameters("epsilon must be in (0,1]");
  return eps / (20 * n * n);
}

// (n-1)! * (2/delta + 2)^{n-1}, rounded up to an integer.
inline BigInt dimension_bound(int n, const Rational& delta) {
  if (!(delta > 0) || delta > 1) throw infeasible_parameters("delta must be in (0,1]");
  Rational base = 2 / delta + 2;
  Rational b(1);
  for (int i = 1; i < n; ++i) b *= i * base;
  return rceil(b);
}

// Family of 1-Lipschitz line maps built by lattice branching; each branch
// becomes one linf coordinate at finalize. Every branch maps the first
// point to 0 and never alters ancestor values.
class BranchFamily {
 public:
  struct Options {
    Rational delta;
    bool dedup = true;
    size_t max_branches = 10'000'000;
  };

  explicit BranchFamily(Options opt) : opt_(std::move(opt)) {
    if (!(opt_.delta > 0) || opt_.delta > 1)
      throw infeasible_parameters("delta must be in (0,1]");
  }

  const std::vector<std::vector<Rational>>& branches() const { return branches_; }
  int exposed_count() const { return exposed_; }
  size_t last_pre_dedup_count() const { return pre_dedup_; }
  const Rational& delta() const { return opt_.delta; }

  // 1-Lip extension interval for the newest point against one branch.
  // Nonempty by the triangle inequality; asserted, not assumed.
  static Interval feasible_interval(const std::vector<Rational>& values,
                                    const MetricSpace<Rational>& space, PointId x) {
    Interval iv{values.empty() ? Rational(0) : values[0] - space.dist(0, x),
                values.empty() ? Rational(0) : values[0] + space.dist(0, x)};
    for (PointId y = 1; y < static_cast<PointId>(values.size()); ++y) {
      iv.lo = std::max(iv.lo, Rational(values[y] - space.dist(y, x)));
      iv.hi = std::min(iv.hi, Rational(values[y] + space.dist(y, x)));
    }
    if (iv.lo > iv.hi)
      throw certificate_failure("feasible interval empty; 1-Lip extension must exist");
    return iv;
  }

  // P^t: union of the lattices delta*d(x_i,x_t)*Z and the branch's previous
  // values, intersected with the feasible interval; sorted, deduplicated.
  static std::vector<Rational> admissible_points(const MetricSpace<Rational>& space, PointId x,
                                                 const Rational& delta,
                                                 const std::vector<Rational>& values) {
    if (x == 0) return {Rational(0)};
    Interval iv = feasible_interval(values, space, x);
    std::vector<Rational> out;
    for (PointId i = 0; i < x; ++i) {
      Rational s = delta * space.dist(i, x);
      for (BigInt k = rceil(iv.lo / s), kmax = rfloor(iv.hi / s); k <= kmax; ++k)
        out.push_back(Rational(k) * s);
    }
    for (const Rational& v : values)
      if (v >= iv.lo && v <= iv.hi) out.push_back(v);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  void extend(const MetricSpace<Rational>& space) {
    const PointId x = exposed_;
    if (x >= space.size()) throw error("no new point to embed");
    std::vector<std::vector<Rational>> next;
    if (x == 0) {
      next.push_back({Rational(0)});
    } else {
      Rational per_branch_bound = Rational(x) * (2 / opt_.delta + 2);
      for (const auto& br : branches_) {
        std::vector<Rational> pts = admissible_points(space, x, opt_.delta, br);
        if (pts.empty()) pts.push_back(feasible_interval(br, space, x).mid());
        if (Rational(static_cast<int>(pts.size())) > per_branch_bound)
          throw certificate_failure("per-branch extension count exceeds (t-1)(2/delta+2)");
        for (const Rational& p : pts) {
          if (next.size() >= opt_.max_branches)
            throw branch_cap_exceeded("branch cap " + std::to_string(opt_.max_branches) +
                                      " exceeded at point " + std::to_string(x));
          std::vector<Rational> child = br;
          child.push_back(p);
          for (PointId y = 0; y < x; ++y)
            if (rabs(child[y] - p) > space.dist(y, x))
              throw certificate_failure("extension is not 1-Lipschitz");
          next.push_back(std::move(child));
        }
      }
    }
    pre_dedup_ = next.size();
    if (opt_.dedup) {
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
    }
    branches_ = std::move(next);
    ++exposed_;
  }

  void run(const MetricSpace<Rational>& space) {
    while (exposed_ < space.size()) extend(space);
  }

  HostPointSet<Rational> finalize() const {
    HostPointSet<Rational> h;
    h.norm = Norm::linf;
    h.coords.assign(exposed_, std::vector<Rational>(branches_.size()));
    for (size_t b = 0; b < branches_.size(); ++b)
      for (int p = 0; p < exposed_; ++p) h.coords[p][b] = branches_[b][p];
    return h;
  }

  // linf distance without materializing the transpose.
  Rational host_dist(PointId a, PointId b) const {
    Rational m(0);
    for (const auto& br : branches_) m = std::max(m, rabs(br[a] - br[b]));
    return m;
  }

 private:
  Options opt_;
  std::vector<std::vector<Rational>> branches_;
  size_t pre_dedup_ = 0;
  int exposed_ = 0;
};

struct PairSlack {
  PointId x, y;
  Rational max_diff;  // max over branches of phi(y) - phi(x)
  Rational bound;     // (1 - 20 n^2 delta) d(x,y)
  bool pass;
};

// Directed per-pair certificate: some branch keeps phi(y) - phi(x) within
// additive slack of d(x,y). The bound uses D_xy <= 2 d(x,y).
inline std::vector<PairSlack> pair_certificate(const BranchFamily& family,
                                               const MetricSpace<Rational>& space) {
  const int n = space.size();
  Rational factor = 1 - 20 * n * n * family.delta();
  std::vector<PairSlack> out;
  for (PointId x = 0; x < n; ++x)
    for (PointId y = 0; y < n; ++y) {
      if (x == y) continue;
      Rational m;
      bool first = true;
      for (const auto& br : family.branches()) {
        Rational v = br[y] - br[x];
        if (first || v > m) {
          m = v;
          first = false;
        }
      }
      Rational bound = factor * space.dist(x, y);
      out.push_back({x, y, m, bound, m >= bound});
    }
  return out;
}

}  // namespace omet
