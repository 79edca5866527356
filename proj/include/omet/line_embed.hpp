#pragma once

#include <algorithm>
#include <vector>

#include "omet/host.hpp"
#include "omet/metric.hpp"

namespace omet {

// Online embedding into the line: the k-th point goes to the middle of the
// leftmost empty open interval of length 2^{-k} d(z, x_k) at or right of its
// father z (the closest predecessor). Positions are dyadic multiples of
// input distances, so the rational backend keeps every certificate exact.
template <class T = Rational>
class LineEmbedder {
 public:
  struct Placement {
    T pos{0};
    PointId father = -1;
    T start{0};  // left end of the placement interval (open)
    T len{0};    // interval length; 0 for the first point
  };

  const std::vector<Placement>& placements() const { return placed_; }
  int exposed_count() const { return static_cast<int>(placed_.size()); }

  std::vector<T> positions() const {
    std::vector<T> p;
    for (const auto& pl : placed_) p.push_back(pl.pos);
    return p;
  }

  HostPointSet<T> embedding() const {
    HostPointSet<T> h;
    h.norm = Norm::line;
    for (const auto& pl : placed_) h.coords.push_back({pl.pos});
    return h;
  }

  // Smallest s >= start such that (s, s+len) contains no exposed position.
  // Candidate starts are `start` itself and every exposed position right of it.
  static T leftmost_gap(std::vector<T> positions, const T& start, const T& len) {
    std::sort(positions.begin(), positions.end());
    T s = start;
    for (const T& p : positions) {
      if (!(p > s)) continue;
      if (!(p < s + len)) break;  // (s, s+len) is empty
      s = p;
    }
    return s;
  }

  void extend(const MetricSpace<T>& space) {
    const PointId x = exposed_count();
    if (x >= space.size()) throw error("no new point to place");
    if (x == 0) {
      placed_.push_back({T(0), -1, T(0), T(0)});
      return;
    }
    const int k = x + 1;  // 1-based exposure index
    PointId z = 0;
    for (PointId y = 1; y < x; ++y)
      if (space.dist(x, y) < space.dist(x, z)) z = y;
    T scale(1);
    for (int i = 0; i < k; ++i) scale /= 2;
    T len = scale * space.dist(x, z);
    T start = leftmost_gap(positions(), placed_[z].pos, len);
    T pos = start + len / 2;
    // Eq-style sanity bound: the interval starts within (k-2) blocked slots.
    T slack = pos - placed_[z].pos;
    if (slack < 0 || slack * 2 > T(2 * k - 3) * len)
      throw certificate_failure("father-offset bound violated at step " + std::to_string(k));
    placed_.push_back({pos, z, start, len});
  }

  void run(const MetricSpace<T>& space) {
    while (exposed_count() < space.size()) extend(space);
  }

  // Interval-gap structure: with p hits in the left half of I^x an empty
  // open interval of length >= |I_L|/2^p sits immediately left of pos(x);
  // with r hits in the right half it contains an empty interval of length
  // >= |I_R|/(r+1). Throws certificate_failure on violation.
  void check_gap_claims() const {
    for (int x = 1; x < exposed_count(); ++x) {
      const auto& pl = placed_[x];
      T lo = pl.start, hi = pl.start + pl.len, half = pl.len / 2;
      std::vector<T> left, right;
      for (int y = x + 1; y < exposed_count(); ++y) {
        const T& p = placed_[y].pos;
        if (p > lo && p < pl.pos) left.push_back(p);
        if (p > pl.pos && p < hi) right.push_back(p);
      }
      // left half, adjacent to pos(x)
      T lmax = lo;
      for (const T& p : left) lmax = std::max(lmax, p);
      T need = half;
      for (size_t i = 0; i < left.size(); ++i) need /= 2;
      if (pl.pos - lmax < need)
        throw certificate_failure("left-half gap claim fails at point " + std::to_string(x));
      // right half, anywhere
      std::sort(right.begin(), right.end());
      right.push_back(hi);
      T prev = pl.pos, best(0);
      for (const T& p : right) {
        best = std::max(best, T(p - prev));
        prev = p;
      }
      if (best * T(static_cast<int>(right.size())) < half)
        throw certificate_failure("right-half gap claim fails at point " + std::to_string(x));
    }
  }

 private:
  std::vector<Placement> placed_;
};

}  // namespace omet
