#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <set>

#include "omet/metric.hpp"
#include "omet/weighted_tree.hpp"

namespace omet {

// splitmix64; also the documented master-seed -> per-trial splitter:
// trial i uses stream seed splitmix64(master ^ (i+1) * 0x9e3779b97f4a7c15).
inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Minimal deterministic generator; avoids std distributions so streams are
// identical across standard libraries.
struct Rng {
  uint64_t state;

  explicit Rng(uint64_t seed) : state(seed) {}

  uint64_t next() {
    state += 0x9e3779b97f4a7c15ULL;
    uint64_t x = state;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  uint64_t below(uint64_t n) { return next() % n; }

  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Dyadic rational in [0,1) with denominator 2^bits.
  Rational unit_rational(int bits = 12) {
    return Rational(BigInt(next() >> (64 - bits)), BigInt(1) << bits);
  }
};

inline Rng trial_rng(uint64_t master_seed, uint64_t trial) {
  return Rng(splitmix64(master_seed ^ ((trial + 1) * 0x9e3779b97f4a7c15ULL)));
}

// Shortest-arc distance on the unit-circumference cycle.
inline Rational cycle_distance(const Rational& a, const Rational& b) {
  Rational d = rabs(a - b);
  return std::min(d, Rational(1 - d));
}

// n distinct dyadic points on the unit cycle, exposed in draw order.
inline MetricSpace<Rational> random_cycle_metric(int n, Rng& rng) {
  std::set<Rational> used;
  std::vector<Rational> pos;
  while (static_cast<int>(pos.size()) < n) {
    Rational p = rng.unit_rational();
    if (used.insert(p).second) pos.push_back(p);
  }
  MetricSpace<Rational> s;
  for (int i = 0; i < n; ++i) {
    std::vector<Rational> row;
    for (int j = 0; j < i; ++j) row.push_back(cycle_distance(pos[i], pos[j]));
    s.expose(row);
  }
  return s;
}

// n random points in [0,1]^3 under the Euclidean metric (float backend).
inline MetricSpace<double> random_l2_metric(int n, Rng& rng) {
  std::vector<std::array<double, 3>> pts;
  while (static_cast<int>(pts.size()) < n) {
    std::array<double, 3> p{rng.unit(), rng.unit(), rng.unit()};
    bool clash = false;
    for (const auto& q : pts)
      if (p == q) clash = true;
    if (!clash) pts.push_back(p);
  }
  MetricSpace<double> s;
  for (int i = 0; i < n; ++i) {
    std::vector<double> row;
    for (int j = 0; j < i; ++j) {
      double d2 = 0;
      for (int c = 0; c < 3; ++c) {
        double v = pts[i][c] - pts[j][c];
        d2 += v * v;
      }
      row.push_back(std::sqrt(d2));
    }
    s.expose(row);
  }
  return s;
}

// Submetric of a random weighted tree: build a tree on n + extra vertices
// with dyadic weights, sample n distinct vertices, expose them in random
// order. Extra internal vertices force Steiner reconstruction.
inline MetricSpace<Rational> random_tree_metric(int n, Rng& rng, int extra = 4) {
  const int m = n + extra;
  WeightedTree<Rational> t;
  t.add_exposed(0);
  for (int i = 1; i < m; ++i) {
    int v = t.add_exposed(i);
    int parent = static_cast<int>(rng.below(i));
    t.add_edge(parent, v, Rational(BigInt(1 + rng.below(31)), 16));
  }
  std::vector<int> verts(m);
  for (int i = 0; i < m; ++i) verts[i] = i;
  for (int i = m - 1; i > 0; --i) std::swap(verts[i], verts[rng.below(i + 1)]);
  verts.resize(n);
  MetricSpace<Rational> s;
  for (int i = 0; i < n; ++i) {
    std::vector<Rational> row;
    for (int j = 0; j < i; ++j) row.push_back(t.distance(verts[i], verts[j]));
    s.expose(row);
  }
  return s;
}

}  // namespace omet
