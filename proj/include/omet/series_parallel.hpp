#pragma once

#include <vector>

#include "omet/metric.hpp"

namespace omet {

// The doubling series-parallel graph: G_2 is the unit-weight K_2; each
// generation g >= 2 replaces a chosen weight-2^{2-g} edge (v,u) by the
// 4-cycle v-x-u-y-v of weight-2^{1-g} edges. Replacement preserves all
// existing shortest-path distances, so the metric grows append-only.
class SeriesParallelState {
 public:
  struct Edge {
    int u, v;
    Rational w;
    int gen;
  };

  SeriesParallelState() {
    metric_.expose({});
    metric_.expose({Rational(1)});
    edges_.push_back({0, 1, Rational(1), 1});
  }

  const MetricSpace<Rational>& metric() const { return metric_; }
  const std::vector<Edge>& edges() const { return edges_; }
  int vertex_count() const { return metric_.size(); }

  static Rational generation_weight(int gen) {
    // edges created at generation g have weight 2^{1-g}; the G_2 edge (g=1) has weight 1
    Rational w(1);
    for (int i = 1; i < gen; ++i) w /= 2;
    return w;
  }

  // Candidate edges for the generation-g replacement: weight 2^{2-g}.
  std::vector<int> replaceable_edges(int gen) const {
    Rational target = generation_weight(gen - 1);
    std::vector<int> out;
    for (size_t i = 0; i < edges_.size(); ++i)
      if (edges_[i].w == target) out.push_back(static_cast<int>(i));
    return out;
  }

  // Replaces edge index e by the 4-cycle; exposes x then y and returns their ids.
  std::pair<int, int> replace(int e, int gen) {
    Edge old = edges_[e];
    if (old.w != generation_weight(gen - 1))
      throw error("edge weight does not match the generation being built");
    Rational half = old.w / 2;
    int x = vertex_count();
    int y = x + 1;
    edges_.erase(edges_.begin() + e);
    edges_.push_back({old.u, x, half, gen});
    edges_.push_back({x, old.v, half, gen});
    edges_.push_back({old.v, y, half, gen});
    edges_.push_back({y, old.u, half, gen});
    auto d = apsp(y + 1);
    // old distances must be untouched by construction
    for (int i = 0; i < x; ++i)
      for (int j = 0; j < i; ++j)
        if (d[i][j] != metric_.dist(i, j))
          throw certificate_failure("edge replacement changed an existing distance");
    std::vector<Rational> rowx(d[x].begin(), d[x].begin() + x);
    metric_.expose(rowx);
    std::vector<Rational> rowy(d[y].begin(), d[y].begin() + y);
    metric_.expose(rowy);
    return {x, y};
  }

  // Exact all-pairs shortest paths (Floyd-Warshall) on the current edges.
  std::vector<std::vector<Rational>> apsp(int nv) const {
    const Rational inf(1 << 30);
    std::vector<std::vector<Rational>> d(nv, std::vector<Rational>(nv, inf));
    for (int i = 0; i < nv; ++i) d[i][i] = 0;
    for (const Edge& e : edges_) {
      d[e.u][e.v] = std::min(d[e.u][e.v], e.w);
      d[e.v][e.u] = d[e.u][e.v];
    }
    for (int k = 0; k < nv; ++k)
      for (int i = 0; i < nv; ++i)
        for (int j = 0; j < nv; ++j)
          d[i][j] = std::min(d[i][j], Rational(d[i][k] + d[k][j]));
    return d;
  }

  // Independent recomputation by per-source Bellman-Ford, for cross-checking.
  std::vector<std::vector<Rational>> apsp_bellman_ford() const {
    const int nv = vertex_count();
    const Rational inf(1 << 30);
    std::vector<std::vector<Rational>> d(nv, std::vector<Rational>(nv, inf));
    for (int s = 0; s < nv; ++s) {
      d[s][s] = 0;
      for (int round = 0; round < nv; ++round)
        for (const Edge& e : edges_) {
          d[s][e.v] = std::min(d[s][e.v], Rational(d[s][e.u] + e.w));
          d[s][e.u] = std::min(d[s][e.u], Rational(d[s][e.v] + e.w));
        }
    }
    return d;
  }

 private:
  MetricSpace<Rational> metric_;
  std::vector<Edge> edges_;
};

}  // namespace omet
