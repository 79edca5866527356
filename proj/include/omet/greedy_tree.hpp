#pragma once

#include <vector>

#include "omet/weighted_tree.hpp"

namespace omet {

// Greedy online tree embedder: attach each new point to its closest
// predecessor by an edge of that distance. No Steiner points.
// The tree metric dominates the input metric and its expansion after
// k points is at most 2^{k-1}-1.
template <class T>
class GreedyTreeEmbedder {
 public:
  const WeightedTree<T>& tree() const { return tree_; }
  const std::vector<PointId>& fathers() const { return father_; }
  int exposed_count() const { return static_cast<int>(father_.size()); }

  // Attaches the next unprocessed point of `space`. Ties for the closest
  // predecessor break to the smallest PointId.
  void extend(const MetricSpace<T>& space) {
    const PointId x = exposed_count();
    if (x >= space.size()) throw error("no new point to attach");
    if (x == 0) {
      tree_.add_exposed(0);
      father_.push_back(-1);
      return;
    }
    PointId best = 0;
    for (PointId y = 1; y < x; ++y)
      if (space.dist(x, y) < space.dist(x, best)) best = y;
    int vx = tree_.add_exposed(x);
    tree_.add_edge(tree_.vertex_of(best), vx, space.dist(x, best));
    father_.push_back(best);
  }

  void run(const MetricSpace<T>& space) {
    while (exposed_count() < space.size()) extend(space);
  }

 private:
  WeightedTree<T> tree_;
  std::vector<PointId> father_;
};

}  // namespace omet
