#pragma once

#include <algorithm>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "omet/errors.hpp"
#include "omet/host.hpp"
#include "omet/metric.hpp"

namespace omet {

// A weighted tree whose vertices are either exposed input points or Steiner
// points. Edge weights are strictly positive. Sizes here are desk scale, so
// path queries are plain walks without LCA preprocessing.
template <class T>
class WeightedTree {
 public:
  enum class VertexKind { exposed, steiner };

  struct Vertex {
    VertexKind kind;
    int id;  // PointId for exposed vertices, serial for Steiner vertices
  };

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  const Vertex& vertex(int v) const { return vertices_[v]; }

  int add_exposed(PointId p) {
    if (point_vertex_.count(p)) throw error("point exposed twice in tree");
    int v = new_vertex({VertexKind::exposed, p});
    point_vertex_[p] = v;
    return v;
  }

  int add_steiner() { return new_vertex({VertexKind::steiner, steiner_serial_++}); }

  // Re-tags a Steiner vertex as the exposed point p (zero-weight merge).
  void mark_exposed(int v, PointId p) {
    if (vertices_[v].kind != VertexKind::steiner) throw error("can only mark a Steiner vertex");
    if (point_vertex_.count(p)) throw error("point exposed twice in tree");
    vertices_[v] = {VertexKind::exposed, p};
    point_vertex_[p] = v;
  }

  int vertex_of(PointId p) const {
    auto it = point_vertex_.find(p);
    if (it == point_vertex_.end()) throw error("point not in tree");
    return it->second;
  }

  bool has_point(PointId p) const { return point_vertex_.count(p) != 0; }

  void add_edge(int u, int v, const T& w) {
    if (!(w > 0)) throw error("tree edge weight must be positive");
    adj_[u].push_back({v, w});
    adj_[v].push_back({u, w});
  }

  // Splits edge (u,v) at distance off from u; returns the new mid vertex.
  // kind selects whether the split vertex is a Steiner point or an exposed point.
  int split_edge(int u, int v, const T& off, VertexKind kind, PointId p = -1) {
    T w = edge_weight(u, v);
    if (!(off > 0) || !(off < w)) throw error("split offset must be strictly inside the edge");
    int m = (kind == VertexKind::steiner) ? add_steiner() : add_exposed(p);
    remove_edge(u, v);
    add_edge(u, m, off);
    add_edge(m, v, w - off);
    return m;
  }

  T edge_weight(int u, int v) const {
    for (const auto& [to, w] : adj_.at(u))
      if (to == v) return w;
    throw error("no such edge");
  }

  const std::vector<std::pair<int, T>>& neighbors(int u) const {
    static const std::vector<std::pair<int, T>> empty;
    auto it = adj_.find(u);
    return it == adj_.end() ? empty : it->second;
  }

  // Unique vertex path between u and v, endpoints included.
  std::vector<int> path(int u, int v) const {
    if (u == v) return {u};
    std::vector<int> parent(vertex_count(), -1);
    std::vector<int> stack{u};
    parent[u] = u;
    while (!stack.empty()) {
      int cur = stack.back();
      stack.pop_back();
      if (cur == v) break;
      for (const auto& [to, w] : neighbors(cur)) {
        (void)w;
        if (parent[to] == -1) {
          parent[to] = cur;
          stack.push_back(to);
        }
      }
    }
    if (parent[v] == -1) throw error("tree is not connected");
    std::vector<int> p;
    for (int cur = v; cur != u; cur = parent[cur]) p.push_back(cur);
    p.push_back(u);
    std::reverse(p.begin(), p.end());
    return p;
  }

  T distance(int u, int v) const {
    auto p = path(u, v);
    T d(0);
    for (size_t i = 0; i + 1 < p.size(); ++i) d += edge_weight(p[i], p[i + 1]);
    return d;
  }

  T point_distance(PointId a, PointId b) const { return distance(vertex_of(a), vertex_of(b)); }

  // True iff the unique paths (a,b) and (c,d) share at least one vertex.
  // Two tree paths meeting anywhere as continuous objects share a vertex,
  // so this matches the continuous reading.
  bool paths_intersect(int a, int b, int c, int d) const {
    auto p1 = path(a, b);
    std::unordered_set<int> s1(p1.begin(), p1.end());
    for (int v : path(c, d))
      if (s1.count(v)) return true;
    return false;
  }

  std::vector<std::pair<std::pair<int, int>, T>> edges() const {
    std::vector<std::pair<std::pair<int, int>, T>> out;
    for (const auto& [u, nb] : adj_)
      for (const auto& [v, w] : nb)
        if (u < v) out.push_back({{u, v}, w});
    std::sort(out.begin(), out.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    return out;
  }

 private:
  int new_vertex(Vertex v) {
    vertices_.push_back(v);
    adj_.emplace(vertex_count() - 1, std::vector<std::pair<int, T>>{});
    return vertex_count() - 1;
  }

  void remove_edge(int u, int v) {
    auto drop = [&](int a, int b) {
      auto& nb = adj_[a];
      nb.erase(std::remove_if(nb.begin(), nb.end(),
                              [&](const auto& e) { return e.first == b; }),
               nb.end());
    };
    drop(u, v);
    drop(v, u);
  }

  std::vector<Vertex> vertices_;
  std::unordered_map<int, std::vector<std::pair<int, T>>> adj_;
  std::unordered_map<PointId, int> point_vertex_;
  int steiner_serial_ = 0;
};

template <class T>
DistortionReport<T> distortion_report(const MetricSpace<T>& space, const WeightedTree<T>& tree) {
  return distortion_report(space,
                           [&](PointId i, PointId j) { return tree.point_distance(i, j); });
}

}  // namespace omet
