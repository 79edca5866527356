#pragma once

#include <array>
#include <optional>
#include <vector>

#include "omet/host.hpp"
#include "omet/weighted_tree.hpp"

namespace omet {

namespace detail {

// Among the three pairing sums of a quadruple the two largest must coincide.
template <class T>
bool four_point_ok(const T& s1, const T& s2, const T& s3) {
  T a = s1, b = s2, c = s3;
  if (a < b) std::swap(a, b);
  if (b < c) std::swap(b, c);
  if (a < b) std::swap(a, b);
  if constexpr (scalar_traits<T>::exact) {
    return a == b;
  } else {
    return a - b <= 1e-9 * std::max(a, T(1));
  }
}

}  // namespace detail

// Returns a violating quadruple, or nullopt if the space satisfies the
// four-point condition (i.e. is a tree metric).
template <class T>
std::optional<std::array<int, 4>> four_point_check(const MetricSpace<T>& space) {
  const int n = space.size();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          T s1 = space.dist(a, b) + space.dist(c, d);
          T s2 = space.dist(a, c) + space.dist(b, d);
          T s3 = space.dist(a, d) + space.dist(b, c);
          if (!detail::four_point_ok(s1, s2, s3)) return std::array<int, 4>{a, b, c, d};
        }
  return std::nullopt;
}

// Online exact realization of tree metrics by a weighted tree with Steiner
// points, together with the coordinate bookkeeping that yields an isometric
// l1^{n-1} embedding. Adjacent tree vertices differ in exactly one
// coordinate; attaching a point spends one fresh coordinate.
//
// strict mode guards every exposure with the four-point condition and
// asserts the realization is exact. relaxed mode applies the same
// attachment rule best-effort to arbitrary metrics (used as a Steiner
// opponent in duels): Gromov products decide the attachment, offsets are
// rescaled onto the actual tree path.
template <class T>
class SteinerTreeEmbedder {
 public:
  enum class Mode { strict, relaxed };

  struct Attachment {
    PointId anchor_u = -1, anchor_v = -1;  // pair defining the Steiner position
    T weight{0};                           // edge weight to the new point (0 = merge)
    int vertex = -1;                       // tree vertex of the new point
  };

  explicit SteinerTreeEmbedder(Mode mode = Mode::strict) : mode_(mode) {}

  const WeightedTree<T>& tree() const { return tree_; }
  int exposed_count() const { return exposed_; }
  int l1_dimension() const { return dim_; }
  const std::vector<Attachment>& attachments() const { return attachments_; }

  std::vector<T> l1_coordinate(PointId p) const {
    std::vector<T> c = coords_[tree_.vertex_of(p)];
    c.resize(dim_, T(0));
    return c;
  }

  HostPointSet<T> l1_embedding() const {
    HostPointSet<T> h;
    h.norm = Norm::l1;
    for (PointId p = 0; p < exposed_; ++p) h.coords.push_back(l1_coordinate(p));
    return h;
  }

  void extend(const MetricSpace<T>& space) {
    const PointId x = exposed_;
    if (x >= space.size()) throw error("no new point to attach");
    if (mode_ == Mode::strict) check_new_quadruples(space, x);
    Attachment att;
    att.anchor_u = att.anchor_v = -1;
    if (x == 0) {
      att.vertex = tree_.add_exposed(0);
      coords_.push_back({});
    } else if (x == 1) {
      att.vertex = tree_.add_exposed(1);
      att.anchor_u = 0;
      att.weight = space.dist(0, 1);
      tree_.add_edge(tree_.vertex_of(0), att.vertex, att.weight);
      coords_.push_back({att.weight});
      dim_ = 1;
    } else {
      att = attach(space, x);
    }
    attachments_.push_back(att);
    ++exposed_;
    if (mode_ == Mode::strict) {
      for (PointId y = 0; y < x; ++y)
        if (tree_.point_distance(x, y) != space.dist(x, y))
          throw certificate_failure("tree realization is not exact on pair (" +
                                    std::to_string(x) + "," + std::to_string(y) + ")");
    }
  }

  void run(const MetricSpace<T>& space) {
    while (exposed_ < space.size()) extend(space);
  }

 private:
  void check_new_quadruples(const MetricSpace<T>& space, PointId x) {
    for (int a = 0; a < x; ++a)
      for (int b = a + 1; b < x; ++b)
        for (int c = b + 1; c < x; ++c) {
          T s1 = space.dist(a, b) + space.dist(c, x);
          T s2 = space.dist(a, c) + space.dist(b, x);
          T s3 = space.dist(a, x) + space.dist(b, c);
          if (!detail::four_point_ok(s1, s2, s3))
            throw not_a_tree_metric({a, b, c, x});
        }
  }

  // Chooses the anchor pair: minimal Gromov product first, then maximal
  // d(u,v), then lexicographic.
  std::pair<PointId, PointId> choose_pair(const MetricSpace<T>& space, PointId x) const {
    PointId bu = 0, bv = 1;
    T bg = gromov(space, 0, 1, x);
    for (PointId u = 0; u < x; ++u)
      for (PointId v = u + 1; v < x; ++v) {
        T g = gromov(space, u, v, x);
        if (g < bg || (g == bg && space.dist(u, v) > space.dist(bu, bv))) {
          bu = u;
          bv = v;
          bg = g;
        }
      }
    return {bu, bv};
  }

  static T gromov(const MetricSpace<T>& space, PointId u, PointId v, PointId x) {
    return (space.dist(u, x) + space.dist(v, x) - space.dist(u, v)) / 2;
  }

  Attachment attach(const MetricSpace<T>& space, PointId x) {
    auto [u, v] = choose_pair(space, x);
    T g = gromov(space, u, v, x);
    T off = space.dist(u, x) - g;  // distance from u along the u-v path
    int vu = tree_.vertex_of(u), vv = tree_.vertex_of(v);
    T path_len = tree_.distance(vu, vv);
    if (mode_ == Mode::relaxed && path_len != space.dist(u, v)) {
      off = off * path_len / space.dist(u, v);
    }
    if (off < 0) off = T(0);
    if (off > path_len) off = path_len;

    int s = locate(vu, vv, off);
    Attachment att;
    att.anchor_u = u;
    att.anchor_v = v;
    att.weight = g;
    if (g == 0) {
      const auto& sv = tree_.vertex(s);
      if (sv.kind == WeightedTree<T>::VertexKind::steiner) {
        tree_.mark_exposed(s, x);  // tuple already correct, position unchanged
        att.vertex = s;
        return att;
      }
      if (sv.id != x) {
        // Relaxed-mode corner: the position lands on another exposed point
        // although d(x, that point) > 0. Fall back to a greedy attachment.
        att.weight = space.dist(x, sv.id);
        att.vertex = tree_.add_exposed(x);
        tree_.add_edge(s, att.vertex, att.weight);
        std::vector<T> c = coords_[s];
        c.resize(dim_, T(0));
        c.push_back(att.weight);
        coords_.push_back(std::move(c));
        ++dim_;
        return att;
      }
      att.vertex = s;  // x itself became the split vertex
      return att;
    }
    att.vertex = tree_.add_exposed(x);
    tree_.add_edge(s, att.vertex, g);
    std::vector<T> c = coords_[s];
    c.resize(dim_, T(0));
    c.push_back(g);
    coords_.push_back(std::move(c));
    ++dim_;
    return att;
  }

  // Finds or creates the vertex at distance off from `from` along the path
  // to `to`. A mid-edge position splits the edge; when the split position
  // is where the new exposed point itself sits (weight-0 attachment), the
  // caller detects that via vertex identity.
  int locate(int from, int to, T off) {
    if (off == 0) return from;
    auto p = tree_.path(from, to);
    for (size_t i = 0; i + 1 < p.size(); ++i) {
      T w = tree_.edge_weight(p[i], p[i + 1]);
      if (off < w) {
        int m = tree_.split_edge(p[i], p[i + 1], off, WeightedTree<T>::VertexKind::steiner);
        coords_.push_back(interpolate(p[i], p[i + 1], off));
        return m;
      }
      off -= w;
      if (off == 0) return p[i + 1];
    }
    return p.back();
  }

  // Coordinates of a point at distance off from a inside edge (a,b):
  // adjacent vertices differ in a single coordinate, move along it.
  std::vector<T> interpolate(int a, int b, const T& off) {
    std::vector<T> ca = coords_[a], cb = coords_[b];
    size_t dmax = std::max(ca.size(), cb.size());
    ca.resize(dmax, T(0));
    cb.resize(dmax, T(0));
    int diff = -1;
    for (size_t i = 0; i < dmax; ++i)
      if (ca[i] != cb[i]) {
        if (diff != -1) throw certificate_failure("adjacent vertices differ in >1 coordinate");
        diff = static_cast<int>(i);
      }
    if (diff == -1) throw certificate_failure("adjacent vertices share all coordinates");
    std::vector<T> cm = ca;
    cm[diff] += (cb[diff] > ca[diff] ? off : -off);
    return cm;
  }

  Mode mode_;
  WeightedTree<T> tree_;
  std::vector<std::vector<T>> coords_;  // per tree vertex, padded logically with zeros
  std::vector<Attachment> attachments_;
  int exposed_ = 0;
  int dim_ = 0;
};

// Isometry l1^D -> linf^{2^{D-1}}: coordinate per sign vector with the
// first sign fixed to +1. The lift of a point never changes once emitted,
// so the map is online when D is known upfront.
template <class T>
HostPointSet<T> l1_to_linf_lift(const std::vector<std::vector<T>>& tuples, int D) {
  if (D < 1) throw dimension_unknown();
  HostPointSet<T> h;
  h.norm = Norm::linf;
  const size_t dims = size_t(1) << (D - 1);
  for (const auto& t : tuples) {
    if (static_cast<int>(t.size()) > D) throw dimension_mismatch();
    std::vector<T> x = t;
    x.resize(D, T(0));
    std::vector<T> out(dims, T(0));
    for (size_t mask = 0; mask < dims; ++mask) {
      T s = x[0];
      for (int i = 1; i < D; ++i)
        s += ((mask >> (i - 1)) & 1) ? -x[i] : x[i];
      out[mask] = s;
    }
    h.coords.push_back(std::move(out));
  }
  return h;
}

}  // namespace omet
