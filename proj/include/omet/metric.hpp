#pragma once

#include <utility>
#include <vector>

#include "omet/errors.hpp"
#include "omet/rational.hpp"

namespace omet {

// Point identifiers are exposure-order indices: the k-th exposed point has id k-1.
using PointId = int;

// d(i,k) <= d(i,j) + d(j,k), exactly for rationals, within relative
// tolerance for the float backend.
template <class T>
bool triangle_holds(const T& dik, const T& dij, const T& djk) {
  if constexpr (scalar_traits<T>::exact) {
    return dik <= dij + djk;
  } else {
    T sum = dij + djk;
    T scale = std::max(dik, sum);
    return dik - sum <= scalar_traits<T>::triangle_rel_tol * scale;
  }
}

// A growing finite metric space. Points are exposed one by one, each with
// its distance row to the previously exposed points; every exposure is
// validated against symmetry/positivity and the triangle inequality.
template <class T>
class MetricSpace {
 public:
  MetricSpace() = default;

  int size() const { return static_cast<int>(d_.size()); }

  const T& dist(PointId i, PointId j) const {
    return i == j ? zero_ : (i < j ? d_[j][i] : d_[i][j]);
  }

  PointId expose(const std::vector<T>& dists) {
    const int n = size();
    if (static_cast<int>(dists.size()) != n)
      throw error("expected " + std::to_string(n) + " distances, got " +
                  std::to_string(dists.size()));
    for (const T& v : dists)
      if (!(v > 0)) throw non_positive_distance();
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        if (!triangle_holds(dists[i], dist(i, j), dists[j]))
          throw triangle_violation(i, n, j);
        if (!triangle_holds(dists[j], dist(i, j), dists[i]))
          throw triangle_violation(j, n, i);
        if (!triangle_holds(dist(i, j), dists[i], dists[j]))
          throw triangle_violation(i, j, n);
      }
    d_.push_back(dists);
    return n;
  }

  // Full post-hoc revalidation over all triples.
  void validate() const {
    const int n = size();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          if (i == j || j == k || i == k) continue;
          if (!triangle_holds(dist(i, k), dist(i, j), dist(j, k)))
            throw triangle_violation(i, j, k);
        }
  }

  static MetricSpace from_matrix(const std::vector<std::vector<T>>& m) {
    MetricSpace s;
    for (size_t i = 0; i < m.size(); ++i) {
      if (m[i].size() != m.size()) throw error("distance matrix is not square");
      std::vector<T> row(m[i].begin(), m[i].begin() + i);
      for (size_t j = 0; j < i; ++j)
        if (m[i][j] != m[j][i]) throw error("distance matrix is not symmetric");
      if (m[i][i] != 0) throw error("nonzero diagonal in distance matrix");
      s.expose(row);
    }
    return s;
  }

  std::vector<std::vector<T>> to_matrix() const {
    const int n = size();
    std::vector<std::vector<T>> m(n, std::vector<T>(n, T(0)));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m[i][j] = dist(i, j);
    return m;
  }

 private:
  // Row i holds distances to points 0..i-1.
  std::vector<std::vector<T>> d_;
  T zero_{0};
};

inline MetricSpace<double> to_float_metric(const MetricSpace<Rational>& s) {
  MetricSpace<double> f;
  for (int i = 0; i < s.size(); ++i) {
    std::vector<double> row;
    for (int j = 0; j < i; ++j) row.push_back(to_double(s.dist(i, j)));
    f.expose(row);
  }
  return f;
}

}  // namespace omet
