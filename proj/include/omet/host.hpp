#pragma once

#include <cmath>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "omet/errors.hpp"
#include "omet/metric.hpp"

namespace omet {

enum class Norm { l1, l2, linf, line, tree };

inline std::string norm_name(Norm n) {
  switch (n) {
    case Norm::l1: return "l1";
    case Norm::l2: return "l2";
    case Norm::linf: return "linf";
    case Norm::line: return "line";
    case Norm::tree: return "tree";
  }
  return "?";
}

inline Norm norm_from_name(const std::string& s) {
  if (s == "l1") return Norm::l1;
  if (s == "l2") return Norm::l2;
  if (s == "linf") return Norm::linf;
  if (s == "line") return Norm::line;
  if (s == "tree") return Norm::tree;
  throw error("unknown norm tag: " + s);
}

template <class T>
T host_distance(const std::vector<T>& a, const std::vector<T>& b, Norm norm) {
  if (a.size() != b.size()) throw dimension_mismatch();
  switch (norm) {
    case Norm::l1:
    case Norm::line: {
      T s(0);
      for (size_t i = 0; i < a.size(); ++i) s += scalar_traits<T>::abs(a[i] - b[i]);
      return s;
    }
    case Norm::linf: {
      T m(0);
      for (size_t i = 0; i < a.size(); ++i) {
        T v = scalar_traits<T>::abs(a[i] - b[i]);
        if (v > m) m = v;
      }
      return m;
    }
    case Norm::l2: {
      double s = 0;
      for (size_t i = 0; i < a.size(); ++i) {
        double v = to_double(a[i]) - to_double(b[i]);
        s += v * v;
      }
      // Exact for Pythagorean inputs; the l2 lane is float-backed throughout.
      return T(std::sqrt(s));
    }
    case Norm::tree:
      throw error("tree-tagged host sets delegate distance to a WeightedTree");
  }
  throw error("unreachable norm");
}

template <class T>
struct HostPointSet {
  Norm norm = Norm::l1;
  std::vector<std::vector<T>> coords;

  T distance(PointId i, PointId j) const { return host_distance(coords[i], coords[j], norm); }
};

template <class T>
struct DistortionReport {
  T expansion{0};
  T contraction{0};
  bool infinite_contraction = false;
  std::pair<PointId, PointId> expansion_pair{-1, -1};
  std::pair<PointId, PointId> contraction_pair{-1, -1};

  T distortion() const { return expansion * contraction; }
};

// Expansion / contraction over all pairs, host distances supplied by a callable.
// Coinciding images are reported as infinite contraction, not an error.
template <class T, class HostDist>
  requires std::is_invocable_v<HostDist, PointId, PointId>
DistortionReport<T> distortion_report(const MetricSpace<T>& space, HostDist&& hd) {
  DistortionReport<T> r;
  const int n = space.size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      T h = hd(i, j);
      if (h == 0) {
        r.infinite_contraction = true;
        r.contraction_pair = {i, j};
        continue;
      }
      T exp = h / space.dist(i, j);
      if (exp > r.expansion) {
        r.expansion = exp;
        r.expansion_pair = {i, j};
      }
      T con = space.dist(i, j) / h;
      if (!r.infinite_contraction && con > r.contraction) {
        r.contraction = con;
        r.contraction_pair = {i, j};
      }
    }
  return r;
}

template <class T>
DistortionReport<T> distortion_report(const MetricSpace<T>& space, const HostPointSet<T>& host) {
  if (static_cast<int>(host.coords.size()) != space.size())
    throw error("host point count differs from metric point count");
  return distortion_report(space, [&](PointId i, PointId j) { return host.distance(i, j); });
}

}  // namespace omet
