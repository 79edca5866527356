#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace omet {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct triangle_violation : error {
  int i, j, k;
  triangle_violation(int i_, int j_, int k_)
      : error("triangle inequality violated on (" + std::to_string(i_) + "," +
              std::to_string(j_) + "," + std::to_string(k_) + ")"),
        i(i_), j(j_), k(k_) {}
};

struct non_positive_distance : error {
  non_positive_distance() : error("distance between distinct points must be positive") {}
};

struct dimension_mismatch : error {
  dimension_mismatch() : error("coordinate tuples have different dimensions") {}
};

struct not_a_tree_metric : error {
  std::array<int, 4> witness;
  explicit not_a_tree_metric(std::array<int, 4> w)
      : error("four-point condition fails on (" + std::to_string(w[0]) + "," +
              std::to_string(w[1]) + "," + std::to_string(w[2]) + "," +
              std::to_string(w[3]) + ")"),
        witness(w) {}
};

struct dimension_unknown : error {
  dimension_unknown() : error("l1->linf lift needs the dimension declared upfront") {}
};

struct certificate_failure : error {
  using error::error;
};

struct non_contraction_breach : error {
  using error::error;
};

struct lipschitz_breach : error {
  using error::error;
};

struct placement_infeasible : error {
  using error::error;
};

struct no_intersecting_pairing : error {
  no_intersecting_pairing()
      : error("no sub-path pairing intersects; contradicts path containment in a tree") {}
};

struct branch_cap_exceeded : error {
  using error::error;
};

struct infeasible_parameters : error {
  using error::error;
};

}  // namespace omet
