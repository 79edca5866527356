#pragma once

#include <fstream>
#include <string>
#include <variant>

#include <json.hpp>

#include "omet/host.hpp"
#include "omet/line_embed.hpp"
#include "omet/metric.hpp"
#include "omet/rational.hpp"
#include "omet/weighted_tree.hpp"

namespace omet {

using json = nlohmann::json;

// Metric file: {"backend": "float"|"rational", "dist": [[...]]},
// rational entries as "p/q" strings.
using AnyMetric = std::variant<MetricSpace<double>, MetricSpace<Rational>>;

inline json metric_to_json(const MetricSpace<double>& s) {
  json m = json::array();
  for (const auto& row : s.to_matrix()) m.push_back(row);
  return {{"backend", "float"}, {"dist", m}};
}

inline json metric_to_json(const MetricSpace<Rational>& s) {
  json m = json::array();
  for (const auto& row : s.to_matrix()) {
    json r = json::array();
    for (const auto& v : row) r.push_back(format_rational(v));
    m.push_back(r);
  }
  return {{"backend", "rational"}, {"dist", m}};
}

inline AnyMetric metric_from_json(const json& j) {
  std::string backend = j.at("backend");
  const json& m = j.at("dist");
  if (backend == "float") {
    std::vector<std::vector<double>> rows;
    for (const auto& r : m) rows.push_back(r.get<std::vector<double>>());
    return MetricSpace<double>::from_matrix(rows);
  }
  if (backend == "rational") {
    std::vector<std::vector<Rational>> rows;
    for (const auto& r : m) {
      std::vector<Rational> row;
      for (const auto& v : r)
        row.push_back(v.is_string() ? parse_rational(v.get<std::string>())
                                    : Rational(v.get<long long>()));
      rows.push_back(std::move(row));
    }
    return MetricSpace<Rational>::from_matrix(rows);
  }
  throw error("unknown metric backend: " + backend);
}

// Host set: {"norm": "...", "coords": [[...]]}.
inline json host_to_json(const HostPointSet<double>& h) {
  json c = json::array();
  for (const auto& row : h.coords) c.push_back(row);
  return {{"norm", norm_name(h.norm)}, {"coords", c}};
}

inline json host_to_json(const HostPointSet<Rational>& h) {
  json c = json::array();
  for (const auto& row : h.coords) {
    json r = json::array();
    for (const auto& v : row) r.push_back(format_rational(v));
    c.push_back(r);
  }
  return {{"norm", norm_name(h.norm)}, {"coords", c}};
}

inline HostPointSet<Rational> rational_host_from_json(const json& j) {
  HostPointSet<Rational> h;
  h.norm = norm_from_name(j.at("norm"));
  for (const auto& r : j.at("coords")) {
    std::vector<Rational> row;
    for (const auto& v : r) row.push_back(parse_rational(v.get<std::string>()));
    h.coords.push_back(std::move(row));
  }
  return h;
}

// Tree file: {"vertices": [{"id", "kind"}], "edges": [[u, v, "w"]]} with
// vertices listed in tree-vertex order.
inline json tree_to_json(const WeightedTree<Rational>& t) {
  json verts = json::array();
  for (int v = 0; v < t.vertex_count(); ++v) {
    const auto& vx = t.vertex(v);
    verts.push_back({{"id", vx.id},
                     {"kind", vx.kind == WeightedTree<Rational>::VertexKind::exposed
                                  ? "exposed"
                                  : "steiner"}});
  }
  json edges = json::array();
  for (const auto& [uv, w] : t.edges())
    edges.push_back({uv.first, uv.second, format_rational(w)});
  return {{"vertices", verts}, {"edges", edges}};
}

inline WeightedTree<Rational> tree_from_json(const json& j) {
  WeightedTree<Rational> t;
  for (const auto& v : j.at("vertices")) {
    if (v.at("kind") == "exposed")
      t.add_exposed(v.at("id").get<int>());
    else
      t.add_steiner();
  }
  for (const auto& e : j.at("edges"))
    t.add_edge(e[0].get<int>(), e[1].get<int>(), parse_rational(e[2].get<std::string>()));
  return t;
}

// Line embedding: {"norm": "line", "pos": ["p/q", ...], "father": [...]}.
template <class T>
json line_to_json(const LineEmbedder<T>& e) {
  json pos = json::array(), father = json::array();
  for (const auto& pl : e.placements()) {
    pos.push_back(format_rational(pl.pos));
    father.push_back(pl.father);
  }
  return {{"norm", "line"}, {"pos", pos}, {"father", father}};
}

inline json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error("cannot open " + path);
  json j;
  in >> j;
  return j;
}

inline void save_json(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw error("cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace omet
