#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "omet/host.hpp"
#include "omet/rational.hpp"

namespace omet {

using json = nlohmann::json;

inline json rational_json(const Rational& q) { return format_rational(q); }

inline json rationals_json(const std::vector<Rational>& v) {
  json a = json::array();
  for (const auto& q : v) a.push_back(format_rational(q));
  return a;
}

// Ordered event log of an adversary-vs-embedder game. Replayable: the
// config carries everything needed to re-run the duel deterministically.
struct Transcript {
  json config = json::object();
  std::vector<json> events;
  json report = json::object();

  void expose(PointId p, json dists) {
    events.push_back({{"type", "expose"}, {"point", p}, {"dists", std::move(dists)}});
  }
  void respond(PointId p, json values) {
    events.push_back({{"type", "respond"}, {"point", p}, {"values", std::move(values)}});
  }
  void decide(json info) {
    info["type"] = "decide";
    events.push_back(std::move(info));
  }
  bool certify(const std::string& name, json bound, json measured, bool pass) {
    events.push_back({{"type", "certify"},
                      {"name", name},
                      {"bound", std::move(bound)},
                      {"measured", std::move(measured)},
                      {"pass", pass}});
    return pass;
  }

  bool all_passed() const {
    for (const auto& e : events)
      if (e["type"] == "certify" && !e["pass"].get<bool>()) return false;
    return true;
  }

  json to_json() const {
    return {{"config", config}, {"events", events}, {"report", report}};
  }

  static Transcript from_json(const json& j) {
    Transcript t;
    t.config = j.at("config");
    t.events = j.at("events").get<std::vector<json>>();
    t.report = j.at("report");
    return t;
  }
};

template <class T>
json distortion_json(const DistortionReport<T>& r) {
  json j;
  if constexpr (scalar_traits<T>::exact) {
    j["expansion"] = format_rational(r.expansion);
    j["contraction"] = r.infinite_contraction ? json("inf") : json(format_rational(r.contraction));
    j["distortion"] = r.infinite_contraction ? json("inf") : json(format_rational(r.distortion()));
  } else {
    j["expansion"] = r.expansion;
    j["contraction"] = r.infinite_contraction
                           ? json("inf")
                           : json(r.contraction);
    j["distortion"] = r.infinite_contraction ? json("inf") : json(r.distortion());
  }
  j["expansion_pair"] = {r.expansion_pair.first, r.expansion_pair.second};
  j["contraction_pair"] = {r.contraction_pair.first, r.contraction_pair.second};
  return j;
}

}  // namespace omet
