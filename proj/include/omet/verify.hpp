#pragma once

#include <functional>
#include <string>
#include <vector>

#include "omet/duel.hpp"
#include "omet/generators.hpp"
#include "omet/line_embed.hpp"
#include "omet/linf_embed.hpp"

namespace omet {

// Property suites shared by `omet verify` and the acceptance harness.
// Each returns {"suite", "trials", "failures": [...], "pass"}.

namespace detail {

struct SuiteLog {
  json summary;
  explicit SuiteLog(std::string name, int trials) {
    summary["suite"] = std::move(name);
    summary["trials"] = trials;
    summary["failures"] = json::array();
  }
  void fail(int trial, const std::string& what) {
    summary["failures"].push_back({{"trial", trial}, {"error", what}});
  }
  json done() {
    summary["pass"] = summary["failures"].empty();
    return summary;
  }
};

template <class T>
void replay_exposures(const MetricSpace<T>& full, const std::function<void(const MetricSpace<T>&)>& step) {
  MetricSpace<T> prefix;
  for (int i = 0; i < full.size(); ++i) {
    std::vector<T> row;
    for (int j = 0; j < i; ++j) row.push_back(full.dist(i, j));
    prefix.expose(row);
    step(prefix);
  }
}

inline Rational pow2(int e) {
  return e >= 0 ? Rational(BigInt(1) << e) : Rational(1, BigInt(1) << (-e));
}

// mixed rational/float generator family for greedy-tree suites
inline MetricSpace<Rational> random_rational_metric(int n, Rng& rng, int flavor) {
  return flavor % 2 == 0 ? random_cycle_metric(n, rng) : random_tree_metric(n, rng);
}

}  // namespace detail

// Greedy tree: per-step expansion <= 2^{k-1}-1 and the tree metric
// dominates d (exactly on rationals, within 1e-9 relative on floats).
inline json verify_tree_bounds(uint64_t seed, int trials, int n) {
  detail::SuiteLog log("tree-bounds", trials);
  for (int t = 0; t < trials; ++t) {
    Rng rng = trial_rng(seed, t);
    try {
      if (t % 3 == 2) {  // float backend lane
        auto space = random_l2_metric(n, rng);
        GreedyTreeEmbedder<double> emb;
        detail::replay_exposures<double>(space, [&](const MetricSpace<double>& prefix) {
          emb.extend(prefix);
          const int k = prefix.size();
          if (k < 2) return;
          auto rep = distortion_report(prefix, emb.tree());
          double bound = std::pow(2.0, k - 1) - 1;
          if (rep.expansion > bound) throw certificate_failure("expansion bound");
          for (int i = 0; i < k; ++i)
            for (int j = 0; j < i; ++j)
              if (emb.tree().point_distance(i, j) < prefix.dist(i, j) * (1 - 1e-9))
                throw certificate_failure("domination");
        });
      } else {
        auto space = detail::random_rational_metric(n, rng, t % 3);
        GreedyTreeEmbedder<Rational> emb;
        detail::replay_exposures<Rational>(space, [&](const MetricSpace<Rational>& prefix) {
          emb.extend(prefix);
          const int k = prefix.size();
          if (k < 2) return;
          auto rep = distortion_report(prefix, emb.tree());
          if (rep.expansion > detail::pow2(k - 1) - 1) throw certificate_failure("expansion bound");
          for (int i = 0; i < k; ++i)
            for (int j = 0; j < i; ++j)
              if (emb.tree().point_distance(i, j) < prefix.dist(i, j))
                throw certificate_failure("domination");
        });
      }
    } catch (const std::exception& e) {
      log.fail(t, e.what());
    }
  }
  return log.done();
}

// Line embedder: per-step expansion <= 2^{k+1}, final contraction
// <= n 2^{n+1}, and the interval-gap claim, all exact.
inline json verify_line_bounds(uint64_t seed, int trials, int n) {
  detail::SuiteLog log("line-bounds", trials);
  for (int t = 0; t < trials; ++t) {
    Rng rng = trial_rng(seed, t);
    try {
      auto space = detail::random_rational_metric(n, rng, t);
      LineEmbedder<Rational> emb;
      detail::replay_exposures<Rational>(space, [&](const MetricSpace<Rational>& prefix) {
        emb.extend(prefix);
        const int k = prefix.size();
        if (k < 2) return;
        auto rep = distortion_report(prefix, emb.embedding());
        if (rep.expansion > detail::pow2(k + 1)) throw certificate_failure("expansion bound");
        emb.check_gap_claims();
      });
      auto rep = distortion_report(space, emb.embedding());
      if (rep.infinite_contraction || rep.contraction > n * detail::pow2(n + 1))
        throw certificate_failure("contraction bound");
    } catch (const std::exception& e) {
      log.fail(t, e.what());
    }
  }
  return log.done();
}

// Branching family in guarantee mode: every directed pair certificate holds
// and the finalized linf distortion is at most 1/(1-epsilon).
inline json verify_linf_certificates(uint64_t seed, int trials, int n, const Rational& epsilon,
                                     size_t max_branches = 10'000'000) {
  detail::SuiteLog log("linf-certificates", trials);
  Rational delta = delta_for_epsilon(n, epsilon);
  for (int t = 0; t < trials; ++t) {
    Rng rng = trial_rng(seed, t);
    try {
      auto space = random_cycle_metric(n, rng);
      BranchFamily fam({delta, true, max_branches});
      fam.run(space);
      for (const auto& ps : pair_certificate(fam, space))
        if (!ps.pass) throw certificate_failure("pair certificate");
      auto rep = distortion_report(space, [&](PointId i, PointId j) { return fam.host_dist(i, j); });
      if (rep.expansion > 1) throw certificate_failure("expansion > 1");
      if (rep.infinite_contraction || rep.distortion() > 1 / (1 - epsilon))
        throw certificate_failure("distortion above 1/(1-eps)");
    } catch (const std::exception& e) {
      log.fail(t, e.what());
    }
  }
  return log.done();
}

// Exact Steiner realization, l1^{n-1} isometry, and (n <= 10) the linf lift.
inline json verify_isometry(uint64_t seed, int trials, int n) {
  detail::SuiteLog log("isometry", trials);
  for (int t = 0; t < trials; ++t) {
    Rng rng = trial_rng(seed, t);
    try {
      auto space = random_tree_metric(n, rng);
      SteinerTreeEmbedder<Rational> emb;  // strict: asserts exactness internally
      emb.run(space);
      if (emb.l1_dimension() > n - 1) throw certificate_failure("l1 dimension exceeds n-1");
      auto l1 = emb.l1_embedding();
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j)
          if (l1.distance(i, j) != space.dist(i, j)) throw certificate_failure("l1 not isometric");
      if (n <= 10 && n >= 2) {
        std::vector<std::vector<Rational>> tuples;
        for (int i = 0; i < n; ++i) tuples.push_back(emb.l1_coordinate(i));
        auto lift = l1_to_linf_lift(tuples, n - 1);
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < i; ++j)
            if (lift.distance(i, j) != space.dist(i, j))
              throw certificate_failure("linf lift not isometric");
      }
    } catch (const std::exception& e) {
      log.fail(t, e.what());
    }
  }
  return log.done();
}

// Small duels of all three adversaries; every transcript certificate must pass.
inline json verify_adversary_certificates(uint64_t seed, int trials) {
  detail::SuiteLog log("adversary-certificates", trials);
  for (int t = 0; t < trials; ++t) {
    try {
      uint64_t s = trial_rng(seed, t).state;
      json configs = json::array({
          {{"adversary", "tree"}, {"embedder", "greedy-tree"}, {"phases", 3}},
          {{"adversary", "tree"}, {"embedder", "steiner-tree"}, {"phases", 3}},
          {{"adversary", "l2"}, {"embedder", "l2-placer"}, {"generations", 3}, {"seed", s}},
          {{"adversary", "linf-dim"}, {"embedder", "random-feasible"}, {"k", 2}, {"seed", s}},
          {{"adversary", "linf-dim"}, {"embedder", "branch-follower"}, {"k", 2}},
      });
      for (const auto& c : configs) {
        Transcript tr = run_duel(c);
        if (!tr.all_passed()) throw certificate_failure(c.dump());
      }
    } catch (const std::exception& e) {
      log.fail(t, e.what());
    }
  }
  return log.done();
}

}  // namespace omet
