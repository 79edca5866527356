#pragma once

#include <string>

#include "omet/adversary_l2.hpp"
#include "omet/adversary_linf.hpp"
#include "omet/adversary_tree.hpp"
#include "omet/baselines.hpp"
#include "omet/greedy_tree.hpp"
#include "omet/steiner_tree.hpp"

namespace omet {

// Dispatch table from a duel config to a finished transcript. The config is
// embedded into the transcript, which makes transcripts replayable: running
// the same config again must reproduce the identical transcript.
inline Transcript run_duel(const json& config) {
  std::string adv = config.at("adversary");
  std::string opp = config.value("embedder", "");
  Transcript tr;
  if (adv == "tree") {
    int phases = config.at("phases");
    if (phases < 1 || phases > 16) throw infeasible_parameters("tree duels support 1..16 phases");
    if (opp == "greedy-tree") {
      GreedyTreeEmbedder<Rational> emb;
      tr = tree_adversary_run(emb, phases);
    } else if (opp == "steiner-tree") {
      SteinerTreeEmbedder<Rational> emb(SteinerTreeEmbedder<Rational>::Mode::relaxed);
      tr = tree_adversary_run(emb, phases);
    } else {
      throw error("tree adversary needs a tree-introspectable opponent, got: " + opp);
    }
  } else if (adv == "l2") {
    int generations = config.at("generations");
    if (generations < 2 || generations > 6)
      throw infeasible_parameters("l2 duels support 2..6 generations");
    if (opp != "l2-placer") throw error("l2 adversary plays against l2-placer, got: " + opp);
    int dim = config.value("dim", 2 * generations);
    int restarts = config.value("restarts", 40);
    uint64_t seed = config.value("seed", 0);
    L2Placer emb(dim, restarts, seed);
    tr = l2_adversary_run(emb, generations);
  } else if (adv == "linf-dim") {
    int k = config.at("k");
    if (k < 1 || k > 64) throw infeasible_parameters("linf-dim duels support k in 1..64");
    if (opp == "random-feasible") {
      RandomFeasiblePlacer emb(k, config.value("seed", 0));
      tr = linf_dim_adversary_run(emb, k);
    } else if (opp == "branch-follower") {
      Rational delta = config.contains("delta")
                           ? parse_rational(config.at("delta").get<std::string>())
                           : Rational(1, 20);
      BranchFollowerPlacer emb(k, delta);
      tr = linf_dim_adversary_run(emb, k);
    } else {
      throw error("unknown linf-dim opponent: " + opp);
    }
  } else {
    throw error("unknown adversary: " + adv);
  }
  tr.config = config;
  return tr;
}

// Re-runs the transcript's config and checks bit-identical reproduction.
inline bool replay_matches(const Transcript& recorded) {
  Transcript again = run_duel(recorded.config);
  return again.to_json() == recorded.to_json();
}

}  // namespace omet
