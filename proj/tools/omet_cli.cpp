// Command line front end: metric ingestion, online embedding runs, duels,
// property suites, and transcript reports.

#include <cstdio>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "omet/omet.hpp"

using namespace omet;

namespace {

struct EmbedArgs {
  std::string algo, metric_file, out_file;
  std::string epsilon, delta;
  bool dedup = true;
  size_t max_branches = 10'000'000;
};

int run_embed(const EmbedArgs& a) {
  json mj = load_json(a.metric_file);
  AnyMetric any = metric_from_json(mj);
  json report;
  json out;

  auto need_rational = [&]() -> const MetricSpace<Rational>& {
    if (!std::holds_alternative<MetricSpace<Rational>>(any))
      throw error("algorithm '" + a.algo + "' requires the rational backend");
    return std::get<MetricSpace<Rational>>(any);
  };

  if (a.algo == "greedy-tree" || a.algo == "steiner-tree" || a.algo == "line") {
    const auto& space = need_rational();
    if (space.size() > 64) throw infeasible_parameters("greedy-tree/line support n <= 64");
    if (a.algo == "line") {
      LineEmbedder<Rational> emb;
      emb.run(space);
      out = line_to_json(emb);
      report["distortion"] = distortion_json(distortion_report(space, emb.embedding()));
    } else if (a.algo == "greedy-tree") {
      GreedyTreeEmbedder<Rational> emb;
      emb.run(space);
      out = tree_to_json(emb.tree());
      report["distortion"] = distortion_json(distortion_report(space, emb.tree()));
    } else {
      SteinerTreeEmbedder<Rational> emb;
      emb.run(space);
      out = tree_to_json(emb.tree());
      report["distortion"] = distortion_json(distortion_report(space, emb.tree()));
      report["l1_dimension"] = emb.l1_dimension();
    }
  } else if (a.algo == "linf") {
    const auto& space = need_rational();
    if (!a.epsilon.empty() && !a.delta.empty())
      throw infeasible_parameters("--epsilon and --delta are mutually exclusive");
    Rational delta;
    bool guarantee = !a.epsilon.empty();
    if (guarantee) {
      if (space.size() > 3)
        throw infeasible_parameters("guarantee mode (theoretical delta) supports n <= 3");
      delta = delta_for_epsilon(space.size(), parse_rational(a.epsilon));
    } else {
      if (a.delta.empty()) throw infeasible_parameters("linf needs --epsilon or --delta");
      if (space.size() > 6) throw infeasible_parameters("empirical mode supports n <= 6");
      delta = parse_rational(a.delta);
    }
    BranchFamily fam({delta, a.dedup, a.max_branches});
    fam.run(space);
    out = host_to_json(fam.finalize());
    report["delta"] = format_rational(delta);
    report["branches"] = fam.branches().size();
    report["dimension_bound"] = dimension_bound(space.size(), delta).str();
    report["distortion"] = distortion_json(
        distortion_report(space, [&](PointId i, PointId j) { return fam.host_dist(i, j); }));
    if (guarantee) {
      bool all = true;
      for (const auto& ps : pair_certificate(fam, space)) all = all && ps.pass;
      report["pair_certificates_pass"] = all;
      if (!all) {
        std::cout << report.dump(2) << "\n";
        return 1;
      }
    }
  } else {
    throw error("unknown algorithm: " + a.algo);
  }
  save_json(a.out_file, out);
  std::cout << report.dump(2) << "\n";
  return 0;
}

int run_report(const std::string& transcript_file, const std::string& csv_file, bool replay) {
  Transcript tr = Transcript::from_json(load_json(transcript_file));
  std::printf("%-5s %-10s %-28s %-22s %-22s %s\n", "step", "event", "name", "bound", "measured",
              "pass");
  int step = 0;
  std::vector<std::array<std::string, 5>> rows;
  auto cell = [](const json& j) {
    return j.is_string() ? j.get<std::string>() : j.dump();
  };
  for (const auto& e : tr.events) {
    std::string type = e.at("type");
    std::string name, bound, measured, pass;
    if (type == "certify") {
      name = e.at("name");
      bound = cell(e.at("bound"));
      measured = cell(e.at("measured"));
      pass = e.at("pass").get<bool>() ? "1" : "0";
    } else if (type == "expose" || type == "respond") {
      name = "point " + std::to_string(e.at("point").get<int>());
    } else {
      json d = e;
      d.erase("type");
      name = d.dump();
      if (name.size() > 28) name = name.substr(0, 25) + "...";
    }
    std::printf("%-5d %-10s %-28s %-22s %-22s %s\n", step, type.c_str(), name.c_str(),
                bound.c_str(), measured.c_str(), pass.c_str());
    rows.push_back({std::to_string(step), type, bound, measured, pass});
    ++step;
  }
  std::printf("report: %s\n", tr.report.dump().c_str());
  if (!csv_file.empty()) {
    std::ofstream csv(csv_file);
    csv << "step,event,bound,measured,pass\n";
    for (const auto& r : rows) csv << r[0] << "," << r[1] << "," << r[2] << "," << r[3] << ","
                                   << r[4] << "\n";
  }
  if (replay) {
    bool ok = replay_matches(tr);
    std::printf("replay: %s\n", ok ? "identical" : "MISMATCH");
    if (!ok) return 1;
  }
  return tr.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"online metric embeddings: embedders, adversaries, certificates"};
  app.require_subcommand(1);

  EmbedArgs ea;
  std::string dedup_str = "on";
  auto* embed = app.add_subcommand("embed", "run an online embedder over a metric file");
  embed->add_option("--algo", ea.algo, "greedy-tree|steiner-tree|line|linf")->required();
  embed->add_option("--metric", ea.metric_file, "metric JSON file")->required();
  embed->add_option("--out", ea.out_file, "output embedding file")->required();
  embed->add_option("--epsilon", ea.epsilon, "guarantee-mode epsilon (linf)");
  embed->add_option("--delta", ea.delta, "empirical-mode delta (linf)");
  embed->add_option("--dedup", dedup_str, "on|off (linf)");
  embed->add_option("--max-branches", ea.max_branches, "hard branch cap (linf)");

  json dc;
  std::string adversary, opponent, delta_opt, out_file;
  int phases = 3, generations = 3, kdim = 2, dim = -1, restarts = 40;
  uint64_t seed = 0;
  auto* duel = app.add_subcommand("duel", "run an adversary-vs-embedder duel");
  duel->add_option("--adversary", adversary, "tree|l2|linf-dim")->required();
  duel->add_option("--embedder", opponent, "opponent id")->required();
  duel->add_option("--phases", phases, "tree adversary phases");
  duel->add_option("--generations", generations, "l2 adversary generations");
  duel->add_option("--k", kdim, "linf-dim host dimension");
  duel->add_option("--dim", dim, "l2 placer dimension");
  duel->add_option("--restarts", restarts, "l2 placer restarts");
  duel->add_option("--seed", seed, "opponent seed");
  duel->add_option("--delta", delta_opt, "branch-follower delta");
  duel->add_option("--out", out_file, "transcript output file")->required();

  std::string suite, eps_opt = "1/2";
  int trials = 20, npts = 6;
  auto* verify = app.add_subcommand("verify", "run a property suite");
  verify->add_option("--suite", suite,
                     "tree-bounds|line-bounds|linf-certificates|isometry|adversary-certificates")
      ->required();
  verify->add_option("--trials", trials, "trial count");
  verify->add_option("--seed", seed, "master seed");
  verify->add_option("--n", npts, "points per trial");
  verify->add_option("--epsilon", eps_opt, "epsilon for linf-certificates");

  std::string transcript_file, csv_file;
  bool replay = false;
  auto* report = app.add_subcommand("report", "render a transcript");
  report->add_option("--transcript", transcript_file, "transcript file")->required();
  report->add_option("--csv", csv_file, "CSV output file");
  report->add_flag("--replay", replay, "re-run the config and compare bit-exactly");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*embed) {
      ea.dedup = dedup_str != "off";
      return run_embed(ea);
    }
    if (*duel) {
      json config{{"adversary", adversary}, {"embedder", opponent}};
      if (adversary == "tree") config["phases"] = phases;
      if (adversary == "l2") {
        config["generations"] = generations;
        config["dim"] = dim > 0 ? dim : 2 * generations;
        config["restarts"] = restarts;
        config["seed"] = seed;
      }
      if (adversary == "linf-dim") {
        config["k"] = kdim;
        if (opponent == "random-feasible") config["seed"] = seed;
        if (!delta_opt.empty()) config["delta"] = delta_opt;
      }
      Transcript tr = run_duel(config);
      save_json(out_file, tr.to_json());
      std::cout << tr.report.dump(2) << "\n";
      return tr.all_passed() ? 0 : 1;
    }
    if (*verify) {
      json summary;
      if (suite == "tree-bounds")
        summary = verify_tree_bounds(seed, trials, npts);
      else if (suite == "line-bounds")
        summary = verify_line_bounds(seed, trials, npts);
      else if (suite == "linf-certificates")
        summary = verify_linf_certificates(seed, trials, npts, parse_rational(eps_opt));
      else if (suite == "isometry")
        summary = verify_isometry(seed, trials, npts);
      else if (suite == "adversary-certificates")
        summary = verify_adversary_certificates(seed, trials);
      else
        throw error("unknown suite: " + suite);
      std::cout << summary.dump(2) << "\n";
      return summary["pass"].get<bool>() ? 0 : 1;
    }
    if (*report) return run_report(transcript_file, csv_file, replay);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
