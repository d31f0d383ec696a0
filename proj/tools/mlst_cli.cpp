// Command-line front end: generate instances, run solvers, query the exact
// oracle, verify structural properties, and drive experiment plans. Thin
// wrappers only; everything algorithmic lives in the library.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "mlst/evolutionary.hpp"
#include "mlst/harness.hpp"
#include "mlst/heuristics.hpp"
#include "mlst/instances.hpp"
#include "mlst/oracle.hpp"
#include "mlst/rng.hpp"

namespace {

using namespace mlst;

TieBreakPolicy parse_tie(const std::string& name, const std::optional<std::uint64_t>& seed) {
  TieBreakPolicy tie;
  if (name == "lowest")
    tie.kind = TieBreakKind::lowest_index;
  else if (name == "highest")
    tie.kind = TieBreakKind::highest_index;
  else if (name == "random") {
    tie.kind = TieBreakKind::seeded_random;
    if (!seed) fail(Errc::usage, "--tie random requires --seed");
    tie.seed = *seed;
  } else {
    fail(Errc::usage, "unknown tie-break '" + name + "'");
  }
  return tie;
}

void print_bundle_info(const InstanceBundle& bundle) {
  std::cout << "n = " << bundle.graph.n() << '\n';
  std::cout << "k = " << bundle.graph.k() << '\n';
  std::cout << "m = " << bundle.graph.m() << '\n';
  if (bundle.known_opt)
    std::cout << "opt = " << bundle.known_opt->value << " (" << bundle.known_opt->witness.to_string() << ")\n";
}

void print_solution(const LabeledGraph& g, const LabelSubset& solution, long long iterations,
                    const char* terminated_by) {
  std::cout << "solution = " << solution.to_string() << '\n';
  std::cout << "cardinality = " << solution.count() << '\n';
  std::cout << "feasible = " << (is_feasible(g, solution) ? "true" : "false") << '\n';
  std::cout << "iterations = " << iterations << '\n';
  if (terminated_by) std::cout << "terminated-by = " << terminated_by << '\n';
}

void write_record(const RunRecord& rec, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::io_error, "cannot write " + path);
  out << "seed = " << rec.seed << '\n';
  out << "iterations = " << rec.iterations_used << '\n';
  out << "best = " << rec.best_solution.to_string() << '\n';
  out << "best-vector = " << rec.best_vector.components << ' ' << rec.best_vector.labels_used << '\n';
  out << "best-fitness = " << rec.best_fitness << '\n';
  out << "terminated-by = " << (rec.terminated_by == Termination::target_hit ? "target-hit" : "budget") << '\n';
  for (const RunEvent& e : rec.events) {
    const char* kind = e.kind == EventKind::first_feasible ? "first-feasible"
                       : e.kind == EventKind::improved     ? "improved"
                       : e.kind == EventKind::ratio_reached ? "ratio-reached"
                                                             : "optimum-reached";
    out << "event = " << e.iteration << ' ' << kind << ' ' << e.value << '\n';
  }
}

// exit codes: 0 success, 1 domain error, 2 usage error
int run(int argc, char** argv) {
  CLI::App app{"minimum label spanning tree solvers and experiments"};
  app.require_subcommand(1);

  // ---- generate ----
  auto* generate = app.add_subcommand("generate", "construct a named instance family");
  std::string family;
  generate->add_option("family", family, "g-prime | g1 | g2 | g3 | random")->required();
  int opt_a = 0, opt_k = 0, opt_b = 0, opt_n = 0, opt_m = 0;
  std::optional<std::uint64_t> gen_seed;
  std::string out_path;
  generate->add_option("--a", opt_a, "g-prime block label count");
  generate->add_option("--k", opt_k, "label count");
  generate->add_option("--b", opt_b, "maximum label frequency");
  generate->add_option("--n", opt_n, "node count (random)");
  generate->add_option("--m", opt_m, "edge count (random)");
  generate->add_option("--seed", gen_seed, "generator seed (random)");
  generate->add_option("-o,--out", out_path, "instance file to write")->required();

  // ---- solve ----
  auto* solve = app.add_subcommand("solve", "run one solver on an instance file");
  std::string algorithm, instance_path, init_text = "random", tie_name = "lowest", record_path;
  std::optional<std::uint64_t> seed;
  long long budget = 0;
  std::optional<int> target_card;
  solve->add_option("algorithm", algorithm, "ea | gsemo | mvca | mvca-contract | ls2 | era")->required();
  solve->add_option("instance", instance_path)->required();
  solve->add_option("--budget", budget, "iteration budget (ea/gsemo)");
  solve->add_option("--seed", seed, "random seed");
  solve->add_option("--init", init_text, "random | zeros | ones | local | first | <bits>");
  solve->add_option("--tie", tie_name, "lowest | highest | random");
  solve->add_option("--target-card", target_card, "stop when a feasible solution this small is found");
  solve->add_option("--record", record_path, "write the full run record here");

  // ---- oracle ----
  auto* oracle = app.add_subcommand("oracle", "brute-force optimum of an instance");
  std::string oracle_path;
  int k_limit = 24;
  oracle->add_option("instance", oracle_path)->required();
  oracle->add_option("--k-limit", k_limit, "enumeration limit (default 24)");

  // ---- verify ----
  auto* verify = app.add_subcommand("verify", "machine-check a structural property");
  std::string check, verify_path, halving_bits;
  int verify_k_limit = 0;
  std::optional<std::uint64_t> verify_seed;
  long long verify_budget = 100000;
  verify->add_option("check", check, "corollary1 | halving | g2-local-opt | archive")->required();
  verify->add_option("instance", verify_path)->required();
  verify->add_option("--bits", halving_bits, "subset for the halving check (default all zeros)");
  verify->add_option("--k-limit", verify_k_limit, "enumeration limit override");
  verify->add_option("--seed", verify_seed, "seed for the archive check");
  verify->add_option("--budget", verify_budget, "iterations for the archive check");

  // ---- experiment ----
  auto* experiment = app.add_subcommand("experiment", "run a plan file and export CSV + summary");
  std::string plan_path, out_dir;
  std::optional<int> jobs;
  experiment->add_option("plan", plan_path)->required();
  experiment->add_option("-o,--out", out_dir, "output directory")->required();
  experiment->add_option("--jobs", jobs, "parallel trial workers");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (*generate) {
    InstanceBundle bundle = [&]() {
      if (family == "g-prime") return gen_g_prime(opt_a, opt_k);
      if (family == "g1") return gen_g1(opt_k);
      if (family == "g2") return gen_g2(opt_k);
      if (family == "g3") return gen_g3(opt_b);
      if (family == "random") {
        if (!gen_seed) fail(Errc::usage, "generate random requires --seed");
        return gen_random_mlst_b(opt_n, opt_m, opt_k, opt_b, *gen_seed);
      }
      fail(Errc::usage, "unknown family '" + family + "'");
    }();
    save_bundle(bundle, out_path);
    std::cout << "instance = " << out_path << '\n';
    print_bundle_info(bundle);
    return 0;
  }

  if (*solve) {
    InstanceBundle bundle = load_bundle(instance_path);
    const LabeledGraph& g = bundle.graph;

    auto init_subset = [&]() -> std::optional<LabelSubset> {
      if (init_text == "random") return std::nullopt;
      if (init_text == "zeros") return LabelSubset::zeros(g.k());
      if (init_text == "ones") return LabelSubset::ones(g.k());
      if (init_text == "local" || init_text == "first") {
        if (init_text == "local") {
          if (bundle.known_local_opts.empty())
            fail(Errc::usage, "no recorded local optimum in " + instance_path + ".meta");
          return bundle.known_local_opts.front().solution;
        }
        return LabelSubset::ones(g.k());
      }
      LabelSubset bits = LabelSubset::from_string(init_text);
      check_width(bits, g.k());
      return bits;
    };

    RunTargets targets;
    if (target_card) {
      targets.stop_cardinality = *target_card;
      targets.optimum_cardinality = *target_card;
    }

    if (algorithm == "ea" || algorithm == "gsemo") {
      if (!seed) fail(Errc::usage, "solve " + algorithm + " requires --seed");
      if (budget <= 0) fail(Errc::usage, "solve " + algorithm + " requires --budget > 0");
      RunRecord rec = algorithm == "ea"
                          ? one_plus_one_ea(g, init_subset(), budget, targets, *seed)
                          : gsemo(g, init_subset(), budget, targets, *seed).record;
      print_solution(g, rec.best_solution, rec.iterations_used,
                     rec.terminated_by == Termination::target_hit ? "target-hit" : "budget");
      if (!record_path.empty()) write_record(rec, record_path);
      return 0;
    }

    TieBreakPolicy tie = parse_tie(tie_name, seed);
    if (init_text == "random" && (algorithm == "ls2" || algorithm == "era") && !seed)
      fail(Errc::usage, "solve " + algorithm + " with random init requires --seed");

    HeuristicStats stats;
    LabelSubset solution(g.k());
    if (algorithm == "mvca") {
      solution = modified_mvca(g, tie, &stats);
    } else if (algorithm == "mvca-contract") {
      solution = mvca_with_contraction(g, tie, &stats);
    } else if (algorithm == "ls2") {
      std::optional<LabelSubset> init = init_subset();
      LabelSubset start = LabelSubset::ones(g.k());
      if (init) {
        start = *init;
      } else {
        Rng rng(*seed);
        start = random_subset(g.k(), rng);
      }
      solution = local_search_2switch(g, start, tie, &stats);
    } else if (algorithm == "era") {
      SpanningTree tree;
      std::optional<LabelSubset> init = init_subset();
      if (init_text == "random") {
        Rng rng(*seed);
        tree = random_spanning_tree(g, rng);
      } else {
        tree = tree_from_subset(g, init ? *init : LabelSubset::ones(g.k()));
      }
      solution = era(g, tree, tie, &stats);
    } else {
      fail(Errc::usage, "unknown algorithm '" + algorithm + "'");
    }
    print_solution(g, solution, stats.evaluations, nullptr);
    return 0;
  }

  if (*oracle) {
    LabeledGraph g = load_instance(oracle_path);
    OracleResult res = brute_force_opt(g, k_limit);
    std::cout << "opt = " << res.opt_value << '\n';
    std::cout << "witness = " << res.witness.to_string() << '\n';
    std::cout << "subsets-examined = " << res.subsets_examined << '\n';
    return 0;
  }

  if (*verify) {
    InstanceBundle bundle = load_bundle(verify_path);
    const LabeledGraph& g = bundle.graph;
    if (check == "corollary1") {
      CorollaryReport report = verify_corollary_1(g, verify_k_limit > 0 ? verify_k_limit : 14);
      if (report.holds) {
        std::cout << "PASS corollary1 (feasible solutions above bound: " << report.feasible_over_bound << ")\n";
        return 0;
      }
      std::cout << "FAIL corollary1 counterexample = " << report.counterexample->to_string() << '\n';
      return 1;
    }
    if (check == "halving") {
      LabelSubset x = halving_bits.empty() ? LabelSubset::zeros(g.k()) : LabelSubset::from_string(halving_bits);
      check_width(x, g.k());
      HalvingReport report = verify_component_halving(g, x, verify_k_limit > 0 ? verify_k_limit : 24);
      if (report.holds) {
        std::cout << "PASS halving label = " << *report.witness_label + 1 << " bound = " << report.bound << '\n';
        return 0;
      }
      std::cout << "FAIL halving: no label reaches bound " << report.bound << '\n';
      return 1;
    }
    if (check == "g2-local-opt") {
      LabelSubset trap(g.k());
      for (int l = 0; l + 2 < g.k(); ++l) trap.set(l);
      if (!is_feasible(g, trap)) {
        std::cout << "FAIL g2-local-opt: {1..k-2} infeasible\n";
        return 1;
      }
      if (is_h_switch_local_optimum(g, trap, 2)) {
        std::cout << "PASS g2-local-opt\n";
        return 0;
      }
      std::cout << "FAIL g2-local-opt: improving 2-switch neighbor exists\n";
      return 1;
    }
    if (check == "archive") {
      if (!verify_seed) fail(Errc::usage, "verify archive requires --seed");
      long long violations = 0;
      auto observer = [&](long long, const ParetoArchive& archive) {
        try {
          archive.check_invariants(g.k());
        } catch (const Error&) {
          ++violations;
        }
      };
      gsemo(g, std::nullopt, verify_budget, {}, *verify_seed, observer);
      if (violations == 0) {
        std::cout << "PASS archive (" << verify_budget << " iterations)\n";
        return 0;
      }
      std::cout << "FAIL archive: " << violations << " violations\n";
      return 1;
    }
    fail(Errc::usage, "unknown check '" + check + "'");
  }

  if (*experiment) {
    ExperimentPlan plan = load_plan(plan_path);
    if (jobs) plan.jobs = *jobs;
    std::filesystem::create_directories(out_dir);
    ExperimentResult result = run_experiment(plan);
    export_csv(result, std::filesystem::path(out_dir) / "results.csv");
    export_summary(result, std::filesystem::path(out_dir) / "summary.txt");
    std::cout << summary_string(result);
    std::cout << "wall-seconds = " << result.stats.wall_seconds << '\n';
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const mlst::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == mlst::Errc::usage ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
