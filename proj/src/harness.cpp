#include "mlst/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <thread>

#include "mlst/oracle.hpp"
#include "mlst/union_find.hpp"

namespace mlst {

std::string algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::one_plus_one_ea: return "one-plus-one-ea";
    case Algorithm::gsemo: return "gsemo";
    case Algorithm::mvca: return "mvca";
    case Algorithm::mvca_contract: return "mvca-contract";
    case Algorithm::ls_2switch: return "ls-2switch";
    case Algorithm::era: return "era";
  }
  return "?";
}

long long BudgetSpec::evaluate(int n, int k) const {
  double value = 0;
  const double dn = n, dk = k;
  switch (formula) {
    case BudgetFormula::fixed: value = static_cast<double>(fixed_value); break;
    case BudgetFormula::k_ln_k: value = constant * dk * std::log(dk); break;
    case BudgetFormula::k2: value = constant * dk * dk; break;
    case BudgetFormula::n_k: value = constant * dn * dk; break;
    case BudgetFormula::k2_ln_k: value = constant * dk * dk * std::log(dk); break;
    case BudgetFormula::k3: value = constant * dk * dk * dk; break;
    case BudgetFormula::ratio_ea: value = constant * (dn + dk * dk * dk) * dk; break;
    case BudgetFormula::ratio_gsemo: value = constant * (dn * dk * dk + std::pow(dk, 5)); break;
    case BudgetFormula::log_ratio_gsemo:
      value = constant * (dk * dk * dk * std::log(dn) + dk * dk * std::log(dk));
      break;
  }
  long long budget = formula == BudgetFormula::fixed ? fixed_value : static_cast<long long>(value);
  if (cap) budget = std::min(budget, *cap);
  if (budget <= 0) fail(Errc::usage, "budget evaluates to " + std::to_string(budget));
  return budget;
}

bool check_ratio(const LabeledGraph& g, const LabelSubset& solution, int opt, double r) {
  if (!is_feasible(g, solution)) fail(Errc::infeasible_solution, "ratio check needs a feasible solution");
  // the 1e-9 guard absorbs representation error; exact multiples are unaffected
  const long long threshold = static_cast<long long>(std::ceil(r * opt - 1e-9));
  return solution.count() <= threshold;
}

namespace {

int resolve_opt(const InstanceBundle& bundle, int k_limit) {
  if (bundle.known_opt) return bundle.known_opt->value;
  return brute_force_opt(bundle.graph, k_limit).opt_value;
}

int target_threshold(const TargetSpec& t, const LabeledGraph& g, std::optional<int> opt) {
  switch (t.kind) {
    case TargetSpec::Kind::feasible:
      return g.k();
    case TargetSpec::Kind::ratio:
      return static_cast<int>(std::ceil(t.ratio_value * *opt - 1e-9));
    case TargetSpec::Kind::optimum:
      return *opt;
  }
  return g.k();
}

EventKind target_event(TargetSpec::Kind kind) {
  switch (kind) {
    case TargetSpec::Kind::feasible: return EventKind::first_feasible;
    case TargetSpec::Kind::ratio: return EventKind::ratio_reached;
    case TargetSpec::Kind::optimum: return EventKind::optimum_reached;
  }
  return EventKind::first_feasible;
}

std::optional<LabelSubset> resolve_init(const ExperimentPlan& plan, const InstanceBundle& bundle,
                                        std::uint64_t trial_seed) {
  const int k = bundle.graph.k();
  switch (plan.init) {
    case InitKind::random: return std::nullopt;
    case InitKind::all_zeros: return LabelSubset::zeros(k);
    case InitKind::all_ones: return LabelSubset::ones(k);
    case InitKind::known_local_opt:
      if (bundle.known_local_opts.empty())
        fail(Errc::usage, "instance " + bundle.name + " has no recorded local optimum");
      (void)trial_seed;
      return bundle.known_local_opts.front().solution;
  }
  return std::nullopt;
}

// Deterministic heuristics reported through the same RunRecord shape:
// iterations = candidate evaluations, all reached targets dated at the end
// of the run.
RunRecord greedy_record(const LabeledGraph& g, LabelSubset solution, long long evaluations,
                        const RunTargets& targets, std::uint64_t seed) {
  RunRecord rec;
  rec.seed = seed;
  rec.iterations_used = evaluations;
  rec.best_vector = fitness_vector(g, solution);
  rec.best_fitness = scalar_fitness_of(rec.best_vector, g.k());
  rec.best_solution = std::move(solution);
  bool all_hit = true;
  if (rec.best_vector.components == 1) {
    const int card = rec.best_vector.labels_used;
    rec.events.push_back({evaluations, EventKind::first_feasible, card});
    if (targets.ratio_cardinality) {
      if (card <= *targets.ratio_cardinality)
        rec.events.push_back({evaluations, EventKind::ratio_reached, card});
      else
        all_hit = false;
    }
    if (targets.optimum_cardinality) {
      if (card <= *targets.optimum_cardinality)
        rec.events.push_back({evaluations, EventKind::optimum_reached, card});
      else
        all_hit = false;
    }
    if (targets.stop_cardinality && card > *targets.stop_cardinality) all_hit = false;
  } else {
    all_hit = false;
  }
  rec.terminated_by = all_hit ? Termination::target_hit : Termination::budget;
  return rec;
}

RunRecord run_trial(const ExperimentPlan& plan, const InstanceBundle& bundle, long long budget,
                    const RunTargets& targets, std::uint64_t trial_seed) {
  const LabeledGraph& g = bundle.graph;
  TieBreakPolicy tie = plan.tie;
  if (tie.kind == TieBreakKind::seeded_random) tie.seed = Rng::derive(trial_seed, plan.tie.seed);
  switch (plan.algorithm) {
    case Algorithm::one_plus_one_ea:
      return one_plus_one_ea(g, resolve_init(plan, bundle, trial_seed), budget, targets, trial_seed);
    case Algorithm::gsemo:
      return gsemo(g, resolve_init(plan, bundle, trial_seed), budget, targets, trial_seed).record;
    case Algorithm::mvca: {
      HeuristicStats stats;
      LabelSubset sol = modified_mvca(g, tie, &stats);
      return greedy_record(g, std::move(sol), stats.evaluations, targets, trial_seed);
    }
    case Algorithm::mvca_contract: {
      HeuristicStats stats;
      LabelSubset sol = mvca_with_contraction(g, tie, &stats);
      return greedy_record(g, std::move(sol), stats.evaluations, targets, trial_seed);
    }
    case Algorithm::ls_2switch: {
      HeuristicStats stats;
      std::optional<LabelSubset> init = resolve_init(plan, bundle, trial_seed);
      LabelSubset start(g.k());
      if (init) {
        start = *init;
      } else {
        Rng rng(trial_seed);
        start = random_subset(g.k(), rng);
      }
      LabelSubset sol = local_search_2switch(g, start, tie, &stats);
      return greedy_record(g, std::move(sol), stats.evaluations, targets, trial_seed);
    }
    case Algorithm::era: {
      HeuristicStats stats;
      SpanningTree tree;
      if (plan.init == InitKind::random) {
        Rng rng(trial_seed);
        tree = random_spanning_tree(g, rng);
      } else {
        std::optional<LabelSubset> init = resolve_init(plan, bundle, trial_seed);
        tree = tree_from_subset(g, init ? *init : LabelSubset::ones(g.k()));
      }
      LabelSubset sol = era(g, tree, tie, &stats);
      return greedy_record(g, std::move(sol), stats.evaluations, targets, trial_seed);
    }
  }
  fail(Errc::usage, "unknown algorithm");
}

long long quantile(const std::vector<long long>& sorted, double q) {
  if (sorted.empty()) return 0;
  const auto idx = static_cast<std::size_t>(std::ceil(q * sorted.size())) - 1;
  return sorted[std::min(idx, sorted.size() - 1)];
}

}  // namespace

ExperimentResult run_experiment(const ExperimentPlan& plan) {
  if (plan.trials < 1) fail(Errc::usage, "trials must be >= 1, got " + std::to_string(plan.trials));
  const InstanceBundle bundle = plan.bundle ? *plan.bundle : load_bundle(plan.instance_path);
  const LabeledGraph& g = bundle.graph;

  std::optional<int> opt;
  for (const TargetSpec& t : plan.targets)
    if (t.kind != TargetSpec::Kind::feasible && !opt) opt = resolve_opt(bundle, plan.oracle_k_limit);

  RunTargets targets;
  int tightest = g.k() + 1;
  for (const TargetSpec& t : plan.targets) {
    const int threshold = target_threshold(t, g, opt);
    if (t.kind == TargetSpec::Kind::ratio) targets.ratio_cardinality = threshold;
    if (t.kind == TargetSpec::Kind::optimum) targets.optimum_cardinality = threshold;
    tightest = std::min(tightest, threshold);
  }
  if (!plan.targets.empty()) targets.stop_cardinality = tightest;

  const long long budget = plan.budget.evaluate(g.n(), g.k());

  ExperimentResult result;
  result.instance_name = plan.bundle || plan.instance_path.empty() ? bundle.name : plan.instance_path;
  result.algorithm = algorithm_name(plan.algorithm);
  result.trial_seeds.resize(plan.trials);
  result.records.resize(plan.trials);
  for (int t = 0; t < plan.trials; ++t) result.trial_seeds[t] = Rng::derive(plan.master_seed, t);

  const auto started = std::chrono::steady_clock::now();
  const int jobs = std::max(1, plan.jobs);
  if (jobs == 1) {
    for (int t = 0; t < plan.trials; ++t)
      result.records[t] = run_trial(plan, bundle, budget, targets, result.trial_seeds[t]);
  } else {
    std::atomic<int> next{0};
    auto worker = [&]() {
      for (int t = next.fetch_add(1); t < plan.trials; t = next.fetch_add(1))
        result.records[t] = run_trial(plan, bundle, budget, targets, result.trial_seeds[t]);
    };
    std::vector<std::thread> pool;
    for (int w = 0; w < std::min(jobs, plan.trials); ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  result.stats.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();

  result.stats.trials = plan.trials;
  result.stats.budget = budget;
  for (const TargetSpec& t : plan.targets) {
    TargetStats ts{t, target_threshold(t, g, opt), 0};
    std::vector<long long> iterations;
    for (const RunRecord& rec : result.records) {
      const RunEvent* ev = rec.find_event(target_event(t.kind));
      if (!ev) continue;
      // re-validate against the dumped solution before counting the success
      FitnessVector check = fitness_vector(g, rec.best_solution);
      if (check.components != 1 || check.labels_used > ts.threshold_cardinality)
        fail(Errc::precondition_violated, "recorded target success fails re-evaluation");
      ++ts.successes;
      iterations.push_back(ev->iteration);
    }
    std::sort(iterations.begin(), iterations.end());
    if (!iterations.empty()) {
      ts.min_iterations = iterations.front();
      ts.median_iterations = quantile(iterations, 0.5);
      ts.p95_iterations = quantile(iterations, 0.95);
      ts.max_iterations = iterations.back();
    }
    result.stats.per_target.push_back(ts);
  }
  for (const RunRecord& rec : result.records)
    if (rec.best_vector.components == 1) ++result.stats.best_cardinality_histogram[rec.best_vector.labels_used];

  return result;
}

ScalingFit fit_scaling(const std::vector<ScalingPoint>& points, ScalingModel model) {
  if (points.size() < 3)
    fail(Errc::too_few_points, "need at least 3 points, got " + std::to_string(points.size()));
  auto predictor = [&](const ScalingPoint& p) {
    switch (model) {
      case ScalingModel::k_ln_k: return p.k * std::log(p.k);
      case ScalingModel::k2: return p.k * p.k;
      case ScalingModel::n_k: return p.n * p.k;
      case ScalingModel::k2_ln_k: return p.k * p.k * std::log(p.k);
    }
    return 0.0;
  };

  double sfy = 0, sff = 0, sf = 0, sy = 0;
  for (const ScalingPoint& p : points) {
    const double f = predictor(p), y = p.median_iterations;
    sfy += f * y;
    sff += f * f;
    sf += f;
    sy += y;
  }
  const double count = static_cast<double>(points.size());
  ScalingFit fit{};
  fit.constant = sff > 0 ? sfy / sff : 0;

  const double fbar = sf / count, ybar = sy / count;
  double sxx = 0, sxy = 0, ss_res = 0, ss_tot = 0;
  for (const ScalingPoint& p : points) {
    const double f = predictor(p), y = p.median_iterations;
    sxx += (f - fbar) * (f - fbar);
    sxy += (f - fbar) * (y - ybar);
    const double r = y - fit.constant * f;
    fit.residuals.push_back(r);
    ss_res += r * r;
    ss_tot += (y - ybar) * (y - ybar);
  }
  fit.slope = sxx > 0 ? sxy / sxx : 0;
  fit.intercept = ybar - fit.slope * fbar;
  fit.r_squared = ss_tot > 0 ? 1.0 - ss_res / ss_tot : (ss_res == 0 ? 1.0 : 0.0);

  double fmin = predictor(points.front()), fmax = fmin;
  for (const ScalingPoint& p : points) {
    fmin = std::min(fmin, predictor(p));
    fmax = std::max(fmax, predictor(p));
  }
  fit.near_zero_slope = std::abs(fit.slope) * (fmax - fmin) < 0.05 * std::max(std::abs(ybar), 1e-12);
  return fit;
}

std::string csv_string(const ExperimentResult& result) {
  std::ostringstream out;
  out << "trial,seed,instance,algorithm,budget,iterations_to_feasible,iterations_to_ratio,"
         "iterations_to_opt,best_cardinality,terminated_by\n";
  for (std::size_t t = 0; t < result.records.size(); ++t) {
    const RunRecord& rec = result.records[t];
    out << t << ',' << result.trial_seeds[t] << ',' << result.instance_name << ',' << result.algorithm << ','
        << result.stats.budget << ',';
    auto cell = [&](EventKind kind) {
      if (const RunEvent* ev = rec.find_event(kind)) out << ev->iteration;
      out << ',';
    };
    cell(EventKind::first_feasible);
    cell(EventKind::ratio_reached);
    cell(EventKind::optimum_reached);
    if (rec.best_vector.components == 1) out << rec.best_vector.labels_used;
    out << ',' << (rec.terminated_by == Termination::target_hit ? "target-hit" : "budget") << '\n';
  }
  return out.str();
}

void export_csv(const ExperimentResult& result, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::io_error, "cannot write " + path.string());
  out << csv_string(result);
  if (!out) fail(Errc::io_error, "write failed for " + path.string());
}

std::string summary_string(const ExperimentResult& result) {
  std::ostringstream out;
  out << "instance    = " << result.instance_name << '\n';
  out << "algorithm   = " << result.algorithm << '\n';
  out << "trials      = " << result.stats.trials << '\n';
  out << "budget      = " << result.stats.budget << '\n';
  if (!result.stats.per_target.empty()) {
    out << "target        threshold  successes  min      median   p95      max\n";
    for (const TargetStats& ts : result.stats.per_target) {
      std::string name;
      switch (ts.target.kind) {
        case TargetSpec::Kind::feasible: name = "feasible"; break;
        case TargetSpec::Kind::ratio: {
          std::ostringstream r;
          r << "ratio " << ts.target.ratio_value;
          name = r.str();
          break;
        }
        case TargetSpec::Kind::optimum: name = "optimum"; break;
      }
      char line[160];
      if (ts.successes > 0)
        std::snprintf(line, sizeof line, "%-13s %-10d %3d/%-6d %-8lld %-8lld %-8lld %-8lld", name.c_str(),
                      ts.threshold_cardinality, ts.successes, result.stats.trials, ts.min_iterations,
                      ts.median_iterations, ts.p95_iterations, ts.max_iterations);
      else
        std::snprintf(line, sizeof line, "%-13s %-10d %3d/%-6d -        -        -        -", name.c_str(),
                      ts.threshold_cardinality, ts.successes, result.stats.trials);
      out << line << '\n';
    }
  }
  out << "best-cardinality:";
  for (const auto& [card, count] : result.stats.best_cardinality_histogram)
    out << ' ' << card << "x" << count;
  out << '\n';
  return out.str();
}

void export_summary(const ExperimentResult& result, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::io_error, "cannot write " + path.string());
  out << summary_string(result);
  if (!out) fail(Errc::io_error, "write failed for " + path.string());
}

namespace {

const std::map<std::string, BudgetFormula>& budget_names() {
  static const std::map<std::string, BudgetFormula> names = {
      {"fixed", BudgetFormula::fixed},
      {"k-ln-k", BudgetFormula::k_ln_k},
      {"k2", BudgetFormula::k2},
      {"n-k", BudgetFormula::n_k},
      {"k2-ln-k", BudgetFormula::k2_ln_k},
      {"k3", BudgetFormula::k3},
      {"ratio-ea", BudgetFormula::ratio_ea},
      {"ratio-gsemo", BudgetFormula::ratio_gsemo},
      {"log-ratio-gsemo", BudgetFormula::log_ratio_gsemo},
  };
  return names;
}

}  // namespace

ExperimentPlan load_plan(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::io_error, "cannot open " + path.string());

  ExperimentPlan plan;
  bool have_algorithm = false, have_instance = false, have_seed = false;
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ss(raw);
    std::string key, eq;
    if (!(ss >> key)) continue;
    if (!(ss >> eq) || eq != "=") fail(Errc::usage, "plan line " + std::to_string(number) + ": expected 'key = value'");
    auto rest = [&] {
      std::string value, tok;
      while (ss >> tok) {
        if (!value.empty()) value += ' ';
        value += tok;
      }
      return value;
    };
    auto int_value = [&](const std::string& v) {
      try {
        return std::stoll(v);
      } catch (...) {
        fail(Errc::usage, "plan line " + std::to_string(number) + ": '" + v + "' is not an integer");
      }
    };

    const std::string value = rest();
    if (value.empty()) fail(Errc::usage, "plan line " + std::to_string(number) + ": missing value");

    if (key == "algorithm") {
      bool found = false;
      for (Algorithm a : {Algorithm::one_plus_one_ea, Algorithm::gsemo, Algorithm::mvca,
                          Algorithm::mvca_contract, Algorithm::ls_2switch, Algorithm::era})
        if (algorithm_name(a) == value) {
          plan.algorithm = a;
          found = true;
        }
      if (!found) fail(Errc::usage, "plan line " + std::to_string(number) + ": unknown algorithm '" + value + "'");
      have_algorithm = true;
    } else if (key == "instance") {
      plan.instance_path = value;
      have_instance = true;
    } else if (key == "trials") {
      plan.trials = static_cast<int>(int_value(value));
    } else if (key == "budget") {
      auto it = budget_names().find(value);
      if (it == budget_names().end())
        fail(Errc::usage, "plan line " + std::to_string(number) + ": unknown budget formula '" + value + "'");
      plan.budget.formula = it->second;
    } else if (key == "budget-constant") {
      plan.budget.constant = std::stod(value);
    } else if (key == "budget-fixed") {
      plan.budget.fixed_value = int_value(value);
    } else if (key == "budget-cap") {
      plan.budget.cap = int_value(value);
    } else if (key == "init") {
      if (value == "random")
        plan.init = InitKind::random;
      else if (value == "known-local-opt")
        plan.init = InitKind::known_local_opt;
      else if (value == "all-zeros")
        plan.init = InitKind::all_zeros;
      else if (value == "all-ones")
        plan.init = InitKind::all_ones;
      else
        fail(Errc::usage, "plan line " + std::to_string(number) + ": unknown init '" + value + "'");
    } else if (key == "master-seed") {
      plan.master_seed = static_cast<std::uint64_t>(int_value(value));
      have_seed = true;
    } else if (key == "target") {
      std::istringstream tv(value);
      std::string kind;
      tv >> kind;
      if (kind == "feasible")
        plan.targets.push_back({TargetSpec::Kind::feasible, 0});
      else if (kind == "optimum")
        plan.targets.push_back({TargetSpec::Kind::optimum, 0});
      else if (kind == "ratio") {
        double r = 0;
        if (!(tv >> r) || r < 1)
          fail(Errc::usage, "plan line " + std::to_string(number) + ": ratio target needs a value >= 1");
        plan.targets.push_back({TargetSpec::Kind::ratio, r});
      } else {
        fail(Errc::usage, "plan line " + std::to_string(number) + ": unknown target '" + value + "'");
      }
    } else if (key == "tie") {
      if (value == "lowest")
        plan.tie.kind = TieBreakKind::lowest_index;
      else if (value == "highest")
        plan.tie.kind = TieBreakKind::highest_index;
      else if (value == "random")
        plan.tie.kind = TieBreakKind::seeded_random;
      else
        fail(Errc::usage, "plan line " + std::to_string(number) + ": unknown tie '" + value + "'");
    } else if (key == "tie-seed") {
      plan.tie.seed = static_cast<std::uint64_t>(int_value(value));
    } else if (key == "jobs") {
      plan.jobs = static_cast<int>(int_value(value));
    } else {
      fail(Errc::usage, "plan line " + std::to_string(number) + ": unknown key '" + key + "'");
    }
  }

  if (!have_algorithm) fail(Errc::usage, "plan misses 'algorithm'");
  if (!have_instance) fail(Errc::usage, "plan misses 'instance'");
  if (!have_seed && (plan.algorithm == Algorithm::one_plus_one_ea || plan.algorithm == Algorithm::gsemo ||
                     plan.init == InitKind::random || plan.tie.kind == TieBreakKind::seeded_random))
    fail(Errc::usage, "plan misses 'master-seed' for a randomized run");
  if (plan.trials < 1) fail(Errc::usage, "plan needs trials >= 1");
  if (plan.budget.formula == BudgetFormula::fixed && plan.budget.fixed_value <= 0)
    fail(Errc::usage, "plan needs 'budget-fixed' > 0 for the fixed budget");
  return plan;
}

}  // namespace mlst
