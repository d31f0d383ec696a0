#ifndef MLST_HARNESS_HPP
#define MLST_HARNESS_HPP

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mlst/evolutionary.hpp"
#include "mlst/heuristics.hpp"
#include "mlst/instances.hpp"

namespace mlst {

enum class Algorithm { one_plus_one_ea, gsemo, mvca, mvca_contract, ls_2switch, era };

std::string algorithm_name(Algorithm a);

// Iteration budgets mirroring the expected-time bounds under test. The
// formula value is scaled by the constant, floored, and optionally capped.
enum class BudgetFormula {
  fixed,
  k_ln_k,           // k ln k
  k2,               // k^2
  n_k,              // n k
  k2_ln_k,          // k^2 ln k
  k3,               // k^3
  ratio_ea,         // (n + k^3) k
  ratio_gsemo,      // n k^2 + k^5
  log_ratio_gsemo,  // k^3 ln n + k^2 ln k
};

struct BudgetSpec {
  BudgetFormula formula = BudgetFormula::fixed;
  double constant = 200.0;
  long long fixed_value = 0;
  std::optional<long long> cap;

  long long evaluate(int n, int k) const;
};

enum class InitKind { random, known_local_opt, all_zeros, all_ones };

struct TargetSpec {
  enum class Kind { feasible, ratio, optimum };
  Kind kind;
  double ratio_value = 0;  // only for Kind::ratio
};

struct ExperimentPlan {
  Algorithm algorithm = Algorithm::one_plus_one_ea;
  std::string instance_path;               // used unless bundle is set
  std::optional<InstanceBundle> bundle;    // in-memory instance
  int trials = 1;
  BudgetSpec budget;
  InitKind init = InitKind::random;
  std::uint64_t master_seed = 0;
  std::vector<TargetSpec> targets;
  TieBreakPolicy tie;
  int jobs = 1;
  int oracle_k_limit = 24;  // for resolving OPT when no known optimum is stored
};

struct TargetStats {
  TargetSpec target;
  int threshold_cardinality;
  int successes;
  // iteration quantiles over successful trials (valid when successes > 0)
  long long min_iterations = 0;
  long long median_iterations = 0;
  long long p95_iterations = 0;
  long long max_iterations = 0;
};

struct TrialStats {
  int trials = 0;
  long long budget = 0;
  std::vector<TargetStats> per_target;
  std::map<int, int> best_cardinality_histogram;  // over trials that found a feasible solution
  double wall_seconds = 0;
};

struct ExperimentResult {
  std::string instance_name;
  std::string algorithm;
  TrialStats stats;
  std::vector<std::uint64_t> trial_seeds;
  std::vector<RunRecord> records;
};

// Runs plan.trials independent trials with per-trial seeds derived from
// (master_seed, trial index); embarrassingly parallel over plan.jobs
// workers, aggregate output independent of the worker count. Every
// reported target success is re-validated against the dumped solution.
ExperimentResult run_experiment(const ExperimentPlan& plan);

// |solution| <= ceil(r * opt), solution must be feasible.
bool check_ratio(const LabeledGraph& g, const LabelSubset& solution, int opt, double r);

struct ScalingPoint {
  double k;
  double n;  // used by the n-dependent predictors
  double median_iterations;
};

enum class ScalingModel { k_ln_k, k2, n_k, k2_ln_k };

// Descriptive least-squares fit of the medians against the model
// predictor; deliberately not a pass/fail gate.
struct ScalingFit {
  double constant;        // through-origin multiplier
  double slope;           // affine slope
  double intercept;       // affine intercept
  double r_squared;       // of the through-origin fit
  bool near_zero_slope;   // predictor explains almost nothing
  std::vector<double> residuals;
};

ScalingFit fit_scaling(const std::vector<ScalingPoint>& points, ScalingModel model);

// CSV with the fixed header
// trial,seed,instance,algorithm,budget,iterations_to_feasible,
// iterations_to_ratio,iterations_to_opt,best_cardinality,terminated_by
// and one row per trial; unreached targets leave empty cells. Byte-exact
// reproducible for equal plans.
void export_csv(const ExperimentResult& result, const std::filesystem::path& path);
std::string csv_string(const ExperimentResult& result);

// Aligned plain-text summary (deterministic; wall clock deliberately left out).
void export_summary(const ExperimentResult& result, const std::filesystem::path& path);
std::string summary_string(const ExperimentResult& result);

// Plan file: 'key = value' lines, '#' comments. Keys mirror ExperimentPlan:
// algorithm, instance, trials, budget, budget-constant, budget-fixed,
// budget-cap, init, master-seed, target (repeatable), tie, tie-seed, jobs.
ExperimentPlan load_plan(const std::filesystem::path& path);

}  // namespace mlst

#endif
