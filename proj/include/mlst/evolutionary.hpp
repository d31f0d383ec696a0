#ifndef MLST_EVOLUTIONARY_HPP
#define MLST_EVOLUTIONARY_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "mlst/archive.hpp"
#include "mlst/fitness.hpp"
#include "mlst/graph.hpp"
#include "mlst/rng.hpp"

namespace mlst {

enum class EventKind { first_feasible, improved, ratio_reached, optimum_reached };

struct RunEvent {
  long long iteration;  // 0 = initial solution, i >= 1 = i-th offspring evaluation
  EventKind kind;
  long long value;  // new scalar fitness (improved) or cardinality (others)
};

enum class Termination { budget, target_hit };

// Cardinality markers logged as events plus the early-stop threshold. A run
// stops once a feasible solution with at most stop_cardinality labels is
// held (the current solution for the (1+1) EA, any archive entry for GSEMO).
struct RunTargets {
  std::optional<int> stop_cardinality;
  std::optional<int> ratio_cardinality;
  std::optional<int> optimum_cardinality;
};

struct RunRecord {
  std::uint64_t seed = 0;
  long long iterations_used = 0;
  LabelSubset best_solution;
  FitnessVector best_vector{0, 0};
  Fitness best_fitness = 0;
  std::vector<RunEvent> events;
  Termination terminated_by = Termination::budget;

  const RunEvent* find_event(EventKind kind) const {
    for (const RunEvent& e : events)
      if (e.kind == kind) return &e;
    return nullptr;
  }
  long long improvement_count() const {
    long long c = 0;
    for (const RunEvent& e : events) c += e.kind == EventKind::improved;
    return c;
  }
};

// Flips each bit independently with probability 1/k; draws exactly k
// uniform doubles from the stream.
LabelSubset standard_mutation(const LabelSubset& x, Rng& rng);

// Uniform over all 2^k bitstrings; draws k engine outputs.
LabelSubset random_subset(int k, Rng& rng);

// Algorithm: single solution, per-bit 1/k mutation, strict-improvement
// acceptance on the scalar fitness. init = nullopt draws a uniform random
// start. One iteration = one offspring evaluation. accept_equal_fitness
// switches to plateau-drifting (non-strict) acceptance; it is off by
// default and nothing in the acceptance suite uses it.
RunRecord one_plus_one_ea(const LabeledGraph& g, const std::optional<LabelSubset>& init, long long budget,
                          const RunTargets& targets, std::uint64_t seed, bool accept_equal_fitness = false);

struct GsemoResult {
  RunRecord record;
  ParetoArchive archive;
};

// Global SEMO over the (component count, labels used) vector. Each
// iteration picks an archive member uniformly, mutates it, and inserts the
// offspring unless dominated by or equal in vector to an existing entry.
// The observer, when set, runs after every iteration.
GsemoResult gsemo(const LabeledGraph& g, const std::optional<LabelSubset>& init, long long budget,
                  const RunTargets& targets, std::uint64_t seed,
                  const std::function<void(long long, const ParetoArchive&)>& observer = {});

}  // namespace mlst

#endif
