#include "mlst/evolutionary.hpp"

#include <cassert>
#include <string>

namespace mlst {

LabelSubset standard_mutation(const LabelSubset& x, Rng& rng) {
  LabelSubset y = x;
  const double p = 1.0 / x.width();
  for (int i = 0; i < x.width(); ++i)
    if (rng.next_unit() < p) y.flip(i);
  return y;
}

LabelSubset random_subset(int k, Rng& rng) {
  LabelSubset x(k);
  for (int i = 0; i < k; ++i)
    if (rng.next_u64() >> 63) x.set(i);
  return x;
}

namespace {

// Tracks the best feasible cardinality seen and emits the marker events.
struct EventTracker {
  const RunTargets& targets;
  std::vector<RunEvent>& events;
  bool feasible_seen = false;
  int best_cardinality = 0;
  bool ratio_logged = false;
  bool optimum_logged = false;

  void on_feasible(long long iteration, int cardinality) {
    if (!feasible_seen) {
      feasible_seen = true;
      best_cardinality = cardinality;
      events.push_back({iteration, EventKind::first_feasible, cardinality});
    } else if (cardinality < best_cardinality) {
      best_cardinality = cardinality;
    } else {
      return;
    }
    if (!ratio_logged && targets.ratio_cardinality && best_cardinality <= *targets.ratio_cardinality) {
      ratio_logged = true;
      events.push_back({iteration, EventKind::ratio_reached, best_cardinality});
    }
    if (!optimum_logged && targets.optimum_cardinality && best_cardinality <= *targets.optimum_cardinality) {
      optimum_logged = true;
      events.push_back({iteration, EventKind::optimum_reached, best_cardinality});
    }
  }

  bool stop() const {
    return targets.stop_cardinality && feasible_seen && best_cardinality <= *targets.stop_cardinality;
  }
};

LabelSubset initial_solution(const LabeledGraph& g, const std::optional<LabelSubset>& init, Rng& rng) {
  if (init) {
    check_width(*init, g.k());
    return *init;
  }
  return random_subset(g.k(), rng);
}

}  // namespace

RunRecord one_plus_one_ea(const LabeledGraph& g, const std::optional<LabelSubset>& init, long long budget,
                          const RunTargets& targets, std::uint64_t seed, bool accept_equal_fitness) {
  if (budget < 0) fail(Errc::param_out_of_range, "budget " + std::to_string(budget));
  Rng rng(seed);
  RunRecord rec;
  rec.seed = seed;

  LabelSubset x = initial_solution(g, init, rng);
  FitnessVector vec = fitness_vector(g, x);
  Fitness fit = scalar_fitness_of(vec, g.k());

  EventTracker tracker{targets, rec.events};
  if (vec.components == 1) tracker.on_feasible(0, vec.labels_used);

  long long iter = 0;
  rec.terminated_by = tracker.stop() ? Termination::target_hit : Termination::budget;
  if (!tracker.stop()) {
    while (iter < budget) {
      ++iter;
      LabelSubset y = standard_mutation(x, rng);
      if (y == x) continue;  // equal fitness, acceptance would not change the state
      FitnessVector yvec = fitness_vector(g, y);
      Fitness yfit = scalar_fitness_of(yvec, g.k());
      if (yfit < fit || (accept_equal_fitness && yfit == fit)) {
        const bool strict = yfit < fit;
        x = std::move(y);
        vec = yvec;
        fit = yfit;
        if (strict) rec.events.push_back({iter, EventKind::improved, fit});
        if (vec.components == 1) tracker.on_feasible(iter, vec.labels_used);
        if (tracker.stop()) {
          rec.terminated_by = Termination::target_hit;
          break;
        }
      }
    }
  }

  rec.iterations_used = iter;
  rec.best_solution = std::move(x);
  rec.best_vector = vec;
  rec.best_fitness = fit;
  return rec;
}

GsemoResult gsemo(const LabeledGraph& g, const std::optional<LabelSubset>& init, long long budget,
                  const RunTargets& targets, std::uint64_t seed,
                  const std::function<void(long long, const ParetoArchive&)>& observer) {
  if (budget < 0) fail(Errc::param_out_of_range, "budget " + std::to_string(budget));
  Rng rng(seed);
  GsemoResult result;
  RunRecord& rec = result.record;
  ParetoArchive& archive = result.archive;
  rec.seed = seed;

  LabelSubset x0 = initial_solution(g, init, rng);
  FitnessVector v0 = fitness_vector(g, x0);
  archive.consider(x0, v0);
  assert((archive.check_invariants(g.k()), true));

  EventTracker tracker{targets, rec.events};
  if (v0.components == 1) tracker.on_feasible(0, v0.labels_used);
  if (observer) observer(0, archive);

  long long iter = 0;
  rec.terminated_by = tracker.stop() ? Termination::target_hit : Termination::budget;
  if (!tracker.stop()) {
    while (iter < budget) {
      ++iter;
      const ArchiveEntry& parent = archive[static_cast<int>(rng.below(archive.size()))];
      LabelSubset y = standard_mutation(parent.solution, rng);
      if (y != parent.solution) {  // identical offspring would be rejected on its equal vector
        FitnessVector v = fitness_vector(g, y);
        bool inserted = archive.consider(y, v);
        assert((archive.check_invariants(g.k()), true));
        if (inserted && v.components == 1 &&
            (!tracker.feasible_seen || v.labels_used < tracker.best_cardinality)) {
          if (tracker.feasible_seen)
            rec.events.push_back({iter, EventKind::improved, v.labels_used});
          tracker.on_feasible(iter, v.labels_used);
        }
      }
      if (observer) observer(iter, archive);
      if (tracker.stop()) {
        rec.terminated_by = Termination::target_hit;
        break;
      }
    }
  }

  rec.iterations_used = iter;
  const ArchiveEntry* best = archive.best_feasible();
  if (!best) best = archive.best_overall();
  rec.best_solution = best->solution;
  rec.best_vector = best->value;
  rec.best_fitness = scalar_fitness_of(best->value, g.k());
  return result;
}

}  // namespace mlst
