#ifndef MLST_FITNESS_HPP
#define MLST_FITNESS_HPP

#include <cstdint>

#include "mlst/graph.hpp"

namespace mlst {

using Fitness = std::int64_t;

// Bi-objective value (component count, labels used); both minimized.
struct FitnessVector {
  int components;
  int labels_used;

  bool operator==(const FitnessVector&) const = default;
};

inline FitnessVector fitness_vector(const LabeledGraph& g, const LabelSubset& x) {
  return {component_count(g, x), x.count()};
}

// Scalar fitness (c(H(X)) - 1) * k^2 + |X|. Exact in 64-bit: graph
// construction caps n and k at 2^20.
inline Fitness scalar_fitness_of(const FitnessVector& v, int k) {
  return static_cast<Fitness>(v.components - 1) * k * k + v.labels_used;
}

inline Fitness scalar_fitness(const LabeledGraph& g, const LabelSubset& x) {
  return scalar_fitness_of(fitness_vector(g, x), g.k());
}

// a dominates b: no worse in both coordinates, strictly better in one.
inline bool dominates(const FitnessVector& a, const FitnessVector& b) {
  return (a.components < b.components && a.labels_used <= b.labels_used) ||
         (a.components <= b.components && a.labels_used < b.labels_used);
}

}  // namespace mlst

#endif
