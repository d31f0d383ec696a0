#ifndef MLST_ORACLE_HPP
#define MLST_ORACLE_HPP

#include <optional>

#include "mlst/graph.hpp"
#include "mlst/label_subset.hpp"

namespace mlst {

struct OracleResult {
  int opt_value;
  LabelSubset witness;  // lexicographically smallest feasible subset of optimal size
  long long subsets_examined;
};

// Exhaustive ground truth: enumerates label subsets in non-decreasing
// cardinality (combinations in lexicographic order within each size) and
// returns the first feasible one. Errc::too_many_labels when k > k_limit.
OracleResult brute_force_opt(const LabeledGraph& g, int k_limit = 24);

struct CorollaryReport {
  bool holds;
  std::optional<LabelSubset> counterexample;
  long long feasible_over_bound;  // feasible solutions above the OPT*(b+1)/2 bound
};

// Checks exhaustively that every feasible x with |x| > OPT*(b+1)/2 has a
// feasible 2-switch neighbor with one or two labels fewer. Requires b >= 2
// and k <= k_limit.
CorollaryReport verify_corollary_1(const LabeledGraph& g, int k_limit = 14);

struct HalvingReport {
  bool holds;
  std::optional<int> witness_label;
  int components_before;
  int bound;  // floor(r * (1 - 1/(2*OPT)))
};

// Checks that some unused label reduces the component count of H(x) from r
// to at most floor(r*(1-1/(2*OPT))). Requires r > 2.
HalvingReport verify_component_halving(const LabeledGraph& g, const LabelSubset& x, int k_limit = 24);

}  // namespace mlst

#endif
