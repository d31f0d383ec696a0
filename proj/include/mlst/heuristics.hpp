#ifndef MLST_HEURISTICS_HPP
#define MLST_HEURISTICS_HPP

#include <cstdint>
#include <vector>

#include "mlst/graph.hpp"
#include "mlst/label_subset.hpp"

namespace mlst {

enum class TieBreakKind { lowest_index, highest_index, seeded_random };

struct TieBreakPolicy {
  TieBreakKind kind = TieBreakKind::lowest_index;
  std::uint64_t seed = 0;  // used only by seeded_random
};

// Optional counters for the experiment harness; runtime is reported in
// candidate evaluations.
struct HeuristicStats {
  long long evaluations = 0;
};

// Greedy that repeatedly adds the label minimizing the resulting component
// count until the selected subgraph is connected. Ties are resolved by the
// injected policy.
LabelSubset modified_mvca(const LabeledGraph& g, const TieBreakPolicy& tie, HeuristicStats* stats = nullptr);

// Same greedy selection, but maintains an explicitly contracted supernode
// graph between rounds. Selects identical labels to modified_mvca under the
// same tie-break.
LabelSubset mvca_with_contraction(const LabeledGraph& g, const TieBreakPolicy& tie,
                                  HeuristicStats* stats = nullptr);

// x2 within h-switch of x1: both set differences have size at most h.
bool in_h_switch(const LabelSubset& x1, const LabelSubset& x2, int h);

// First-improvement descent over the 2-switch neighborhood: all subsets
// reachable by removing at most 2 and adding at most 2 labels. Neighbors
// are scanned with removal sets ordered single-then-pair in the label order
// given by the policy, additions after the bare removal. Returns a feasible
// solution with no strictly smaller feasible 2-switch neighbor.
LabelSubset local_search_2switch(const LabeledGraph& g, const LabelSubset& init, const TieBreakPolicy& order,
                                 HeuristicStats* stats = nullptr);

// Exhaustive check that no feasible subset with fewer labels lies within
// the h-switch neighborhood of x.
bool is_h_switch_local_optimum(const LabeledGraph& g, const LabelSubset& x, int h);

struct SpanningTree {
  std::vector<int> edge_indices;  // exactly n-1 edge ids of the parent graph
};

// Deterministic spanning tree of H(x): Kruskal over edges of selected
// labels in increasing edge-index order. Errc::infeasible_init when H(x) is
// not connected.
SpanningTree tree_from_subset(const LabeledGraph& g, const LabelSubset& x);

class Rng;

// Kruskal over a seeded shuffle of all edges.
SpanningTree random_spanning_tree(const LabeledGraph& g, Rng& rng);

// Distinct labels appearing on the tree edges.
LabelSubset tree_labels(const LabeledGraph& g, const SpanningTree& tree);

// Edge replacement local search: scans non-tree edges in the order given by
// the policy, and for each inserts it and deletes one edge of the induced
// tree cycle whenever that strictly reduces the number of distinct labels
// on the tree. Among reducing cycle edges the one whose label has the
// fewest remaining tree edges is deleted, ties by lowest edge index.
LabelSubset era(const LabeledGraph& g, const SpanningTree& init, const TieBreakPolicy& order,
                HeuristicStats* stats = nullptr);

}  // namespace mlst

#endif
