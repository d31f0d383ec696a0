#ifndef MLST_GRAPH_HPP
#define MLST_GRAPH_HPP

#include <string>
#include <vector>

#include "mlst/errors.hpp"
#include "mlst/label_subset.hpp"

namespace mlst {

// Node and label ids are 0-based throughout the library. The 1-based
// numbering of the instance file format is translated at the I/O boundary.
struct Edge {
  int u;
  int v;
  int label;
};

// Immutable undirected simple graph with one label per edge. Construction
// validates: endpoints and labels in range, no self-loops, no duplicate
// node pair (regardless of label), every label used at least once, and the
// graph restricted to all labels connected. Instances are safely shareable
// across threads once built.
class LabeledGraph {
public:
  static LabeledGraph build(int n, int k, std::vector<Edge> edges);

  int n() const { return n_; }
  int k() const { return k_; }
  int m() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int i) const { return edges_[i]; }

  // Edge indices carrying the given label.
  struct LabelRange {
    const int* begin_;
    const int* end_;
    const int* begin() const { return begin_; }
    const int* end() const { return end_; }
    int size() const { return static_cast<int>(end_ - begin_); }
  };
  LabelRange label_edges(int label) const {
    return {label_edge_ids_.data() + label_offsets_[label],
            label_edge_ids_.data() + label_offsets_[label + 1]};
  }

private:
  LabeledGraph() = default;

  int n_ = 0;
  int k_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> label_offsets_;   // k+1 offsets into label_edge_ids_
  std::vector<int> label_edge_ids_;  // edge indices grouped by label
};

LabeledGraph build_graph(int n, int k, std::vector<Edge> edges);

// Number of connected components of the spanning subgraph H(x) restricted
// to edges whose labels are selected in x. Uses per-call scratch state only.
int component_count(const LabeledGraph& g, const LabelSubset& x);

bool is_feasible(const LabeledGraph& g, const LabelSubset& x);

// b, the maximum number of edges sharing one label.
int max_label_frequency(const LabeledGraph& g);

}  // namespace mlst

#endif
