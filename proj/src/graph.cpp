#include "mlst/graph.hpp"

#include <algorithm>
#include <unordered_set>

#include "mlst/union_find.hpp"

namespace mlst {

namespace {

// Bound keeping (n-1)*k^2 + k comfortably inside int64.
constexpr int kMaxDimension = 1 << 20;

std::uint64_t pair_key(int u, int v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
}

}  // namespace

LabeledGraph LabeledGraph::build(int n, int k, std::vector<Edge> edges) {
  if (n < 1 || n > kMaxDimension)
    fail(Errc::param_out_of_range, "node count " + std::to_string(n));
  if (k < 1 || k > kMaxDimension)
    fail(Errc::param_out_of_range, "label count " + std::to_string(k));

  std::unordered_set<std::uint64_t> seen;
  seen.reserve(edges.size() * 2);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
      fail(Errc::node_out_of_range, "edge " + std::to_string(i) + " endpoint (" + std::to_string(e.u + 1) +
                                        "," + std::to_string(e.v + 1) + ") outside [1," + std::to_string(n) + "]");
    if (e.label < 0 || e.label >= k)
      fail(Errc::label_out_of_range, "edge " + std::to_string(i) + " label " + std::to_string(e.label + 1) +
                                         " outside [1," + std::to_string(k) + "]");
    if (e.u == e.v)
      fail(Errc::self_loop, "edge " + std::to_string(i) + " at node " + std::to_string(e.u + 1));
    if (!seen.insert(pair_key(e.u, e.v)).second)
      fail(Errc::duplicate_edge, "edge " + std::to_string(i) + " repeats pair (" + std::to_string(e.u + 1) +
                                     "," + std::to_string(e.v + 1) + ")");
  }

  UnionFind uf(n);
  int comps = n;
  for (const Edge& e : edges)
    if (uf.unite(e.u, e.v)) --comps;
  if (comps != 1) {
    for (int v = 1; v < n; ++v)
      if (!uf.same(0, v))
        fail(Errc::disconnected_input, "node " + std::to_string(v + 1) + " unreachable from node 1");
  }

  std::vector<int> label_count(k, 0);
  for (const Edge& e : edges) ++label_count[e.label];
  for (int l = 0; l < k; ++l)
    if (label_count[l] == 0) fail(Errc::unused_label, "label " + std::to_string(l + 1) + " appears on no edge");

  LabeledGraph g;
  g.n_ = n;
  g.k_ = k;
  g.edges_ = std::move(edges);
  g.label_offsets_.assign(k + 1, 0);
  for (int l = 0; l < k; ++l) g.label_offsets_[l + 1] = g.label_offsets_[l] + label_count[l];
  g.label_edge_ids_.resize(g.edges_.size());
  std::vector<int> cursor(g.label_offsets_.begin(), g.label_offsets_.end() - 1);
  for (int i = 0; i < static_cast<int>(g.edges_.size()); ++i)
    g.label_edge_ids_[cursor[g.edges_[i].label]++] = i;
  return g;
}

LabeledGraph build_graph(int n, int k, std::vector<Edge> edges) {
  return LabeledGraph::build(n, k, std::move(edges));
}

int component_count(const LabeledGraph& g, const LabelSubset& x) {
  check_width(x, g.k());
  UnionFind uf(g.n());
  int comps = g.n();
  x.for_each_set([&](int label) {
    for (int ei : g.label_edges(label)) {
      const Edge& e = g.edge(ei);
      if (uf.unite(e.u, e.v)) --comps;
    }
  });
  return comps;
}

bool is_feasible(const LabeledGraph& g, const LabelSubset& x) { return component_count(g, x) == 1; }

int max_label_frequency(const LabeledGraph& g) {
  int best = 0;
  for (int l = 0; l < g.k(); ++l) best = std::max(best, g.label_edges(l).size());
  return best;
}

}  // namespace mlst
