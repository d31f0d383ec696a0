#include "mlst/heuristics.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

#include "mlst/rng.hpp"
#include "mlst/union_find.hpp"

namespace mlst {

namespace {

// Label (or edge) visitation order implied by a tie-break policy.
std::vector<int> policy_order(int count, const TieBreakPolicy& policy) {
  std::vector<int> order(count);
  std::iota(order.begin(), order.end(), 0);
  switch (policy.kind) {
    case TieBreakKind::lowest_index:
      break;
    case TieBreakKind::highest_index:
      std::reverse(order.begin(), order.end());
      break;
    case TieBreakKind::seeded_random: {
      Rng rng(policy.seed);
      for (int i = count - 1; i > 0; --i)
        std::swap(order[i], order[static_cast<int>(rng.below(i + 1))]);
      break;
    }
  }
  return order;
}

class TieBreaker {
public:
  explicit TieBreaker(const TieBreakPolicy& policy) : policy_(policy), rng_(policy.seed) {}

  int pick(const std::vector<int>& tied) {
    switch (policy_.kind) {
      case TieBreakKind::lowest_index:
        return *std::min_element(tied.begin(), tied.end());
      case TieBreakKind::highest_index:
        return *std::max_element(tied.begin(), tied.end());
      case TieBreakKind::seeded_random:
        return tied[static_cast<int>(rng_.below(tied.size()))];
    }
    return tied.front();
  }

private:
  TieBreakPolicy policy_;
  Rng rng_;
};

void count_eval(HeuristicStats* stats) {
  if (stats) ++stats->evaluations;
}

}  // namespace

LabelSubset modified_mvca(const LabeledGraph& g, const TieBreakPolicy& tie, HeuristicStats* stats) {
  TieBreaker breaker(tie);
  LabelSubset chosen(g.k());
  int current = component_count(g, chosen);
  while (current > 1) {
    int best = g.n() + 1;
    std::vector<int> tied;
    for (int l = 0; l < g.k(); ++l) {
      if (chosen.test(l)) continue;
      chosen.set(l);
      int c = component_count(g, chosen);
      chosen.set(l, false);
      count_eval(stats);
      if (c < best) {
        best = c;
        tied.clear();
      }
      if (c == best) tied.push_back(l);
    }
    chosen.set(breaker.pick(tied));
    current = best;
  }
  return chosen;
}

LabelSubset mvca_with_contraction(const LabeledGraph& g, const TieBreakPolicy& tie, HeuristicStats* stats) {
  TieBreaker breaker(tie);
  LabelSubset chosen(g.k());

  // Supernode id per original node plus contracted edge lists per label;
  // rebuilt after each selection.
  std::vector<int> super(g.n());
  int super_count = g.n();
  std::iota(super.begin(), super.end(), 0);
  std::vector<std::vector<std::pair<int, int>>> contracted(g.k());
  auto rebuild_contracted = [&]() {
    for (int l = 0; l < g.k(); ++l) {
      contracted[l].clear();
      if (chosen.test(l)) continue;
      for (int ei : g.label_edges(l)) {
        int a = super[g.edge(ei).u], b = super[g.edge(ei).v];
        if (a != b) contracted[l].push_back({a, b});
      }
    }
  };
  rebuild_contracted();

  while (super_count > 1) {
    int best = super_count + 1;
    std::vector<int> tied;
    for (int l = 0; l < g.k(); ++l) {
      if (chosen.test(l)) continue;
      UnionFind uf(super_count);
      int c = super_count;
      for (auto [a, b] : contracted[l])
        if (uf.unite(a, b)) --c;
      count_eval(stats);
      if (c < best) {
        best = c;
        tied.clear();
      }
      if (c == best) tied.push_back(l);
    }
    int pick = breaker.pick(tied);
    chosen.set(pick);

    // Contract the components produced by the chosen label.
    UnionFind uf(super_count);
    for (auto [a, b] : contracted[pick]) uf.unite(a, b);
    std::vector<int> remap(super_count, -1);
    int next = 0;
    for (int s = 0; s < super_count; ++s) {
      int r = uf.find(s);
      if (remap[r] < 0) remap[r] = next++;
    }
    for (int v = 0; v < g.n(); ++v) super[v] = remap[uf.find(super[v])];
    super_count = next;
    rebuild_contracted();
  }
  return chosen;
}

bool in_h_switch(const LabelSubset& x1, const LabelSubset& x2, int h) {
  if (x1.width() != x2.width())
    fail(Errc::width_mismatch, "h-switch operands of widths " + std::to_string(x1.width()) + " and " +
                                   std::to_string(x2.width()));
  return x1.diff_count(x2) <= h && x2.diff_count(x1) <= h;
}

LabelSubset local_search_2switch(const LabeledGraph& g, const LabelSubset& init, const TieBreakPolicy& order,
                                 HeuristicStats* stats) {
  check_width(init, g.k());
  if (!is_feasible(g, init)) fail(Errc::infeasible_init, "2-switch local search requires a feasible start");

  const std::vector<int> label_order = policy_order(g.k(), order);
  LabelSubset x = init;

  auto feasible = [&](const LabelSubset& y) {
    count_eval(stats);
    return is_feasible(g, y);
  };

  bool moved = true;
  while (moved) {
    moved = false;
    std::vector<int> in_x, out_x;
    for (int l : label_order)
      (x.test(l) ? in_x : out_x).push_back(l);

    // Single removals.
    for (int r : in_x) {
      LabelSubset y = x;
      y.set(r, false);
      if (feasible(y)) {
        x = y;
        moved = true;
        break;
      }
    }
    if (moved) continue;

    // Pair removals, bare first, then with one addition.
    for (std::size_t i = 0; i < in_x.size() && !moved; ++i) {
      for (std::size_t j = i + 1; j < in_x.size() && !moved; ++j) {
        LabelSubset base = x;
        base.set(in_x[i], false);
        base.set(in_x[j], false);
        if (feasible(base)) {
          x = base;
          moved = true;
          break;
        }
        for (int a : out_x) {
          LabelSubset y = base;
          y.set(a);
          if (feasible(y)) {
            x = y;
            moved = true;
            break;
          }
        }
      }
    }
  }
  return x;
}

namespace {

// Enumerates subsets of `pool` of size 1..max_size; returns false from the
// visitor to stop.
bool for_each_combination(const std::vector<int>& pool, int max_size,
                          const std::function<bool(const std::vector<int>&)>& visit) {
  std::vector<int> combo;
  std::function<bool(int, int)> rec = [&](int start, int remaining) {
    if (!combo.empty() && !visit(combo)) return false;
    if (remaining == 0) return true;
    for (int i = start; i < static_cast<int>(pool.size()); ++i) {
      combo.push_back(pool[i]);
      if (!rec(i + 1, remaining - 1)) return false;
      combo.pop_back();
    }
    return true;
  };
  return rec(0, max_size);
}

}  // namespace

bool is_h_switch_local_optimum(const LabeledGraph& g, const LabelSubset& x, int h) {
  check_width(x, g.k());
  if (!is_feasible(g, x)) fail(Errc::infeasible_init, "local-optimum check requires a feasible solution");

  std::vector<int> in_x = x.set_indices(), out_x;
  for (int l = 0; l < g.k(); ++l)
    if (!x.test(l)) out_x.push_back(l);

  bool improvable = false;
  for_each_combination(in_x, h, [&](const std::vector<int>& removals) {
    LabelSubset base = x;
    for (int r : removals) base.set(r, false);
    if (is_feasible(g, base)) {
      improvable = true;
      return false;
    }
    int add_limit = std::min<int>(h, static_cast<int>(removals.size()) - 1);
    if (add_limit > 0) {
      for_each_combination(out_x, add_limit, [&](const std::vector<int>& adds) {
        LabelSubset y = base;
        for (int a : adds) y.set(a);
        if (is_feasible(g, y)) {
          improvable = true;
          return false;
        }
        return true;
      });
    }
    return !improvable;
  });
  return !improvable;
}

SpanningTree tree_from_subset(const LabeledGraph& g, const LabelSubset& x) {
  check_width(x, g.k());
  UnionFind uf(g.n());
  SpanningTree tree;
  for (int ei = 0; ei < g.m(); ++ei) {
    const Edge& e = g.edge(ei);
    if (x.test(e.label) && uf.unite(e.u, e.v)) {
      tree.edge_indices.push_back(ei);
      if (static_cast<int>(tree.edge_indices.size()) == g.n() - 1) return tree;
    }
  }
  fail(Errc::infeasible_init, "selected labels do not span the graph");
}

SpanningTree random_spanning_tree(const LabeledGraph& g, Rng& rng) {
  std::vector<int> order(g.m());
  std::iota(order.begin(), order.end(), 0);
  for (int i = g.m() - 1; i > 0; --i) std::swap(order[i], order[static_cast<int>(rng.below(i + 1))]);
  UnionFind uf(g.n());
  SpanningTree tree;
  for (int ei : order)
    if (uf.unite(g.edge(ei).u, g.edge(ei).v)) tree.edge_indices.push_back(ei);
  return tree;
}

LabelSubset tree_labels(const LabeledGraph& g, const SpanningTree& tree) {
  LabelSubset labels(g.k());
  for (int ei : tree.edge_indices) labels.set(g.edge(ei).label);
  return labels;
}

namespace {

void validate_tree(const LabeledGraph& g, const SpanningTree& tree) {
  if (static_cast<int>(tree.edge_indices.size()) != g.n() - 1)
    fail(Errc::invalid_tree, "tree has " + std::to_string(tree.edge_indices.size()) + " edges, expected " +
                                 std::to_string(g.n() - 1));
  UnionFind uf(g.n());
  for (int ei : tree.edge_indices) {
    if (ei < 0 || ei >= g.m()) fail(Errc::invalid_tree, "edge index " + std::to_string(ei) + " out of range");
    if (!uf.unite(g.edge(ei).u, g.edge(ei).v))
      fail(Errc::invalid_tree, "edge index " + std::to_string(ei) + " closes a cycle");
  }
}

}  // namespace

LabelSubset era(const LabeledGraph& g, const SpanningTree& init, const TieBreakPolicy& order,
                HeuristicStats* stats) {
  validate_tree(g, init);

  std::vector<char> in_tree(g.m(), 0);
  for (int ei : init.edge_indices) in_tree[ei] = 1;
  std::vector<int> label_count(g.k(), 0);
  for (int ei : init.edge_indices) ++label_count[g.edge(ei).label];

  const std::vector<int> scan_order = policy_order(g.m(), order);

  // adjacency over tree edges: node -> (neighbor, edge id)
  auto tree_path = [&](int from, int to) {
    std::vector<std::vector<std::pair<int, int>>> adj(g.n());
    for (int ei = 0; ei < g.m(); ++ei)
      if (in_tree[ei]) {
        adj[g.edge(ei).u].push_back({g.edge(ei).v, ei});
        adj[g.edge(ei).v].push_back({g.edge(ei).u, ei});
      }
    std::vector<int> parent_edge(g.n(), -1), parent(g.n(), -1);
    std::vector<int> stack{from};
    std::vector<char> seen(g.n(), 0);
    seen[from] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      if (v == to) break;
      for (auto [w, ei] : adj[v])
        if (!seen[w]) {
          seen[w] = 1;
          parent[w] = v;
          parent_edge[w] = ei;
          stack.push_back(w);
        }
    }
    std::vector<int> path;
    for (int v = to; v != from; v = parent[v]) path.push_back(parent_edge[v]);
    return path;
  };

  bool improved = true;
  while (improved) {
    improved = false;
    for (int pos : scan_order) {
      if (in_tree[pos]) continue;
      const Edge& e = g.edge(pos);
      if (stats) ++stats->evaluations;
      if (label_count[e.label] == 0) continue;  // swap would introduce a new label, never a reduction
      int best_edge = -1;
      for (int ei : tree_path(e.u, e.v)) {
        int l = g.edge(ei).label;
        if (l == e.label || label_count[l] != 1) continue;
        if (best_edge < 0 || ei < best_edge) best_edge = ei;
      }
      if (best_edge >= 0) {
        in_tree[best_edge] = 0;
        in_tree[pos] = 1;
        --label_count[g.edge(best_edge).label];
        ++label_count[e.label];
        improved = true;
        break;  // restart the scan on the new tree
      }
    }
  }

  LabelSubset labels(g.k());
  for (int l = 0; l < g.k(); ++l)
    if (label_count[l] > 0) labels.set(l);
  return labels;
}

}  // namespace mlst
