#include "mlst/oracle.hpp"

#include <bit>
#include <string>
#include <vector>

#include "mlst/union_find.hpp"

namespace mlst {

namespace {

void check_label_limit(const LabeledGraph& g, int k_limit) {
  if (g.k() > k_limit)
    fail(Errc::too_many_labels,
         std::to_string(g.k()) + " labels exceed the enumeration limit " + std::to_string(k_limit));
}

LabelSubset subset_from_indices(int k, const std::vector<int>& indices) {
  LabelSubset s(k);
  for (int i : indices) s.set(i);
  return s;
}

}  // namespace

OracleResult brute_force_opt(const LabeledGraph& g, int k_limit) {
  check_label_limit(g, k_limit);
  const int k = g.k();
  long long examined = 0;

  for (int size = 1; size <= k; ++size) {
    std::vector<int> combo(size);
    for (int i = 0; i < size; ++i) combo[i] = i;
    while (true) {
      ++examined;
      LabelSubset candidate = subset_from_indices(k, combo);
      if (is_feasible(g, candidate)) return {size, candidate, examined};

      int i = size - 1;
      while (i >= 0 && combo[i] == k - size + i) --i;
      if (i < 0) break;
      ++combo[i];
      for (int j = i + 1; j < size; ++j) combo[j] = combo[j - 1] + 1;
    }
  }
  // unreachable: the all-labels subset is feasible by graph invariant
  fail(Errc::precondition_violated, "no feasible subset found on a connected graph");
}

CorollaryReport verify_corollary_1(const LabeledGraph& g, int k_limit) {
  check_label_limit(g, k_limit);
  const int k = g.k();
  const int b = max_label_frequency(g);
  if (b < 2) fail(Errc::precondition_violated, "corollary requires b >= 2, got b = " + std::to_string(b));
  const int opt = brute_force_opt(g, k_limit).opt_value;

  // Feasibility of every subset, indexed by bit mask (k <= 14).
  const std::uint32_t total = std::uint32_t{1} << k;
  std::vector<char> feasible(total, 0);
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    UnionFind uf(g.n());
    int comps = g.n();
    for (int ei = 0; ei < g.m(); ++ei) {
      const Edge& e = g.edge(ei);
      if ((mask >> e.label) & 1)
        if (uf.unite(e.u, e.v)) --comps;
    }
    feasible[mask] = comps == 1;
  }

  CorollaryReport report{true, std::nullopt, 0};
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    if (!feasible[mask]) continue;
    const int size = std::popcount(mask);
    if (2 * size <= opt * (b + 1)) continue;  // within the bound, nothing to show
    ++report.feasible_over_bound;

    bool found = false;
    // one or two labels fewer within the 2-switch neighborhood
    for (int r1 = 0; r1 < k && !found; ++r1) {
      if (!((mask >> r1) & 1)) continue;
      if (feasible[mask ^ (1u << r1)]) found = true;
      for (int r2 = r1 + 1; r2 < k && !found; ++r2) {
        if (!((mask >> r2) & 1)) continue;
        std::uint32_t base = mask ^ (1u << r1) ^ (1u << r2);
        if (feasible[base]) found = true;
        for (int a = 0; a < k && !found; ++a)
          if (!((mask >> a) & 1) && feasible[base | (1u << a)]) found = true;
      }
    }
    if (!found) {
      report.holds = false;
      LabelSubset cx(k);
      for (int l = 0; l < k; ++l)
        if ((mask >> l) & 1) cx.set(l);
      report.counterexample = cx;
      return report;
    }
  }
  return report;
}

HalvingReport verify_component_halving(const LabeledGraph& g, const LabelSubset& x, int k_limit) {
  check_width(x, g.k());
  const int r = component_count(g, x);
  if (r <= 2)
    fail(Errc::precondition_violated, "component count " + std::to_string(r) + " not greater than 2");
  const int opt = brute_force_opt(g, k_limit).opt_value;
  const int bound = static_cast<int>(static_cast<long long>(r) * (2 * opt - 1) / (2 * opt));

  HalvingReport report{false, std::nullopt, r, bound};
  for (int l = 0; l < g.k(); ++l) {
    if (x.test(l)) continue;
    LabelSubset y = x;
    y.set(l);
    if (component_count(g, y) <= bound) {
      report.holds = true;
      report.witness_label = l;
      return report;
    }
  }
  return report;
}

}  // namespace mlst
