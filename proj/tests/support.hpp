#ifndef MLST_TESTS_SUPPORT_HPP
#define MLST_TESTS_SUPPORT_HPP

#include <queue>
#include <vector>

#include "mlst/graph.hpp"
#include "mlst/instances.hpp"
#include "mlst/rng.hpp"

namespace mlst::test {

// Independent connectivity oracle: breadth-first search over an adjacency
// list, no disjoint-set machinery shared with the implementation.
inline int bfs_component_count(const LabeledGraph& g, const LabelSubset& x) {
  std::vector<std::vector<int>> adj(g.n());
  for (const Edge& e : g.edges())
    if (x.test(e.label)) {
      adj[e.u].push_back(e.v);
      adj[e.v].push_back(e.u);
    }
  std::vector<char> seen(g.n(), 0);
  int components = 0;
  for (int s = 0; s < g.n(); ++s) {
    if (seen[s]) continue;
    ++components;
    std::queue<int> q;
    q.push(s);
    seen[s] = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : adj[v])
        if (!seen[w]) {
          seen[w] = 1;
          q.push(w);
        }
    }
  }
  return components;
}

// Small random instance with loosely varied shape, deterministic per seed.
inline InstanceBundle random_instance(std::uint64_t seed, int max_n = 20) {
  Rng rng(seed);
  const int n = 3 + static_cast<int>(rng.below(max_n - 2));
  const long long all_pairs = static_cast<long long>(n) * (n - 1) / 2;
  const int m = n - 1 + static_cast<int>(rng.below(all_pairs - (n - 1) + 1));
  const int k = 1 + static_cast<int>(rng.below(m));
  const int b = (m + k - 1) / k + static_cast<int>(rng.below(3));
  return gen_random_mlst_b(n, m, k, b, rng.next_u64());
}

inline LabelSubset random_bits(int k, std::uint64_t seed) {
  Rng rng(seed);
  LabelSubset x(k);
  for (int i = 0; i < k; ++i)
    if (rng.next_u64() & 1) x.set(i);
  return x;
}

}  // namespace mlst::test

#endif
