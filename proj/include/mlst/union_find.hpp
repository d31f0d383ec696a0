#ifndef MLST_UNION_FIND_HPP
#define MLST_UNION_FIND_HPP

#include <vector>

namespace mlst {

// Disjoint-set forest with path halving and union by size.
class UnionFind {
public:
  explicit UnionFind(int n) : parent_(n) {
    for (int i = 0; i < n; ++i) parent_[i] = i;
    size_.assign(n, 1);
  }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // Returns true when two components were merged.
  bool unite(int a, int b) {
    int ra = find(a), rb = find(b);
    if (ra == rb) return false;
    if (size_[ra] < size_[rb]) std::swap(ra, rb);
    parent_[rb] = ra;
    size_[ra] += size_[rb];
    return true;
  }

  bool same(int a, int b) { return find(a) == find(b); }

private:
  std::vector<int> parent_;
  std::vector<int> size_;
};

}  // namespace mlst

#endif
