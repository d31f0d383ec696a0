#ifndef MLST_ARCHIVE_HPP
#define MLST_ARCHIVE_HPP

#include <vector>

#include "mlst/fitness.hpp"
#include "mlst/label_subset.hpp"

namespace mlst {

struct ArchiveEntry {
  LabelSubset solution;
  FitnessVector value;
};

// Mutually non-dominated set of solutions, at most one entry per fitness
// vector. For a fixed labels_used only the smallest component count can
// survive, so the size never exceeds k+1. Entries are kept sorted by
// labels_used.
class ParetoArchive {
public:
  // GSEMO insertion rule: reject the offspring when some entry dominates it
  // or carries an equal vector (keep-first); otherwise insert it and drop
  // every entry it dominates. Returns true when inserted.
  bool consider(const LabelSubset& solution, const FitnessVector& value);

  int size() const { return static_cast<int>(entries_.size()); }
  const ArchiveEntry& operator[](int i) const { return entries_[i]; }
  const std::vector<ArchiveEntry>& entries() const { return entries_; }

  // Feasible entry with the fewest labels, or nullptr.
  const ArchiveEntry* best_feasible() const;
  // Entry minimizing (components, labels_used); never null once populated.
  const ArchiveEntry* best_overall() const;

  // Throws Error(precondition_violated) on any violation of the three
  // invariants: pairwise non-domination, vector uniqueness, size <= k+1.
  void check_invariants(int k) const;

private:
  std::vector<ArchiveEntry> entries_;
};

}  // namespace mlst

#endif
