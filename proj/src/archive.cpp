#include "mlst/archive.hpp"

#include <algorithm>
#include <cassert>
#include <string>

#include "mlst/errors.hpp"

namespace mlst {

bool ParetoArchive::consider(const LabelSubset& solution, const FitnessVector& value) {
  for (const ArchiveEntry& e : entries_)
    if (e.value == value || dominates(e.value, value)) return false;
  std::erase_if(entries_, [&](const ArchiveEntry& e) { return dominates(value, e.value); });
  auto pos = std::lower_bound(entries_.begin(), entries_.end(), value.labels_used,
                              [](const ArchiveEntry& e, int l) { return e.value.labels_used < l; });
  entries_.insert(pos, ArchiveEntry{solution, value});
  return true;
}

const ArchiveEntry* ParetoArchive::best_feasible() const {
  for (const ArchiveEntry& e : entries_)
    if (e.value.components == 1) return &e;  // sorted by labels_used
  return nullptr;
}

const ArchiveEntry* ParetoArchive::best_overall() const {
  const ArchiveEntry* best = nullptr;
  for (const ArchiveEntry& e : entries_)
    if (!best || e.value.components < best->value.components ||
        (e.value.components == best->value.components && e.value.labels_used < best->value.labels_used))
      best = &e;
  return best;
}

void ParetoArchive::check_invariants(int k) const {
  if (size() > k + 1)
    fail(Errc::precondition_violated, "archive holds " + std::to_string(size()) + " entries, limit " +
                                          std::to_string(k + 1));
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j) {
      if (i == j) continue;
      if (entries_[i].value == entries_[j].value)
        fail(Errc::precondition_violated, "duplicate fitness vector in archive");
      if (dominates(entries_[i].value, entries_[j].value))
        fail(Errc::precondition_violated, "archive entry dominates another");
    }
}

}  // namespace mlst
