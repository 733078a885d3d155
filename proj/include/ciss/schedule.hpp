#pragma once

#include <cstdint>
#include <vector>

namespace ciss {

// Per-pixel class id. Id 0 is the background label, id 1 the unknown label;
// object classes start at 2 and never reuse the two reserved ids.
using ClassId = std::int32_t;

inline constexpr ClassId kBackgroundId = 0;
inline constexpr ClassId kUnknownId = 1;
inline constexpr ClassId kFirstObjectId = 2;

// Ordered, pairwise-disjoint class sets C_1..C_T defining an incremental
// scenario. Immutable after construction; safe to share across threads.
class TaskSchedule {
 public:
  TaskSchedule(std::vector<std::vector<ClassId>> tasks,
               std::uint64_t ordering_seed);

  int num_tasks() const { return static_cast<int>(tasks_.size()); }

  // Classes introduced at task t (1-based), sorted ascending.
  const std::vector<ClassId>& task_classes(int t) const;

  // Union of C_1..C_t, sorted ascending. Throws RangeError for t out of
  // [1, T].
  std::vector<ClassId> seen_classes(int t) const;

  std::vector<ClassId> all_classes() const { return seen_classes(num_tasks()); }

  std::uint64_t ordering_seed() const { return ordering_seed_; }

 private:
  std::vector<std::vector<ClassId>> tasks_;
  std::uint64_t ordering_seed_;
};

// Builds a base/step schedule: |C_1| = base_count, |C_t| = step_count for the
// num_steps following tasks, ids drawn without replacement from a
// seed-permuted catalog of `catalog_size` object ids starting at 2.
// num_steps may be 0 (single-task scenario). Pure function of its arguments.
TaskSchedule make_schedule(int base_count, int step_count, int num_steps,
                           std::uint64_t ordering_seed, int catalog_size);

}  // namespace ciss
