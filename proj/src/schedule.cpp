#include "ciss/schedule.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "ciss/error.hpp"
#include "ciss/rng.hpp"

namespace ciss {

TaskSchedule::TaskSchedule(std::vector<std::vector<ClassId>> tasks,
                           std::uint64_t ordering_seed)
    : tasks_(std::move(tasks)), ordering_seed_(ordering_seed) {
  if (tasks_.empty()) throw ConfigError("schedule: needs at least one task");
  std::set<ClassId> seen;
  for (std::size_t t = 0; t < tasks_.size(); ++t) {
    auto& cs = tasks_[t];
    if (cs.empty())
      throw ConfigError("schedule: task " + std::to_string(t + 1) +
                        " has no classes");
    std::sort(cs.begin(), cs.end());
    for (ClassId c : cs) {
      if (c < kFirstObjectId)
        throw ConfigError("schedule: reserved id " + std::to_string(c) +
                          " used as an object class");
      if (!seen.insert(c).second)
        throw ConfigError("schedule: class " + std::to_string(c) +
                          " appears in more than one task");
    }
  }
}

const std::vector<ClassId>& TaskSchedule::task_classes(int t) const {
  if (t < 1 || t > num_tasks())
    throw RangeError("schedule: task index " + std::to_string(t) +
                     " outside [1, " + std::to_string(num_tasks()) + "]");
  return tasks_[static_cast<std::size_t>(t - 1)];
}

std::vector<ClassId> TaskSchedule::seen_classes(int t) const {
  if (t < 1 || t > num_tasks())
    throw RangeError("schedule: task index " + std::to_string(t) +
                     " outside [1, " + std::to_string(num_tasks()) + "]");
  std::vector<ClassId> out;
  for (int s = 1; s <= t; ++s) {
    const auto& cs = tasks_[static_cast<std::size_t>(s - 1)];
    out.insert(out.end(), cs.begin(), cs.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

TaskSchedule make_schedule(int base_count, int step_count, int num_steps,
                           std::uint64_t ordering_seed, int catalog_size) {
  if (base_count < 1) throw ConfigError("make_schedule: base_count must be >= 1");
  if (step_count < 1) throw ConfigError("make_schedule: step_count must be >= 1");
  if (num_steps < 0) throw ConfigError("make_schedule: num_steps must be >= 0");
  if (catalog_size < 1)
    throw ConfigError("make_schedule: catalog_size must be >= 1");

  const int needed = base_count + step_count * num_steps;
  if (needed > catalog_size)
    throw ConfigError("make_schedule: schedule needs " + std::to_string(needed) +
                      " classes but catalog holds " +
                      std::to_string(catalog_size) + " (short by " +
                      std::to_string(needed - catalog_size) + ")");

  std::vector<ClassId> catalog(static_cast<std::size_t>(catalog_size));
  for (int i = 0; i < catalog_size; ++i)
    catalog[static_cast<std::size_t>(i)] = kFirstObjectId + i;
  Rng rng(mix_seed(ordering_seed, 0x5c4ed01e));
  rng.shuffle(catalog);

  std::vector<std::vector<ClassId>> tasks;
  std::size_t pos = 0;
  tasks.emplace_back(catalog.begin(), catalog.begin() + base_count);
  pos += static_cast<std::size_t>(base_count);
  for (int s = 0; s < num_steps; ++s) {
    tasks.emplace_back(catalog.begin() + static_cast<std::ptrdiff_t>(pos),
                       catalog.begin() +
                           static_cast<std::ptrdiff_t>(pos + step_count));
    pos += static_cast<std::size_t>(step_count);
  }
  return TaskSchedule(std::move(tasks), ordering_seed);
}

}  // namespace ciss
