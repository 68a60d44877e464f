#ifndef COEVOLVE_SCHEDULER_HPP
#define COEVOLVE_SCHEDULER_HPP

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "coevolve/kernel.hpp"

namespace coevolve {

using ProcessId = std::uint64_t;

struct ScheduledSample {
  Time time;
  ProcessId process_id;
  std::uint32_t generation;
};

// Next-event priority queue over process dimensions. Each process carries a
// generation counter; bumping it turns every older heap entry of that process
// stale, and stale entries are skipped on extraction. Ties in time are broken
// by process id.
class EventScheduler {
 public:
  // Schedules (or reschedules) a process. Any earlier entry becomes stale.
  void schedule(ProcessId id, Time time);

  // Invalidates the live entry of a process, if any.
  void cancel(ProcessId id) { next_generation(id); }

  // Bumps and returns the generation of a process, invalidating its entry.
  std::uint32_t next_generation(ProcessId id);

  // Pushes an entry; ignored unless its generation is the current one.
  void push(const ScheduledSample& sample);

  // Removes and returns the live entry with the smallest (time, id).
  std::optional<ScheduledSample> extract_min();

  // Smallest live entry without removing it.
  std::optional<ScheduledSample> peek();

  std::uint32_t generation(ProcessId id) const;

  bool empty() { return !peek().has_value(); }
  std::size_t heap_size() const { return heap_.size(); }

  // Inserts fresh processes (generation 0) in one heapify pass.
  void schedule_bulk(const std::vector<std::pair<ProcessId, Time>>& entries);

 private:
  struct Later {
    bool operator()(const ScheduledSample& a, const ScheduledSample& b) const {
      if (a.time != b.time) return a.time > b.time;
      return a.process_id > b.process_id;
    }
  };

  bool is_live(const ScheduledSample& entry) const {
    return entry.generation == generation(entry.process_id);
  }
  void drop_stale();

  std::vector<ScheduledSample> heap_;
  std::unordered_map<ProcessId, std::uint32_t> generation_;
};

}  // namespace coevolve

#endif  // COEVOLVE_SCHEDULER_HPP
