#include "coevolve/scheduler.hpp"

#include <algorithm>

namespace coevolve {

std::uint32_t EventScheduler::generation(ProcessId id) const {
  const auto it = generation_.find(id);
  return it == generation_.end() ? 0U : it->second;
}

std::uint32_t EventScheduler::next_generation(ProcessId id) { return ++generation_[id]; }

void EventScheduler::push(const ScheduledSample& sample) {
  if (!is_live(sample)) return;
  heap_.push_back(sample);
  std::push_heap(heap_.begin(), heap_.end(), Later{});
}

void EventScheduler::schedule(ProcessId id, Time time) {
  push(ScheduledSample{time, id, next_generation(id)});
}

void EventScheduler::schedule_bulk(const std::vector<std::pair<ProcessId, Time>>& entries) {
  heap_.reserve(heap_.size() + entries.size());
  for (const auto& [id, time] : entries) heap_.push_back(ScheduledSample{time, id, generation(id)});
  std::make_heap(heap_.begin(), heap_.end(), Later{});
}

void EventScheduler::drop_stale() {
  while (!heap_.empty() && !is_live(heap_.front())) {
    std::pop_heap(heap_.begin(), heap_.end(), Later{});
    heap_.pop_back();
  }
}

std::optional<ScheduledSample> EventScheduler::peek() {
  drop_stale();
  if (heap_.empty()) return std::nullopt;
  return heap_.front();
}

std::optional<ScheduledSample> EventScheduler::extract_min() {
  drop_stale();
  if (heap_.empty()) return std::nullopt;
  std::pop_heap(heap_.begin(), heap_.end(), Later{});
  const ScheduledSample top = heap_.back();
  heap_.pop_back();
  // The popped entry is consumed; retire its generation so a later push of
  // the same generation cannot resurrect it.
  next_generation(top.process_id);
  return top;
}

}  // namespace coevolve
