#ifndef COEVOLVE_EVENT_HPP
#define COEVOLVE_EVENT_HPP

#include <cstdint>
#include <vector>

#include "coevolve/kernel.hpp"

namespace coevolve {

using NodeId = std::uint32_t;

enum class EventKind : std::uint8_t { Retweet, Link };

// (destination, source, time). A retweet with destination == source is an
// original tweet; a link event means destination starts following source.
struct Event {
  EventKind kind;
  NodeId destination;
  NodeId source;
  Time time;

  bool is_original() const { return kind == EventKind::Retweet && destination == source; }

  friend bool operator==(const Event&, const Event&) = default;
};

using EventLog = std::vector<Event>;

inline Event retweet(NodeId u, NodeId s, Time t) { return Event{EventKind::Retweet, u, s, t}; }
inline Event link(NodeId u, NodeId s, Time t) { return Event{EventKind::Link, u, s, t}; }

char kind_code(EventKind kind);

}  // namespace coevolve

#endif  // COEVOLVE_EVENT_HPP
