#ifndef COEVOLVE_NETWORK_HPP
#define COEVOLVE_NETWORK_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "coevolve/event.hpp"

namespace coevolve {

struct Edge {
  NodeId node;
  Time created;
};

// Directed follow graph. An edge u -> s means u follows s; edges are only
// ever added, and the follower index mirrors the followee index exactly.
class NetworkState {
 public:
  explicit NetworkState(std::size_t nodes = 0);

  std::size_t nodes() const { return followees_.size(); }
  std::size_t edge_count() const { return created_.size(); }

  bool follows(NodeId u, NodeId s) const;
  std::optional<Time> created_at(NodeId u, NodeId s) const;

  // Throws ValidationError on self-links, duplicates or unknown nodes.
  void add_edge(NodeId u, NodeId s, Time created);

  std::span<const Edge> followees(NodeId u) const { return followees_.at(u); }
  std::span<const Edge> followers(NodeId s) const { return followers_.at(s); }

  // Edges created at or before t.
  NetworkState snapshot(Time t) const;

 private:
  std::uint64_t key(NodeId u, NodeId s) const {
    return static_cast<std::uint64_t>(u) * nodes() + s;
  }

  std::vector<std::vector<Edge>> followees_;
  std::vector<std::vector<Edge>> followers_;
  std::unordered_map<std::uint64_t, Time> created_;
};

// An observed realization: the network at time zero plus the event log.
struct History {
  NetworkState initial;
  EventLog events;

  std::size_t nodes() const { return initial.nodes(); }
};

// Checks time ordering, node ranges, self-links and link uniqueness. Throws
// HistoryError naming the first offending event.
void validate_history(const History& history);

}  // namespace coevolve

#endif  // COEVOLVE_NETWORK_HPP
