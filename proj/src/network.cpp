#include "coevolve/network.hpp"

#include <cmath>
#include <string>
#include <unordered_set>

#include "coevolve/errors.hpp"

namespace coevolve {

NetworkState::NetworkState(std::size_t nodes) : followees_(nodes), followers_(nodes) {}

bool NetworkState::follows(NodeId u, NodeId s) const {
  return u < nodes() && s < nodes() && created_.count(key(u, s)) != 0;
}

std::optional<Time> NetworkState::created_at(NodeId u, NodeId s) const {
  if (u >= nodes() || s >= nodes()) return std::nullopt;
  const auto it = created_.find(key(u, s));
  if (it == created_.end()) return std::nullopt;
  return it->second;
}

void NetworkState::add_edge(NodeId u, NodeId s, Time created) {
  if (u >= nodes() || s >= nodes())
    throw ValidationError("edge " + std::to_string(u) + "->" + std::to_string(s) +
                          " references a node outside [0, " + std::to_string(nodes()) + ")");
  if (u == s) throw ValidationError("self-link on node " + std::to_string(u));
  if (!created_.emplace(key(u, s), created).second)
    throw ValidationError("duplicate edge " + std::to_string(u) + "->" + std::to_string(s));
  followees_[u].push_back(Edge{s, created});
  followers_[s].push_back(Edge{u, created});
}

NetworkState NetworkState::snapshot(Time t) const {
  NetworkState out(nodes());
  for (NodeId u = 0; u < nodes(); ++u)
    for (const Edge& e : followees_[u])
      if (e.created <= t) out.add_edge(u, e.node, e.created);
  return out;
}

void validate_history(const History& history) {
  const std::size_t m = history.nodes();
  std::unordered_set<std::uint64_t> linked;
  Time previous = 0.0;
  for (std::size_t i = 0; i < history.events.size(); ++i) {
    const Event& e = history.events[i];
    if (!std::isfinite(e.time) || e.time < 0.0)
      throw HistoryError(i, "time must be finite and non-negative");
    if (e.time < previous) throw HistoryError(i, "time goes backwards");
    previous = e.time;
    if (e.destination >= m || e.source >= m)
      throw HistoryError(i, "node id outside [0, " + std::to_string(m) + ")");
    if (e.kind == EventKind::Link) {
      if (e.destination == e.source) throw HistoryError(i, "self-link");
      if (history.initial.follows(e.destination, e.source))
        throw HistoryError(i, "link already present in the initial network");
      const std::uint64_t k = static_cast<std::uint64_t>(e.destination) * m + e.source;
      if (!linked.insert(k).second) throw HistoryError(i, "duplicate link event");
    }
  }
}

}  // namespace coevolve
