#include "coevolve/reference_intensity.hpp"

#include <cmath>
#include <stdexcept>

#include "coevolve/errors.hpp"

namespace coevolve {

ReferenceIntensity::ReferenceIntensity(NetworkState initial, ModelParams params)
    : initial_(std::move(initial)), params_(std::move(params)) {
  params_.validate();
  if (params_.nodes() != initial_.nodes())
    throw ValidationError("parameter and network node counts differ");
}

void ReferenceIntensity::record(const Event& event) {
  if (!events_.empty() && event.time < events_.back().time)
    throw HistoryError(events_.size(), "time goes backwards");
  if (event.kind == EventKind::Link)
    link_index_.emplace(static_cast<std::uint64_t>(event.destination) * nodes() + event.source,
                        events_.size());
  events_.push_back(event);
}

bool ReferenceIntensity::in_history(std::size_t index, Time t, Limit limit) const {
  const Time ti = events_[index].time;
  return limit == Limit::Left ? ti < t : ti <= t;
}

bool ReferenceIntensity::followed_before(NodeId u, NodeId v, std::size_t index) const {
  if (initial_.follows(u, v)) return true;
  const auto it = link_index_.find(static_cast<std::uint64_t>(u) * nodes() + v);
  return it != link_index_.end() && it->second < index;
}

bool ReferenceIntensity::linked_by(NodeId u, NodeId s, Time t, Limit limit) const {
  if (initial_.follows(u, s)) return true;
  const auto it = link_index_.find(static_cast<std::uint64_t>(u) * nodes() + s);
  return it != link_index_.end() && in_history(it->second, t, limit);
}

Rate ReferenceIntensity::retweet(NodeId u, NodeId s, Time t, Limit limit) const {
  if (u == s) return params_.eta.at(u);
  double sum = 0.0;
  for (std::size_t i = 0; i < events_.size(); ++i) {
    const Event& e = events_[i];
    if (!in_history(i, t, limit)) break;
    if (e.kind != EventKind::Retweet || e.source != s || e.destination == u) continue;
    if (followed_before(u, e.destination, i)) sum += std::exp(-params_.omega1 * (t - e.time));
  }
  return params_.beta.at(s) * sum;
}

Rate ReferenceIntensity::link(NodeId u, NodeId s, Time t, Limit limit) const {
  if (u == s) throw std::domain_error("link intensity is undefined for a self-pair");
  if (linked_by(u, s, t, limit)) return 0.0;
  double sum = 0.0;
  for (std::size_t i = 0; i < events_.size(); ++i) {
    const Event& e = events_[i];
    if (!in_history(i, t, limit)) break;
    if (e.kind != EventKind::Retweet || e.source != s) continue;
    const bool drives = params_.link_variant == LinkVariant::SelfDriven
                            ? e.destination == u
                            : e.destination != u && followed_before(u, e.destination, i);
    if (drives) sum += std::exp(-params_.omega2 * (t - e.time));
  }
  return params_.mu.at(u) + params_.alpha.at(u) * sum;
}

}  // namespace coevolve
