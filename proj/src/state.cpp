#include "coevolve/state.hpp"

#include <string>

#include "coevolve/errors.hpp"

namespace coevolve {

CoevolveState::CoevolveState(NetworkState initial, double omega1, double omega2,
                             LinkVariant variant)
    : network_(std::move(initial)), omega1_(omega1), omega2_(omega2), variant_(variant) {
  if (!(omega1 > 0.0) || !(omega2 > 0.0))
    throw ValidationError("kernel decay rates must be positive");
}

double CoevolveState::gamma_exposure(NodeId u, NodeId s, Time t) const {
  const auto it = diffusion_.gamma_exposure.find(key(u, s));
  return it == diffusion_.gamma_exposure.end() ? 0.0 : it->second.value_at(t);
}

double CoevolveState::link_exposure(NodeId u, NodeId s, Time t) const {
  const auto it = diffusion_.link_exposure.find(key(u, s));
  return it == diffusion_.link_exposure.end() ? 0.0 : it->second.value_at(t);
}

double CoevolveState::gamma_exposure_integral(NodeId u, NodeId s, Time t) const {
  const auto it = diffusion_.gamma_exposure.find(key(u, s));
  return it == diffusion_.gamma_exposure.end() ? 0.0 : it->second.integral_from_origin(t);
}

double CoevolveState::link_exposure_integral(NodeId u, NodeId s, Time t) const {
  const auto it = diffusion_.link_exposure.find(key(u, s));
  return it == diffusion_.link_exposure.end() ? 0.0 : it->second.integral_from_origin(t);
}

std::uint32_t CoevolveState::count(NodeId u, NodeId s) const {
  const auto it = diffusion_.counts.find(key(u, s));
  return it == diffusion_.counts.end() ? 0U : it->second;
}

void CoevolveState::advance_to(Time t) {
  if (t < now_)
    throw TimeTravelError("cannot move state clock back to t=" + std::to_string(t));
  now_ = t;
}

void CoevolveState::apply(const Event& event, TouchedPairs* touched) {
  const NodeId u = event.destination;
  const NodeId s = event.source;
  const Time t = event.time;
  if (t < now_)
    throw TimeTravelError("event at t=" + std::to_string(t) + " precedes state time " +
                          std::to_string(now_));
  if (u >= nodes() || s >= nodes()) throw ValidationError("event references unknown node");
  now_ = t;
  if (touched) touched->clear();

  auto excite = [t](std::unordered_map<PairKey, ExposureTrace>& map, PairKey k, double omega) {
    map.try_emplace(k, omega, t).first->second.add(t);
  };

  if (event.kind == EventKind::Link) {
    network_.add_edge(u, s, t);
    diffusion_.link_exposure.erase(key(u, s));
    return;
  }

  ++diffusion_.counts[key(u, s)];
  for (const Edge& follower : network_.followers(u)) {
    const NodeId v = follower.node;
    if (v == s) continue;  // a source's own tweet rate is never excited
    excite(diffusion_.gamma_exposure, key(v, s), omega1_);
    if (touched) touched->retweet.emplace_back(v, s);
    if (variant_ == LinkVariant::FolloweeDriven && !network_.follows(v, s)) {
      excite(diffusion_.link_exposure, key(v, s), omega2_);
      if (touched) touched->link.emplace_back(v, s);
    }
  }
  if (variant_ == LinkVariant::SelfDriven && u != s && !network_.follows(u, s)) {
    excite(diffusion_.link_exposure, key(u, s), omega2_);
    if (touched) touched->link.emplace_back(u, s);
  }
}

}  // namespace coevolve
