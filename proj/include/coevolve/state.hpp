#ifndef COEVOLVE_STATE_HPP
#define COEVOLVE_STATE_HPP

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "coevolve/decayed_intensity.hpp"
#include "coevolve/network.hpp"
#include "coevolve/params.hpp"

namespace coevolve {

// Decayed sum of unit jumps, sum_j exp(-omega (t - t_j)), plus the number of
// jumps so far. Its integral from the origin follows in closed form:
// int_0^t = (jumps - value(t)) / omega.
class ExposureTrace {
 public:
  ExposureTrace(double omega, Time start) : decay_(0.0, omega, start) {}

  double value_at(Time t) const { return decay_.value_at(t); }
  double integral_from_origin(Time t) const {
    return (static_cast<double>(jumps_) - decay_.value_at(t)) / decay_.omega();
  }
  void add(Time t) {
    decay_.excite(1.0, t);
    ++jumps_;
  }
  std::uint32_t jumps() const { return jumps_; }

 private:
  DecayedIntensity decay_;
  std::uint32_t jumps_ = 0;
};

using PairKey = std::uint64_t;

// Sparse per-(destination, source) retweet state. Entries exist only once
// the pair has been counted or excited; missing entries read as zero.
struct DiffusionState {
  std::unordered_map<PairKey, std::uint32_t> counts;
  std::unordered_map<PairKey, ExposureTrace> gamma_exposure;  // drives retweets, decay omega1
  std::unordered_map<PairKey, ExposureTrace> link_exposure;   // drives links, decay omega2
};

// Pairs whose intensities changed when an event was applied.
struct TouchedPairs {
  std::vector<std::pair<NodeId, NodeId>> retweet;
  std::vector<std::pair<NodeId, NodeId>> link;

  void clear() {
    retweet.clear();
    link.clear();
  }
};

// Network plus diffusion state, advanced one event at a time. Exposures are
// stored unweighted so the same replay serves any (eta, beta, mu, alpha).
class CoevolveState {
 public:
  CoevolveState(NetworkState initial, double omega1, double omega2, LinkVariant variant);

  std::size_t nodes() const { return network_.nodes(); }
  const NetworkState& network() const { return network_; }
  const DiffusionState& diffusion() const { return diffusion_; }
  double omega1() const { return omega1_; }
  double omega2() const { return omega2_; }
  LinkVariant variant() const { return variant_; }
  Time time() const { return now_; }

  PairKey key(NodeId u, NodeId s) const { return static_cast<PairKey>(u) * nodes() + s; }
  std::pair<NodeId, NodeId> pair(PairKey k) const {
    return {static_cast<NodeId>(k / nodes()), static_cast<NodeId>(k % nodes())};
  }

  // Unweighted decayed exposures at t (>= last update of the pair).
  double gamma_exposure(NodeId u, NodeId s, Time t) const;
  double link_exposure(NodeId u, NodeId s, Time t) const;

  // Their integrals over [0, t].
  double gamma_exposure_integral(NodeId u, NodeId s, Time t) const;
  double link_exposure_integral(NodeId u, NodeId s, Time t) const;

  std::uint32_t count(NodeId u, NodeId s) const;

  // Applies an event at a time no earlier than the previous one. A retweet
  // (u, s) excites the followers of u; a link (u, s) adds the edge and
  // closes the pair's link process. Edges created later never see earlier
  // retweets.
  void apply(const Event& event, TouchedPairs* touched = nullptr);

  // Moves the clock forward without an event.
  void advance_to(Time t);

 private:
  NetworkState network_;
  DiffusionState diffusion_;
  double omega1_;
  double omega2_;
  LinkVariant variant_;
  Time now_ = 0.0;
};

}  // namespace coevolve

#endif  // COEVOLVE_STATE_HPP
