#ifndef COEVOLVE_SIMULATOR_HPP
#define COEVOLVE_SIMULATOR_HPP

#include <cstddef>
#include <cstdint>

#include "coevolve/network.hpp"
#include "coevolve/params.hpp"
#include "coevolve/scheduler.hpp"
#include "coevolve/state.hpp"

namespace coevolve {

// Event-driven sampler for the joint retweet / link process. Every dimension
// keeps its own next-event sample in a priority queue; after an event only
// the dimensions whose intensity changed are resampled. Each dimension draws
// from its own (seed, dimension, generation) substream, so a run is fully
// determined by the parameters and the seed.
class Simulator {
 public:
  Simulator(ModelParams params, std::uint64_t seed, NetworkState initial);
  Simulator(ModelParams params, std::uint64_t seed);

  const CoevolveState& state() const { return state_; }
  const ModelParams& params() const { return params_; }
  Time time() const { return state_.time(); }

  // Feeds observed events (validated as a history on top of the current
  // state) and positions the clock at `until`, which must not precede them.
  void replay(const EventLog& history, Time until);

  // Samples events in [time(), horizon). `max_events` (0 = unlimited) stops
  // early after that many events; the clock is then left at the last event.
  EventLog run(Time horizon, std::size_t max_events = 0);

  ProcessId retweet_process(NodeId u, NodeId s) const {
    return static_cast<ProcessId>(u) * state_.nodes() + s;
  }
  ProcessId link_process(NodeId u, NodeId s) const {
    const auto m = static_cast<ProcessId>(state_.nodes());
    return m * m + static_cast<ProcessId>(u) * m + s;
  }

 private:
  void rebuild_queue(Time horizon);
  void resample(ProcessId id, const DecayedIntensity& intensity, Time horizon);
  void resample_retweet(NodeId u, NodeId s, Time horizon);
  void resample_link(NodeId u, NodeId s, Time horizon);
  Event decode(const ScheduledSample& sample) const;

  ModelParams params_;
  std::uint64_t seed_;
  std::uint64_t epoch_ = 0;
  CoevolveState state_;
  EventScheduler queue_;
};

// Runs a fresh simulation over [0, horizon).
EventLog simulate(const ModelParams& params, Time horizon, std::uint64_t seed,
                  const NetworkState& initial, std::size_t max_events = 0);
EventLog simulate(const ModelParams& params, Time horizon, std::uint64_t seed,
                  std::size_t max_events = 0);

// Reconstructs the state from the events of `history` up to time t, then
// keeps sampling until `horizon`. Returns only the continuation.
EventLog resimulate_from(const History& history, Time t, const ModelParams& params,
                         Time horizon, std::uint64_t seed);

// Reference sampler: Ogata thinning over all m^2 + m(m-1) dimensions with
// brute-force intensity evaluation. Refuses networks above kMaxOracleNodes.
inline constexpr std::size_t kMaxOracleNodes = 10;
EventLog simulate_oracle(const ModelParams& params, Time horizon, std::uint64_t seed,
                         const NetworkState& initial, std::size_t max_events = 0);
EventLog simulate_oracle(const ModelParams& params, Time horizon, std::uint64_t seed,
                         std::size_t max_events = 0);

}  // namespace coevolve

#endif  // COEVOLVE_SIMULATOR_HPP
