#include "coevolve/simulator.hpp"

#include <random>
#include <string>

#include "coevolve/errors.hpp"
#include "coevolve/intensity.hpp"
#include "coevolve/ogata.hpp"
#include "coevolve/random.hpp"
#include "coevolve/reference_intensity.hpp"
#include "coevolve/thinning.hpp"

namespace coevolve {

namespace {

const ModelParams& validated(const ModelParams& p) {
  p.validate();
  return p;
}

}  // namespace

Simulator::Simulator(ModelParams params, std::uint64_t seed, NetworkState initial)
    : params_(validated(params)),
      seed_(seed),
      state_(std::move(initial), params_.omega1, params_.omega2, params_.link_variant) {
  if (state_.nodes() != params_.nodes())
    throw ValidationError("initial network has " + std::to_string(state_.nodes()) +
                          " nodes but parameters describe " + std::to_string(params_.nodes()));
}

Simulator::Simulator(ModelParams params, std::uint64_t seed)
    : Simulator(params, seed, NetworkState(params.nodes())) {}

void Simulator::replay(const EventLog& history, Time until) {
  const std::size_t m = state_.nodes();
  for (std::size_t i = 0; i < history.size(); ++i) {
    const Event& e = history[i];
    if (!(e.time >= state_.time())) throw HistoryError(i, "time goes backwards");
    if (e.destination >= m || e.source >= m) throw HistoryError(i, "node id out of range");
    if (e.kind == EventKind::Link) {
      if (e.destination == e.source) throw HistoryError(i, "self-link");
      if (state_.network().follows(e.destination, e.source))
        throw HistoryError(i, "duplicate link event");
    }
    state_.apply(e);
  }
  if (until < state_.time()) throw ValidationError("replay target precedes the last event");
  state_.advance_to(until);
}

Event Simulator::decode(const ScheduledSample& sample) const {
  const auto m = static_cast<ProcessId>(state_.nodes());
  const ProcessId id = sample.process_id;
  if (id < m * m)
    return retweet(static_cast<NodeId>(id / m), static_cast<NodeId>(id % m), sample.time);
  const ProcessId j = id - m * m;
  return link(static_cast<NodeId>(j / m), static_cast<NodeId>(j % m), sample.time);
}

void Simulator::resample(ProcessId id, const DecayedIntensity& intensity, Time horizon) {
  const std::uint32_t generation = queue_.next_generation(id);
  RandomStream rng = RandomStream::substream(seed_ ^ RandomStream::mix(epoch_), id, generation);
  if (const auto t = sample_next(intensity, state_.time(), horizon, rng))
    queue_.push(ScheduledSample{*t, id, generation});
}

void Simulator::resample_retweet(NodeId u, NodeId s, Time horizon) {
  const Time now = state_.time();
  const Rate rate = retweet_intensity(u, s, now, state_, params_);
  const Rate baseline = u == s ? rate : 0.0;
  resample(retweet_process(u, s), DecayedIntensity(baseline, params_.omega1, now, rate), horizon);
}

void Simulator::resample_link(NodeId u, NodeId s, Time horizon) {
  const ProcessId id = link_process(u, s);
  if (state_.network().follows(u, s)) {
    queue_.cancel(id);
    return;
  }
  const Time now = state_.time();
  const Rate rate = link_intensity(u, s, now, state_, params_);
  resample(id, DecayedIntensity(params_.mu[u], params_.omega2, now, rate), horizon);
}

void Simulator::rebuild_queue(Time horizon) {
  queue_ = EventScheduler{};
  const std::uint64_t stream_seed = seed_ ^ RandomStream::mix(epoch_);
  const Time now = state_.time();
  const auto m = static_cast<NodeId>(state_.nodes());
  std::vector<std::pair<ProcessId, Time>> entries;

  auto draw = [&](ProcessId id, const DecayedIntensity& intensity) {
    RandomStream rng = RandomStream::substream(stream_seed, id, 0);
    if (const auto t = sample_next(intensity, now, horizon, rng)) entries.emplace_back(id, *t);
  };

  // Only dimensions with positive intensity enter the queue; the rest join
  // when first excited.
  for (NodeId u = 0; u < m; ++u)
    if (params_.eta[u] > 0.0)
      draw(retweet_process(u, u), DecayedIntensity(params_.eta[u], params_.omega1, now));

  for (NodeId u = 0; u < m; ++u) {
    const double mu = params_.mu[u];
    if (mu == 0.0 && params_.alpha[u] == 0.0) continue;
    for (NodeId s = 0; s < m; ++s) {
      if (s == u || state_.network().follows(u, s)) continue;
      const Rate rate = link_intensity(u, s, now, state_, params_);
      if (rate > 0.0) draw(link_process(u, s), DecayedIntensity(mu, params_.omega2, now, rate));
    }
  }

  for (const auto& [key, trace] : state_.diffusion().gamma_exposure) {
    const auto [u, s] = state_.pair(key);
    const Rate rate = retweet_intensity(u, s, now, state_, params_);
    if (rate > 0.0) draw(retweet_process(u, s), DecayedIntensity(0.0, params_.omega1, now, rate));
  }

  queue_.schedule_bulk(entries);
}

EventLog Simulator::run(Time horizon, std::size_t max_events) {
  if (horizon < state_.time()) throw ValidationError("horizon precedes the simulation clock");
  ++epoch_;
  rebuild_queue(horizon);

  EventLog log;
  TouchedPairs touched;
  bool capped = false;
  while (const auto next = queue_.peek()) {
    if (next->time >= horizon) break;
    if (max_events != 0 && log.size() >= max_events) {
      capped = true;
      break;
    }
    queue_.extract_min();
    const Event event = decode(*next);
    state_.apply(event, &touched);
    log.push_back(event);
    if (event.kind == EventKind::Link) continue;

    resample_retweet(event.destination, event.source, horizon);
    for (const auto& [v, s] : touched.retweet) resample_retweet(v, s, horizon);
    for (const auto& [v, s] : touched.link) resample_link(v, s, horizon);
  }
  if (!capped) state_.advance_to(horizon);
  return log;
}

EventLog simulate(const ModelParams& params, Time horizon, std::uint64_t seed,
                  const NetworkState& initial, std::size_t max_events) {
  if (!(horizon > 0.0)) throw ValidationError("horizon must be positive");
  Simulator sim(params, seed, initial);
  return sim.run(horizon, max_events);
}

EventLog simulate(const ModelParams& params, Time horizon, std::uint64_t seed,
                  std::size_t max_events) {
  return simulate(params, horizon, seed, NetworkState(params.nodes()), max_events);
}

EventLog resimulate_from(const History& history, Time t, const ModelParams& params,
                         Time horizon, std::uint64_t seed) {
  validate_history(history);
  if (horizon < t) throw ValidationError("horizon precedes the continuation time");
  EventLog prefix;
  for (const Event& e : history.events) {
    if (e.time > t) break;
    prefix.push_back(e);
  }
  Simulator sim(params, seed, history.initial);
  sim.replay(prefix, t);
  return sim.run(horizon);
}

namespace {

// All m^2 retweet and m(m-1) link dimensions of the model, evaluated by
// direct summation over the recorded events.
class CoevolveDimensions final : public MultivariateIntensity {
 public:
  CoevolveDimensions(NetworkState initial, ModelParams params)
      : reference_(std::move(initial), std::move(params)), m_(reference_.nodes()) {}

  std::size_t dimensions() const override { return m_ * m_ + m_ * (m_ - 1); }

  Rate intensity(std::size_t dim, Time tau) const override {
    const Event e = decode(dim, tau);
    return e.kind == EventKind::Retweet
               ? reference_.retweet(e.destination, e.source, tau, ReferenceIntensity::Limit::Right)
               : reference_.link(e.destination, e.source, tau, ReferenceIntensity::Limit::Right);
  }

  // Between events every intensity decays toward its baseline, so the sum
  // just after the last event bounds the rest of the window.
  Rate upper_bound(Time t, Time) const override {
    Rate total = 0.0;
    for (std::size_t d = 0; d < dimensions(); ++d) total += intensity(d, t);
    return total;
  }

  void record(std::size_t dim, Time tau) override { reference_.record(decode(dim, tau)); }

  Event decode(std::size_t dim, Time tau) const {
    if (dim < m_ * m_)
      return retweet(static_cast<NodeId>(dim / m_), static_cast<NodeId>(dim % m_), tau);
    const std::size_t j = dim - m_ * m_;
    const auto u = static_cast<NodeId>(j / (m_ - 1));
    auto s = static_cast<NodeId>(j % (m_ - 1));
    if (s >= u) ++s;
    return link(u, s, tau);
  }

 private:
  ReferenceIntensity reference_;
  std::size_t m_;
};

}  // namespace

EventLog simulate_oracle(const ModelParams& params, Time horizon, std::uint64_t seed,
                         const NetworkState& initial, std::size_t max_events) {
  params.validate();
  if (params.nodes() > kMaxOracleNodes)
    throw ValidationError("reference sampler is limited to " + std::to_string(kMaxOracleNodes) +
                          " nodes");
  if (initial.nodes() != params.nodes())
    throw ValidationError("initial network and parameters disagree on the node count");
  CoevolveDimensions dims(initial, params);
  std::mt19937_64 rng(seed);
  EventLog log;
  for (const DimensionEvent& e : ogata_simulate(dims, horizon, rng, max_events))
    log.push_back(dims.decode(e.dim, e.time));
  return log;
}

EventLog simulate_oracle(const ModelParams& params, Time horizon, std::uint64_t seed,
                         std::size_t max_events) {
  return simulate_oracle(params, horizon, seed, NetworkState(params.nodes()), max_events);
}

}  // namespace coevolve
