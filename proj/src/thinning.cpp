#include "coevolve/thinning.hpp"

namespace coevolve {

std::optional<Time> sample_next(const DecayedIntensity& state, Time t, Time horizon,
                                RandomStream& rng) {
  Time s = t;
  Rate bound = state.value_at(s);
  while (s < horizon) {
    if (!(bound > 0.0)) return std::nullopt;
    s += rng.exponential(bound);
    if (s >= horizon) break;
    const Rate current = state.value_at(s);
    if (rng.uniform() * bound < current) return s;
    bound = current;
  }
  return std::nullopt;
}

}  // namespace coevolve
