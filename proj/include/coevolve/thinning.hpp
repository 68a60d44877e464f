#ifndef COEVOLVE_THINNING_HPP
#define COEVOLVE_THINNING_HPP

#include <optional>

#include "coevolve/decayed_intensity.hpp"
#include "coevolve/random.hpp"

namespace coevolve {

// Draws the first event after t of a process whose intensity follows `state`
// with no further excitation, or nullopt if that event falls at or beyond
// `horizon`. Between jumps the intensity is non-increasing, so the value at
// the current candidate bounds everything after it; the bound is refreshed
// to the intensity at each rejected candidate.
std::optional<Time> sample_next(const DecayedIntensity& state, Time t, Time horizon,
                                RandomStream& rng);

}  // namespace coevolve

#endif  // COEVOLVE_THINNING_HPP
