#ifndef COEVOLVE_OGATA_HPP
#define COEVOLVE_OGATA_HPP

#include <cstddef>
#include <random>
#include <stdexcept>
#include <vector>

#include "coevolve/kernel.hpp"

namespace coevolve {

class UnboundedIntensityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A multivariate point process as seen by the reference thinning sampler.
class MultivariateIntensity {
 public:
  virtual ~MultivariateIntensity() = default;

  virtual std::size_t dimensions() const = 0;

  // Conditional intensity of one dimension at time tau, given the events
  // recorded so far.
  virtual Rate intensity(std::size_t dim, Time tau) const = 0;

  // Upper bound of the summed intensity over [t, horizon] given the events
  // recorded so far.
  virtual Rate upper_bound(Time t, Time horizon) const = 0;

  // Appends an accepted event to the history.
  virtual void record(std::size_t dim, Time tau) = 0;
};

struct DimensionEvent {
  Time time;
  std::size_t dim;
};

// Ogata's thinning over the summed intensity: propose from a homogeneous
// process at the bound, accept with probability sum(t') / bound, then
// attribute to a dimension in proportion to its share of the sum.
// `max_events` caps the number of accepted events (0 = unlimited).
std::vector<DimensionEvent> ogata_simulate(MultivariateIntensity& process, Time horizon,
                                           std::mt19937_64& rng, std::size_t max_events = 0);

}  // namespace coevolve

#endif  // COEVOLVE_OGATA_HPP
