#include "coevolve/ogata.hpp"

#include <cmath>

namespace coevolve {

std::vector<DimensionEvent> ogata_simulate(MultivariateIntensity& process, Time horizon,
                                           std::mt19937_64& rng, std::size_t max_events) {
  std::vector<DimensionEvent> events;
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const std::size_t dims = process.dimensions();
  std::vector<Rate> rates(dims);

  Time t = 0.0;
  while (t < horizon) {
    if (max_events != 0 && events.size() >= max_events) break;
    const Rate bound = process.upper_bound(t, horizon);
    if (!std::isfinite(bound) || bound < 0.0)
      throw UnboundedIntensityError("intensity bound is not a finite non-negative rate");
    if (bound == 0.0) break;

    std::exponential_distribution<double> wait(bound);
    const Time candidate = t + wait(rng);
    if (candidate >= horizon) break;

    Rate total = 0.0;
    for (std::size_t d = 0; d < dims; ++d) {
      rates[d] = process.intensity(d, candidate);
      total += rates[d];
    }
    if (total > bound * (1.0 + 1e-12))
      throw UnboundedIntensityError("summed intensity exceeds the declared bound");

    t = candidate;
    if (unit(rng) * bound > total) continue;

    // Attribution: the cumulative share crosses a uniform draw on [0, total).
    const double target = unit(rng) * total;
    double cumulative = 0.0;
    std::size_t chosen = dims;
    for (std::size_t d = 0; d < dims; ++d) {
      if (rates[d] <= 0.0) continue;
      cumulative += rates[d];
      chosen = d;
      if (cumulative > target) break;
    }
    if (chosen == dims) continue;
    events.push_back(DimensionEvent{candidate, chosen});
    process.record(chosen, candidate);
  }
  return events;
}

}  // namespace coevolve
