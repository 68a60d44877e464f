#ifndef COEVOLVE_DECAYED_INTENSITY_HPP
#define COEVOLVE_DECAYED_INTENSITY_HPP

#include <stdexcept>

#include "coevolve/kernel.hpp"

namespace coevolve {

class TimeTravelError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Running value of an exponentially decaying, self-exciting intensity
//
//   lambda(t) = baseline + sum_i jump_i * exp(-omega * (t - t_i))
//
// kept in O(1) state: the value only needs to be rolled forward from the
// last evaluation time, never re-summed over the history.
class DecayedIntensity {
 public:
  DecayedIntensity(Rate baseline, double omega, Time start = 0.0);
  // State whose value at `start` is already `value` (>= baseline).
  DecayedIntensity(Rate baseline, double omega, Time start, Rate value);

  Rate baseline() const { return baseline_; }
  double omega() const { return omega_; }
  Time last_time() const { return last_time_; }
  Rate last_value() const { return last_value_; }

  // Value at t >= last_time() without mutating the state.
  Rate value_at(Time t) const;

  // Rolls the state forward to t and returns the intensity there.
  Rate advance(Time t);

  // Advances to t and adds a jump of the given size.
  DecayedIntensity& excite(Rate amount, Time t);

  // Integral of the intensity over [last_time(), t] assuming no further jumps.
  double integral_to(Time t) const;

 private:
  void check_time(Time t) const;

  Rate baseline_;
  double omega_;
  Time last_time_;
  Rate last_value_;
};

}  // namespace coevolve

#endif  // COEVOLVE_DECAYED_INTENSITY_HPP
