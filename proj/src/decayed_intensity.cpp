#include "coevolve/decayed_intensity.hpp"

#include <cmath>
#include <string>

namespace coevolve {

DecayedIntensity::DecayedIntensity(Rate baseline, double omega, Time start)
    : baseline_(baseline), omega_(omega), last_time_(start), last_value_(baseline) {
  if (!(baseline >= 0.0) || !std::isfinite(baseline))
    throw std::domain_error("baseline intensity must be a finite non-negative rate");
  if (!(omega > 0.0) || !std::isfinite(omega))
    throw std::domain_error("decay rate must be positive and finite");
}

DecayedIntensity::DecayedIntensity(Rate baseline, double omega, Time start, Rate value)
    : DecayedIntensity(baseline, omega, start) {
  if (!(value >= baseline) || !std::isfinite(value))
    throw std::domain_error("intensity value must be finite and at least the baseline");
  last_value_ = value;
}

void DecayedIntensity::check_time(Time t) const {
  if (t < last_time_)
    throw TimeTravelError("intensity evaluated at t=" + std::to_string(t) +
                          " before its last update at t=" + std::to_string(last_time_));
}

Rate DecayedIntensity::value_at(Time t) const {
  check_time(t);
  const Rate excess = last_value_ - baseline_;
  if (excess == 0.0) return baseline_;
  return excess * std::exp(-omega_ * (t - last_time_)) + baseline_;
}

Rate DecayedIntensity::advance(Time t) {
  last_value_ = value_at(t);
  last_time_ = t;
  return last_value_;
}

DecayedIntensity& DecayedIntensity::excite(Rate amount, Time t) {
  if (!(amount >= 0.0) || !std::isfinite(amount))
    throw std::domain_error("excitation amount must be a finite non-negative rate");
  advance(t);
  last_value_ += amount;
  return *this;
}

double DecayedIntensity::integral_to(Time t) const {
  check_time(t);
  const double dt = t - last_time_;
  return baseline_ * dt + (last_value_ - baseline_) * (-std::expm1(-omega_ * dt)) / omega_;
}

}  // namespace coevolve
