#ifndef COEVOLVE_KERNEL_HPP
#define COEVOLVE_KERNEL_HPP

#include <cmath>
#include <stdexcept>

namespace coevolve {

using Time = double;
using Rate = double;

// Exponential triggering kernel exp(-omega * dt) for dt >= 0, zero before the
// origin. Unnormalized: an event contributes exactly its weight at lag zero.
class ExponentialKernel {
 public:
  explicit ExponentialKernel(double omega) : omega_(omega) {
    if (!(omega > 0.0) || !std::isfinite(omega))
      throw std::domain_error("kernel decay rate must be positive and finite");
  }

  double omega() const { return omega_; }

  double operator()(Time dt) const { return dt >= 0.0 ? std::exp(-omega_ * dt) : 0.0; }

  // Integral of the kernel over [0, dt].
  double integral(Time dt) const {
    return dt > 0.0 ? -std::expm1(-omega_ * dt) / omega_ : 0.0;
  }

 private:
  double omega_;
};

inline double kernel_eval(const ExponentialKernel& kernel, Time dt) { return kernel(dt); }

}  // namespace coevolve

#endif  // COEVOLVE_KERNEL_HPP
