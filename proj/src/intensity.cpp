#include "coevolve/intensity.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/MatrixFunctions>

#include "coevolve/errors.hpp"

namespace coevolve {

Rate retweet_intensity(NodeId u, NodeId s, Time t, const CoevolveState& state,
                       const ModelParams& p) {
  if (u == s) return p.eta.at(u);
  return p.beta.at(s) * state.gamma_exposure(u, s, t);
}

Rate link_intensity(NodeId u, NodeId s, Time t, const CoevolveState& state,
                    const ModelParams& p) {
  if (u == s) throw std::domain_error("link intensity is undefined for a self-pair");
  if (state.network().follows(u, s)) return 0.0;
  return p.mu.at(u) + p.alpha.at(u) * state.link_exposure(u, s, t);
}

Rate total_retweet_intensity(NodeId u, Time t, const CoevolveState& state, const ModelParams& p) {
  Rate total = p.eta.at(u);
  const std::size_t m = state.nodes();
  // Only materialized exposures can be non-zero.
  for (NodeId s = 0; s < m; ++s)
    if (s != u) total += p.beta[s] * state.gamma_exposure(u, s, t);
  return total;
}

Eigen::MatrixXd influence_matrix(const NetworkState& network, NodeId s, const ModelParams& p) {
  const auto m = static_cast<Eigen::Index>(network.nodes());
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(m, m);
  for (NodeId u = 0; u < network.nodes(); ++u) {
    if (u == s) continue;
    for (const Edge& e : network.followees(u)) h(u, e.node) = p.beta.at(s);
  }
  return h;
}

Eigen::VectorXd expected_intensity_profile(const NetworkState& network, NodeId s, Time t,
                                           const ModelParams& p) {
  const auto m = static_cast<Eigen::Index>(network.nodes());
  if (s >= network.nodes()) throw ValidationError("source outside the network");
  if (t < 0.0) throw ValidationError("time must be non-negative");
  const Eigen::MatrixXd h = influence_matrix(network, s, p);
  const double radius = h.eigenvalues().cwiseAbs().maxCoeff() / p.omega1;
  if (!(radius < 1.0))
    throw NumericalError("influence matrix is not stationary (spectral radius of H/omega1 = " +
                         std::to_string(radius) + ")");

  Eigen::VectorXd eta_s = Eigen::VectorXd::Zero(m);
  eta_s(s) = p.eta.at(s);
  const Eigen::MatrixXd identity = Eigen::MatrixXd::Identity(m, m);
  if (std::isinf(t)) return (identity - h / p.omega1).partialPivLu().solve(eta_s);

  const Eigen::MatrixXd b = h - p.omega1 * identity;
  const Eigen::MatrixXd eb = (b * t).exp();
  return eb * eta_s + p.omega1 * b.partialPivLu().solve((eb - identity) * eta_s);
}

}  // namespace coevolve
