#ifndef COEVOLVE_INTENSITY_HPP
#define COEVOLVE_INTENSITY_HPP

#include <Eigen/Dense>

#include "coevolve/params.hpp"
#include "coevolve/state.hpp"

namespace coevolve {

// gamma_us(t): eta_u for u == s, otherwise beta_s times the decayed count of
// source-s retweets by u's followees (counted only if the edge already
// existed when the retweet fired).
Rate retweet_intensity(NodeId u, NodeId s, Time t, const CoevolveState& state,
                       const ModelParams& p);

// lambda_us(t): zero once u follows s, otherwise mu_u plus alpha_u times the
// decayed driving retweets of the configured link variant. Throws
// std::domain_error for u == s.
Rate link_intensity(NodeId u, NodeId s, Time t, const CoevolveState& state,
                    const ModelParams& p);

// Sum over sources of gamma_us(t): the overall retweet rate of node u.
Rate total_retweet_intensity(NodeId u, Time t, const CoevolveState& state, const ModelParams& p);

// Influence matrix for source s on a frozen network: H_uv = beta_s * A_uv for
// u != s. Row s is zero because gamma_ss is never excited.
Eigen::MatrixXd influence_matrix(const NetworkState& network, NodeId s, const ModelParams& p);

// Expected retweet intensity vector due to source s on a frozen network,
//   (e^{Bt} + omega1 B^{-1} (e^{Bt} - I)) eta_s e_s,   B = H - omega1 I,
// or the stationary limit (I - H / omega1)^{-1} eta_s e_s when t is +inf.
// Throws NumericalError if the spectral radius of H / omega1 is >= 1.
Eigen::VectorXd expected_intensity_profile(const NetworkState& network, NodeId s, Time t,
                                           const ModelParams& p);

}  // namespace coevolve

#endif  // COEVOLVE_INTENSITY_HPP
