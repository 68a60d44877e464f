#ifndef COEVOLVE_ESTIMATOR_HPP
#define COEVOLVE_ESTIMATOR_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coevolve/network.hpp"
#include "coevolve/params.hpp"

namespace coevolve {

// Responsibilities splitting each link event between the spontaneous (nu1)
// and the retweet-driven (nu2) part of its intensity.
struct AuxiliaryWeights {
  std::vector<double> nu1;
  std::vector<double> nu2;

  // Throws ValidationError unless both are non-negative and sum to one.
  void validate(std::size_t link_events) const;
};

struct LinkObservation {
  std::size_t index;  // position in the event log
  NodeId destination;
  NodeId source;
  Time time;
  double exposure;  // unweighted driving excitation just before the event
};

// Everything the likelihood needs, collected in one replay of the log. The
// kernel integrals are closed form: each retweet contributes
// (1 - exp(-omega (T - t_j))) / omega to the exposure integral, and a pair's
// survival integral is min(T, link time).
struct SufficientStats {
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  std::size_t nodes = 0;
  Time horizon = 0.0;
  double omega1 = 1.0;
  double omega2 = 1.0;
  LinkVariant variant = LinkVariant::SelfDriven;

  std::vector<std::uint64_t> self_tweets;       // per node
  std::vector<std::size_t> first_self_tweet;    // per node, or npos
  std::vector<std::uint64_t> source_retweets;   // per source, destination != source
  std::vector<std::size_t> first_retweet;       // per source, or npos
  std::vector<double> retweet_exposure_integral;  // per source, summed over destinations
  double retweet_log_exposure = 0.0;            // sum of log exposure at retweets
  std::size_t zero_exposure_retweet = npos;     // first retweet nothing could have caused

  std::vector<LinkObservation> links;
  std::vector<double> survival_integral;        // per node, sum_s int (1 - A_us)
  std::vector<double> link_exposure_integral;   // per node, sum_s int (1 - A_us) exposure
};

SufficientStats compute_sufficient_stats(const History& history, Time horizon, double omega1,
                                         double omega2, LinkVariant variant);

struct LikelihoodResult {
  double value;
  std::string diagnostic;  // names the event with zero intensity when value is -inf
};

LikelihoodResult evaluate_log_likelihood(const SufficientStats& stats, const ModelParams& p);

// Joint log-likelihood of all retweet and link dimensions over [0, horizon].
double log_likelihood(const History& history, const ModelParams& p, Time horizon);
double log_likelihood(const SufficientStats& stats, const ModelParams& p);

// Responsibility-proportional weights, the maximizer of the lower bound.
AuxiliaryWeights optimal_weights(const SufficientStats& stats, const ModelParams& p);

// Jensen lower bound of the log-likelihood for given weights; equals the
// log-likelihood at optimal_weights().
double lower_bound(const SufficientStats& stats, const ModelParams& p, const AuxiliaryWeights& nu);
double lower_bound(const History& history, const ModelParams& p, const AuxiliaryWeights& nu,
                   Time horizon);

struct FitOptions {
  double omega1 = 1.0;
  double omega2 = 1.0;
  LinkVariant variant = LinkVariant::SelfDriven;
  double tolerance = 1e-6;  // relative log-likelihood change
  int max_iterations = 500;
  std::uint64_t seed = 0;   // initialization of (mu, alpha)
  double init_scale = 0.01; // initial values drawn from (0, init_scale]
};

// Link parameters of one node; depends only on that node's statistics.
struct NodeFit {
  double mu = 0.0;
  double alpha = 0.0;
  std::vector<double> trace;  // node log-likelihood, initial point first
  bool converged = false;
  std::vector<std::string> warnings;
};

NodeFit fit_node(const SufficientStats& stats, NodeId u, const FitOptions& options);

struct FitResult {
  ModelParams params;
  // Joint log-likelihood at the initial point and after every MM sweep.
  std::vector<double> trace;
  int iterations = 0;
  bool converged = false;
  std::vector<std::string> warnings;
};

// eta and beta in closed form, then MM sweeps over (nu, mu, alpha) per node.
FitResult mm_fit(const SufficientStats& stats, const FitOptions& options);
FitResult mm_fit(const History& history, Time horizon, const FitOptions& options);

// Compensator increments int_{t_i}^{t_{i+1}} lambda per dimension, starting
// from the origin of the window. Unit-rate exponential under the true model.
std::vector<double> time_change_residuals(const History& history, const ModelParams& p);

}  // namespace coevolve

#endif  // COEVOLVE_ESTIMATOR_HPP
