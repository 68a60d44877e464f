#include "coevolve/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_map>

#include "coevolve/errors.hpp"
#include "coevolve/random.hpp"
#include "coevolve/state.hpp"

namespace coevolve {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// x log y with the 0 log 0 = 0 convention.
double xlogy(double x, double y) { return x == 0.0 ? 0.0 : x * std::log(y); }

void check_compatible(const SufficientStats& stats, const ModelParams& p) {
  p.validate();
  if (p.nodes() != stats.nodes)
    throw ValidationError("parameters describe " + std::to_string(p.nodes()) +
                          " nodes, statistics " + std::to_string(stats.nodes));
  if (p.omega1 != stats.omega1 || p.omega2 != stats.omega2 || p.link_variant != stats.variant)
    throw ValidationError("parameters and statistics disagree on kernel decays or link variant");
}

// Everything except the link log-intensity terms.
LikelihoodResult retweet_and_integral_terms(const SufficientStats& stats, const ModelParams& p) {
  LikelihoodResult out{0.0, {}};
  auto fail = [&out](const std::string& why) {
    if (out.diagnostic.empty()) out.diagnostic = why;
    out.value = kNegInf;
  };
  if (stats.zero_exposure_retweet != SufficientStats::npos)
    fail("retweet event " + std::to_string(stats.zero_exposure_retweet) +
         " has zero intensity: no followee had retweeted its source");
  for (std::size_t u = 0; u < stats.nodes; ++u) {
    if (stats.self_tweets[u] > 0 && p.eta[u] == 0.0)
      fail("tweet event " + std::to_string(stats.first_self_tweet[u]) + " has zero intensity (eta_" +
           std::to_string(u) + " = 0)");
    if (stats.source_retweets[u] > 0 && p.beta[u] == 0.0)
      fail("retweet event " + std::to_string(stats.first_retweet[u]) +
           " has zero intensity (beta_" + std::to_string(u) + " = 0)");
  }
  if (out.value == kNegInf) return out;

  double value = stats.retweet_log_exposure;
  for (std::size_t u = 0; u < stats.nodes; ++u) {
    value += xlogy(static_cast<double>(stats.self_tweets[u]), p.eta[u]) - p.eta[u] * stats.horizon;
    value += xlogy(static_cast<double>(stats.source_retweets[u]), p.beta[u]) -
             p.beta[u] * stats.retweet_exposure_integral[u];
    value -= p.mu[u] * stats.survival_integral[u] + p.alpha[u] * stats.link_exposure_integral[u];
  }
  out.value = value;
  return out;
}

double node_link_likelihood(const std::vector<double>& exposures, double survival,
                            double exposure_integral, double mu, double alpha) {
  double value = -mu * survival - alpha * exposure_integral;
  for (double x : exposures) {
    const double rate = mu + alpha * x;
    if (!(rate > 0.0)) return kNegInf;
    value += std::log(rate);
  }
  return value;
}

std::vector<double> node_exposures(const SufficientStats& stats, NodeId u) {
  std::vector<double> xs;
  for (const LinkObservation& obs : stats.links)
    if (obs.destination == u) xs.push_back(obs.exposure);
  return xs;
}

}  // namespace

void AuxiliaryWeights::validate(std::size_t link_events) const {
  if (nu1.size() != link_events || nu2.size() != link_events)
    throw ValidationError("auxiliary weights must have one entry per link event");
  for (std::size_t i = 0; i < link_events; ++i) {
    if (!(nu1[i] >= 0.0) || !(nu2[i] >= 0.0) || std::abs(nu1[i] + nu2[i] - 1.0) > 1e-12)
      throw ValidationError("auxiliary weights of link event " + std::to_string(i) +
                            " violate nu1, nu2 >= 0 and nu1 + nu2 = 1");
  }
}

SufficientStats compute_sufficient_stats(const History& history, Time horizon, double omega1,
                                         double omega2, LinkVariant variant) {
  validate_history(history);
  if (!history.events.empty() && horizon < history.events.back().time)
    throw ValidationError("observation window ends before the last event");
  if (!(horizon >= 0.0) || !std::isfinite(horizon))
    throw ValidationError("observation window must be finite and non-negative");

  const std::size_t m = history.nodes();
  SufficientStats st;
  st.nodes = m;
  st.horizon = horizon;
  st.omega1 = omega1;
  st.omega2 = omega2;
  st.variant = variant;
  st.self_tweets.assign(m, 0);
  st.first_self_tweet.assign(m, SufficientStats::npos);
  st.source_retweets.assign(m, 0);
  st.first_retweet.assign(m, SufficientStats::npos);
  st.retweet_exposure_integral.assign(m, 0.0);
  st.survival_integral.assign(m, 0.0);
  st.link_exposure_integral.assign(m, 0.0);

  CoevolveState state(history.initial, omega1, omega2, variant);
  std::vector<std::size_t> links_made(m, 0);
  for (std::size_t i = 0; i < history.events.size(); ++i) {
    const Event& e = history.events[i];
    const NodeId u = e.destination;
    const NodeId s = e.source;
    if (e.kind == EventKind::Retweet) {
      if (u == s) {
        if (st.self_tweets[u]++ == 0) st.first_self_tweet[u] = i;
      } else {
        if (st.source_retweets[s]++ == 0) st.first_retweet[s] = i;
        const double x = state.gamma_exposure(u, s, e.time);
        if (x > 0.0)
          st.retweet_log_exposure += std::log(x);
        else if (st.zero_exposure_retweet == SufficientStats::npos)
          st.zero_exposure_retweet = i;
      }
    } else {
      st.links.push_back(LinkObservation{i, u, s, e.time, state.link_exposure(u, s, e.time)});
      st.survival_integral[u] += e.time;
      st.link_exposure_integral[u] += state.link_exposure_integral(u, s, e.time);
      ++links_made[u];
    }
    state.apply(e);
  }

  for (const auto& [key, trace] : state.diffusion().gamma_exposure)
    st.retweet_exposure_integral[state.pair(key).second] += trace.integral_from_origin(horizon);
  // Linked pairs were removed from the link exposures when their edge formed.
  for (const auto& [key, trace] : state.diffusion().link_exposure)
    st.link_exposure_integral[state.pair(key).first] += trace.integral_from_origin(horizon);
  for (NodeId u = 0; u < m; ++u) {
    const std::size_t open = m - 1 - history.initial.followees(u).size() - links_made[u];
    st.survival_integral[u] += static_cast<double>(open) * horizon;
  }
  return st;
}

LikelihoodResult evaluate_log_likelihood(const SufficientStats& stats, const ModelParams& p) {
  check_compatible(stats, p);
  LikelihoodResult out = retweet_and_integral_terms(stats, p);
  if (out.value == kNegInf) return out;
  for (const LinkObservation& obs : stats.links) {
    const double rate = p.mu[obs.destination] + p.alpha[obs.destination] * obs.exposure;
    if (!(rate > 0.0)) {
      out.value = kNegInf;
      out.diagnostic = "link event " + std::to_string(obs.index) + " has zero intensity";
      return out;
    }
    out.value += std::log(rate);
  }
  return out;
}

double log_likelihood(const SufficientStats& stats, const ModelParams& p) {
  return evaluate_log_likelihood(stats, p).value;
}

double log_likelihood(const History& history, const ModelParams& p, Time horizon) {
  const SufficientStats stats =
      compute_sufficient_stats(history, horizon, p.omega1, p.omega2, p.link_variant);
  return log_likelihood(stats, p);
}

AuxiliaryWeights optimal_weights(const SufficientStats& stats, const ModelParams& p) {
  check_compatible(stats, p);
  AuxiliaryWeights nu;
  for (const LinkObservation& obs : stats.links) {
    const double spontaneous = p.mu[obs.destination];
    const double driven = p.alpha[obs.destination] * obs.exposure;
    const double total = spontaneous + driven;
    const double share = total > 0.0 ? spontaneous / total : 1.0;
    nu.nu1.push_back(share);
    nu.nu2.push_back(1.0 - share);
  }
  return nu;
}

double lower_bound(const SufficientStats& stats, const ModelParams& p, const AuxiliaryWeights& nu) {
  check_compatible(stats, p);
  nu.validate(stats.links.size());
  double value = retweet_and_integral_terms(stats, p).value;
  if (value == kNegInf) return value;
  for (std::size_t i = 0; i < stats.links.size(); ++i) {
    const LinkObservation& obs = stats.links[i];
    const double a = nu.nu1[i];
    const double b = nu.nu2[i];
    if ((a > 0.0 && p.mu[obs.destination] == 0.0) ||
        (b > 0.0 && p.alpha[obs.destination] * obs.exposure == 0.0))
      return kNegInf;
    value += xlogy(a, p.mu[obs.destination]) + xlogy(b, p.alpha[obs.destination] * obs.exposure);
    value -= xlogy(a, a) + xlogy(b, b);
  }
  return value;
}

double lower_bound(const History& history, const ModelParams& p, const AuxiliaryWeights& nu,
                   Time horizon) {
  const SufficientStats stats =
      compute_sufficient_stats(history, horizon, p.omega1, p.omega2, p.link_variant);
  return lower_bound(stats, p, nu);
}

NodeFit fit_node(const SufficientStats& stats, NodeId u, const FitOptions& options) {
  if (u >= stats.nodes) throw ValidationError("node outside the statistics");
  const std::vector<double> xs = node_exposures(stats, u);
  const double survival = stats.survival_integral[u];
  const double integral = stats.link_exposure_integral[u];

  NodeFit fit;
  const std::string node = std::to_string(u);
  if (xs.empty()) {
    // Without link events the likelihood only decreases in mu and alpha.
    fit.trace.push_back(0.0);
    fit.converged = true;
    return fit;
  }

  RandomStream rng = RandomStream::substream(options.seed, u, 0);
  fit.mu = options.init_scale * rng.uniform();
  fit.alpha = options.init_scale * rng.uniform();
  if (!(survival > 0.0)) {
    fit.mu = 0.0;
    fit.warnings.push_back("mu_" + node + " pinned to 0: no survival exposure");
  }
  if (!(integral > 0.0)) {
    fit.alpha = 0.0;
    fit.warnings.push_back("alpha_" + node + " pinned to 0: no retweet exposure");
  }

  double previous = node_link_likelihood(xs, survival, integral, fit.mu, fit.alpha);
  fit.trace.push_back(previous);
  for (int k = 0; k < options.max_iterations; ++k) {
    double spontaneous = 0.0;
    double driven = 0.0;
    for (double x : xs) {
      const double total = fit.mu + fit.alpha * x;
      if (!(total > 0.0)) {
        spontaneous += 1.0;
        continue;
      }
      spontaneous += fit.mu / total;
      driven += fit.alpha * x / total;
    }
    fit.mu = survival > 0.0 ? spontaneous / survival : 0.0;
    fit.alpha = integral > 0.0 ? driven / integral : 0.0;
    const double current = node_link_likelihood(xs, survival, integral, fit.mu, fit.alpha);
    fit.trace.push_back(current);
    const double scale = std::max(std::abs(previous), std::numeric_limits<double>::min());
    if (std::isfinite(current) && std::abs(current - previous) <= options.tolerance * scale) {
      fit.converged = true;
      break;
    }
    previous = current;
  }
  return fit;
}

FitResult mm_fit(const SufficientStats& stats, const FitOptions& options) {
  if (stats.omega1 != options.omega1 || stats.omega2 != options.omega2 ||
      stats.variant != options.variant)
    throw ValidationError("fit options disagree with the statistics' kernel decays or variant");
  if (options.max_iterations < 0 || !(options.tolerance >= 0.0) || !(options.init_scale > 0.0))
    throw ValidationError("invalid fit options");
  const std::size_t m = stats.nodes;
  std::size_t total_events = stats.links.size();
  for (std::size_t u = 0; u < m; ++u) total_events += stats.self_tweets[u] + stats.source_retweets[u];
  if (total_events == 0) throw ValidationError("cannot fit parameters without events");
  if (!(stats.horizon > 0.0)) throw ValidationError("observation window must be positive");

  FitResult result;
  ModelParams& p = result.params;
  p.omega1 = options.omega1;
  p.omega2 = options.omega2;
  p.link_variant = options.variant;
  p.eta.resize(m);
  p.beta.resize(m);
  p.mu.resize(m);
  p.alpha.resize(m);
  for (std::size_t u = 0; u < m; ++u) {
    p.eta[u] = static_cast<double>(stats.self_tweets[u]) / stats.horizon;
    const double exposure = stats.retweet_exposure_integral[u];
    if (exposure > 0.0) {
      p.beta[u] = static_cast<double>(stats.source_retweets[u]) / exposure;
    } else {
      p.beta[u] = 0.0;
      if (stats.source_retweets[u] > 0)
        result.warnings.push_back("beta_" + std::to_string(u) +
                                  " pinned to 0: source never exposed");
    }
  }

  std::vector<NodeFit> fits;
  fits.reserve(m);
  std::size_t longest = 0;
  result.converged = true;
  for (NodeId u = 0; u < m; ++u) {
    fits.push_back(fit_node(stats, u, options));
    NodeFit& f = fits.back();
    p.mu[u] = f.mu;
    p.alpha[u] = f.alpha;
    longest = std::max(longest, f.trace.size());
    result.converged = result.converged && f.converged;
    for (auto& w : f.warnings) result.warnings.push_back(std::move(w));
  }
  result.iterations = static_cast<int>(longest) - 1;

  // Joint trace: nodes that converged early hold their final value.
  const double constant = retweet_and_integral_terms(stats, [&] {
    ModelParams q = p;
    std::fill(q.mu.begin(), q.mu.end(), 0.0);
    std::fill(q.alpha.begin(), q.alpha.end(), 0.0);
    return q;
  }()).value;
  for (std::size_t k = 0; k < longest; ++k) {
    double value = constant;
    for (const NodeFit& f : fits) value += f.trace[std::min(k, f.trace.size() - 1)];
    result.trace.push_back(value);
  }
  return result;
}

FitResult mm_fit(const History& history, Time horizon, const FitOptions& options) {
  const SufficientStats stats = compute_sufficient_stats(history, horizon, options.omega1,
                                                         options.omega2, options.variant);
  return mm_fit(stats, options);
}

std::vector<double> time_change_residuals(const History& history, const ModelParams& p) {
  validate_history(history);
  p.validate();
  const std::size_t m = history.nodes();
  if (p.nodes() != m) throw ValidationError("parameters and history disagree on the node count");

  CoevolveState state(history.initial, p.omega1, p.omega2, p.link_variant);
  std::unordered_map<std::uint64_t, double> last;
  std::vector<double> residuals;
  residuals.reserve(history.events.size());
  const auto mm = static_cast<std::uint64_t>(m) * m;
  for (const Event& e : history.events) {
    const NodeId u = e.destination;
    const NodeId s = e.source;
    double compensator = 0.0;
    std::uint64_t dim = static_cast<std::uint64_t>(u) * m + s;
    if (e.kind == EventKind::Retweet) {
      compensator = u == s ? p.eta[u] * e.time
                           : p.beta[s] * state.gamma_exposure_integral(u, s, e.time);
    } else {
      dim += mm;
      compensator = p.mu[u] * e.time + p.alpha[u] * state.link_exposure_integral(u, s, e.time);
    }
    double& previous = last[dim];
    residuals.push_back(compensator - previous);
    previous = compensator;
    state.apply(e);
  }
  return residuals;
}

}  // namespace coevolve
