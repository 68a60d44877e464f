#ifndef COEVOLVE_ANALYSIS_HPP
#define COEVOLVE_ANALYSIS_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coevolve/network.hpp"
#include "coevolve/params.hpp"

namespace coevolve::analysis {

// Least-squares line through log-binned log-log degree densities:
// density ~ degree^(-exponent). Descriptive only.
struct PowerLawFit {
  double exponent = 0.0;
  double r_squared = 0.0;
  std::size_t bins = 0;
};

struct DegreeStats {
  std::map<std::size_t, std::size_t> histogram;  // degree -> number of nodes
  double mean = 0.0;
  double variance = 0.0;
  double dispersion = 0.0;  // variance / mean, 1 for Poisson degrees
  std::optional<PowerLawFit> fit;
};

struct DegreeDistribution {
  DegreeStats in;   // followers
  DegreeStats out;  // followees
};

DegreeDistribution degree_distribution(const NetworkState& network);
std::optional<PowerLawFit> fit_power_law(const std::map<std::size_t, std::size_t>& histogram);

// Exact diameter of the largest connected component of the undirected view.
// Among components of equal size, the one holding the lowest node id.
std::size_t lcc_diameter(const NetworkState& network);

struct DiameterPoint {
  double sparsity;  // edges / (m (m - 1))
  std::size_t diameter;
};

// Replays link events and records the LCC diameter each time the sparsity
// crosses one of the (ascending) checkpoints.
std::vector<DiameterPoint> diameter_trace(const History& history,
                                          const std::vector<double>& checkpoints);

// Average local (Watts-Strogatz) clustering coefficient of the undirected
// view, over all nodes; nodes of degree < 2 contribute zero.
double clustering_coefficient(const NetworkState& network);

struct Cascade {
  NodeId root;
  Time start;
  std::size_t size = 1;
  std::size_t depth = 0;
  std::size_t width = 1;   // largest number of events on one tree level
  std::size_t fanout = 0;  // retweets attached directly to the root
  std::string shape;       // canonical tree encoding for small cascades
};

struct CascadeStats {
  std::vector<Cascade> cascades;
  std::size_t orphans = 0;  // retweets of a source that had not tweeted yet
  std::map<std::size_t, std::size_t> sizes;
  std::map<std::size_t, std::size_t> depths;
  std::map<std::string, std::size_t> census;  // shape -> count, cascades up to kCensusSize
};

inline constexpr std::size_t kCensusSize = 6;

// Every original tweet (u, u, t) starts a cascade. A retweet (u, s, t) joins
// the latest cascade of s, as the child of the most recent event in it
// emitted by one of u's followees, or of the root when there is none.
CascadeStats cascade_stats(const History& history);

// Values on the grid t0, t0 + dt, ...
struct Series {
  Time t0 = 0.0;
  Time dt = 1.0;
  std::vector<double> values;
};

struct LagValue {
  Time lag;
  double value;
};

// h(tau) = (1/n) sum_t (f(t + tau) - mean f)(g(t) - mean g) for lags in
// [-max_lag, max_lag] grid steps. Throws ValidationError on mismatched grids.
std::vector<LagValue> cross_covariance(const Series& f, const Series& g, std::size_t max_lag);

struct NodeIntensitySeries {
  Series retweet;  // sum over sources of gamma_us
  Series link;     // sum over sources of lambda_us
};

// Model intensities of one node on a uniform grid of `points` over [0, horizon].
NodeIntensitySeries node_intensity_series(const History& history, const ModelParams& p, NodeId u,
                                          Time horizon, std::size_t points = 200);

// Pointwise average of series on a common grid.
Series average_series(const std::vector<Series>& series);

}  // namespace coevolve::analysis

#endif  // COEVOLVE_ANALYSIS_HPP
