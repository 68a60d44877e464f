#include "coevolve/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <unordered_map>

#include "coevolve/errors.hpp"
#include "coevolve/intensity.hpp"
#include "coevolve/state.hpp"

namespace coevolve::analysis {

namespace {

DegreeStats summarize(const std::vector<std::size_t>& degrees) {
  DegreeStats st;
  for (std::size_t d : degrees) ++st.histogram[d];
  const double n = static_cast<double>(degrees.size());
  if (n == 0.0) return st;
  st.mean = std::accumulate(degrees.begin(), degrees.end(), 0.0) / n;
  double ss = 0.0;
  for (std::size_t d : degrees) ss += (static_cast<double>(d) - st.mean) * (static_cast<double>(d) - st.mean);
  st.variance = n > 1.0 ? ss / (n - 1.0) : 0.0;
  st.dispersion = st.mean > 0.0 ? st.variance / st.mean : 0.0;
  st.fit = fit_power_law(st.histogram);
  return st;
}

std::vector<std::vector<NodeId>> undirected(const NetworkState& network) {
  std::vector<std::vector<NodeId>> adj(network.nodes());
  for (NodeId u = 0; u < network.nodes(); ++u) {
    for (const Edge& e : network.followees(u)) {
      adj[u].push_back(e.node);
      adj[e.node].push_back(u);
    }
  }
  for (auto& list : adj) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  return adj;
}

// Distances from `start`; unreachable nodes stay at -1.
std::vector<long> bfs(const std::vector<std::vector<NodeId>>& adj, NodeId start) {
  std::vector<long> dist(adj.size(), -1);
  std::deque<NodeId> frontier{start};
  dist[start] = 0;
  while (!frontier.empty()) {
    const NodeId v = frontier.front();
    frontier.pop_front();
    for (NodeId w : adj[v]) {
      if (dist[w] >= 0) continue;
      dist[w] = dist[v] + 1;
      frontier.push_back(w);
    }
  }
  return dist;
}

struct TreeNode {
  std::size_t parent;  // index within the cascade, self for the root
  std::size_t depth;
  std::vector<std::size_t> children;
};

std::string encode(const std::vector<TreeNode>& tree, std::size_t v) {
  std::vector<std::string> parts;
  for (std::size_t c : tree[v].children) parts.push_back(encode(tree, c));
  std::sort(parts.begin(), parts.end());
  std::string out = "(";
  for (const auto& p : parts) out += p;
  return out + ")";
}

}  // namespace

std::optional<PowerLawFit> fit_power_law(const std::map<std::size_t, std::size_t>& histogram) {
  // Logarithmic bins [2^k, 2^(k+1)), densities normalized by bin width.
  std::map<int, double> binned;
  for (const auto& [degree, count] : histogram) {
    if (degree == 0 || count == 0) continue;
    binned[static_cast<int>(std::floor(std::log2(static_cast<double>(degree))))] +=
        static_cast<double>(count);
  }
  if (binned.size() < 2) return std::nullopt;
  std::vector<double> xs, ys;
  for (const auto& [k, count] : binned) {
    const double lo = std::ldexp(1.0, k);
    const double width = lo;  // [2^k, 2^(k+1)) holds 2^k integers
    xs.push_back(std::log(lo * std::sqrt(2.0)));
    ys.push_back(std::log(count / width));
  }
  const double n = static_cast<double>(xs.size());
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
    syy += (ys[i] - my) * (ys[i] - my);
  }
  PowerLawFit fit;
  fit.bins = xs.size();
  fit.exponent = -sxy / sxx;
  fit.r_squared = syy > 0.0 ? (sxy * sxy) / (sxx * syy) : 1.0;
  return fit;
}

DegreeDistribution degree_distribution(const NetworkState& network) {
  if (network.nodes() == 0) throw ValidationError("degree distribution of an empty network");
  std::vector<std::size_t> in, out;
  for (NodeId u = 0; u < network.nodes(); ++u) {
    in.push_back(network.followers(u).size());
    out.push_back(network.followees(u).size());
  }
  return DegreeDistribution{summarize(in), summarize(out)};
}

std::size_t lcc_diameter(const NetworkState& network) {
  const auto adj = undirected(network);
  const std::size_t m = adj.size();
  std::vector<long> component(m, -1);
  std::vector<std::vector<NodeId>> members;
  for (NodeId v = 0; v < m; ++v) {
    if (component[v] >= 0) continue;
    const auto dist = bfs(adj, v);
    members.emplace_back();
    for (NodeId w = 0; w < m; ++w)
      if (dist[w] >= 0) {
        component[w] = static_cast<long>(members.size() - 1);
        members.back().push_back(w);
      }
  }
  if (members.empty()) return 0;
  const auto largest = std::max_element(
      members.begin(), members.end(),
      [](const auto& a, const auto& b) { return a.size() < b.size(); });
  long diameter = 0;
  for (NodeId v : *largest) {
    const auto dist = bfs(adj, v);
    for (NodeId w : *largest) diameter = std::max(diameter, dist[w]);
  }
  return static_cast<std::size_t>(diameter);
}

std::vector<DiameterPoint> diameter_trace(const History& history,
                                          const std::vector<double>& checkpoints) {
  if (!std::is_sorted(checkpoints.begin(), checkpoints.end()))
    throw ValidationError("sparsity checkpoints must be ascending");
  const std::size_t m = history.nodes();
  const double pairs = static_cast<double>(m) * static_cast<double>(m > 0 ? m - 1 : 0);
  NetworkState network = history.initial;
  std::vector<DiameterPoint> trace;
  std::size_t next = 0;
  auto record = [&] {
    const double sparsity = pairs > 0.0 ? static_cast<double>(network.edge_count()) / pairs : 0.0;
    while (next < checkpoints.size() && sparsity >= checkpoints[next]) {
      trace.push_back(DiameterPoint{sparsity, lcc_diameter(network)});
      // Several checkpoints crossed by one edge share a single measurement.
      while (next < checkpoints.size() && sparsity >= checkpoints[next]) ++next;
    }
  };
  record();
  for (const Event& e : history.events) {
    if (e.kind != EventKind::Link) continue;
    network.add_edge(e.destination, e.source, e.time);
    record();
    if (next == checkpoints.size()) break;
  }
  return trace;
}

double clustering_coefficient(const NetworkState& network) {
  if (network.nodes() == 0) throw ValidationError("clustering coefficient of an empty network");
  const auto adj = undirected(network);
  double total = 0.0;
  for (NodeId v = 0; v < adj.size(); ++v) {
    const auto& nbrs = adj[v];
    const std::size_t k = nbrs.size();
    if (k < 2) continue;
    std::size_t closed = 0;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j)
        if (std::binary_search(adj[nbrs[i]].begin(), adj[nbrs[i]].end(), nbrs[j])) ++closed;
    total += 2.0 * static_cast<double>(closed) / (static_cast<double>(k) * static_cast<double>(k - 1));
  }
  return total / static_cast<double>(adj.size());
}

CascadeStats cascade_stats(const History& history) {
  validate_history(history);
  const std::size_t m = history.nodes();
  NetworkState network = history.initial;

  struct Location {
    std::size_t cascade;
    std::size_t node;
    Time time;
  };
  std::vector<std::vector<TreeNode>> trees;
  std::vector<Cascade> cascades;
  std::vector<long> latest_root(m, -1);
  std::unordered_map<std::uint64_t, Location> last_event;  // (emitter, source) -> location
  CascadeStats out;

  for (const Event& e : history.events) {
    if (e.kind == EventKind::Link) {
      network.add_edge(e.destination, e.source, e.time);
      continue;
    }
    const NodeId u = e.destination;
    const NodeId s = e.source;
    const std::uint64_t key = static_cast<std::uint64_t>(u) * m + s;
    if (u == s) {
      cascades.push_back(Cascade{u, e.time, 1, 0, 1, 0, {}});
      trees.push_back({TreeNode{0, 0, {}}});
      latest_root[u] = static_cast<long>(cascades.size() - 1);
      last_event[key] = Location{cascades.size() - 1, 0, e.time};
      continue;
    }
    if (latest_root[s] < 0) {
      ++out.orphans;
      continue;
    }
    // Older cascades of s are closed; only events of the latest one count.
    const auto c = static_cast<std::size_t>(latest_root[s]);
    std::optional<Location> parent;
    for (const Edge& followee : network.followees(u)) {
      const auto it = last_event.find(static_cast<std::uint64_t>(followee.node) * m + s);
      if (it == last_event.end() || it->second.cascade != c) continue;
      if (!parent || it->second.time > parent->time) parent = it->second;
    }
    if (!parent) parent = Location{c, 0, cascades[c].start};
    auto& tree = trees[parent->cascade];
    const std::size_t depth = tree[parent->node].depth + 1;
    tree.push_back(TreeNode{parent->node, depth, {}});
    tree[parent->node].children.push_back(tree.size() - 1);
    last_event[key] = Location{parent->cascade, tree.size() - 1, e.time};
  }

  for (std::size_t c = 0; c < cascades.size(); ++c) {
    Cascade& cascade = cascades[c];
    const auto& tree = trees[c];
    cascade.size = tree.size();
    cascade.fanout = tree[0].children.size();
    std::map<std::size_t, std::size_t> levels;
    for (const TreeNode& n : tree) {
      cascade.depth = std::max(cascade.depth, n.depth);
      ++levels[n.depth];
    }
    for (const auto& [level, count] : levels) cascade.width = std::max(cascade.width, count);
    if (cascade.size <= kCensusSize) {
      cascade.shape = encode(tree, 0);
      ++out.census[cascade.shape];
    }
    ++out.sizes[cascade.size];
    ++out.depths[cascade.depth];
  }
  out.cascades = std::move(cascades);
  return out;
}

std::vector<LagValue> cross_covariance(const Series& f, const Series& g, std::size_t max_lag) {
  if (f.values.size() != g.values.size() || f.t0 != g.t0 || f.dt != g.dt)
    throw ValidationError("cross-covariance needs series on the same grid");
  const std::size_t n = f.values.size();
  if (n == 0) throw ValidationError("cross-covariance of empty series");
  const double mf = std::accumulate(f.values.begin(), f.values.end(), 0.0) / static_cast<double>(n);
  const double mg = std::accumulate(g.values.begin(), g.values.end(), 0.0) / static_cast<double>(n);
  const long lag_limit = static_cast<long>(std::min(max_lag, n - 1));
  std::vector<LagValue> out;
  for (long lag = -lag_limit; lag <= lag_limit; ++lag) {
    double sum = 0.0;
    for (long t = 0; t < static_cast<long>(n); ++t) {
      const long shifted = t + lag;
      if (shifted < 0 || shifted >= static_cast<long>(n)) continue;
      sum += (f.values[shifted] - mf) * (g.values[t] - mg);
    }
    out.push_back(LagValue{static_cast<double>(lag) * f.dt, sum / static_cast<double>(n)});
  }
  return out;
}

NodeIntensitySeries node_intensity_series(const History& history, const ModelParams& p, NodeId u,
                                          Time horizon, std::size_t points) {
  validate_history(history);
  p.validate();
  if (u >= history.nodes()) throw ValidationError("node outside the network");
  if (points < 2 || !(horizon > 0.0)) throw ValidationError("need at least two grid points over a positive window");
  const Time dt = horizon / static_cast<double>(points - 1);
  NodeIntensitySeries out{{0.0, dt, {}}, {0.0, dt, {}}};
  CoevolveState state(history.initial, p.omega1, p.omega2, p.link_variant);
  std::size_t next = 0;
  const auto m = static_cast<NodeId>(history.nodes());
  for (std::size_t k = 0; k < points; ++k) {
    const Time t = dt * static_cast<double>(k);
    while (next < history.events.size() && history.events[next].time < t) state.apply(history.events[next++]);
    out.retweet.values.push_back(total_retweet_intensity(u, t, state, p));
    double links = 0.0;
    for (NodeId s = 0; s < m; ++s)
      if (s != u) links += link_intensity(u, s, t, state, p);
    out.link.values.push_back(links);
  }
  return out;
}

Series average_series(const std::vector<Series>& series) {
  if (series.empty()) throw ValidationError("nothing to average");
  Series out = series.front();
  for (std::size_t i = 1; i < series.size(); ++i) {
    const Series& s = series[i];
    if (s.values.size() != out.values.size() || s.t0 != out.t0 || s.dt != out.dt)
      throw ValidationError("series to average are on different grids");
    for (std::size_t k = 0; k < s.values.size(); ++k) out.values[k] += s.values[k];
  }
  for (double& v : out.values) v /= static_cast<double>(series.size());
  return out;
}

}  // namespace coevolve::analysis
