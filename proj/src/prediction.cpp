#include "coevolve/prediction.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "coevolve/errors.hpp"
#include "coevolve/intensity.hpp"

namespace coevolve::prediction {

namespace {

CoevolveState replay_before(const History& history, Time t, const ModelParams& p) {
  validate_history(history);
  CoevolveState state(history.initial, p.omega1, p.omega2, p.link_variant);
  for (const Event& e : history.events) {
    if (e.time >= t) break;
    state.apply(e);
  }
  return state;
}

RankRecord record_for(std::size_t index, const Event& e, std::uint64_t truth,
                      const Ranking& ranking) {
  const auto rank = ranking.rank_of(truth);
  return RankRecord{index, e.time, truth, rank.value_or(ranking.size() + 1), ranking.size(),
                    !rank.has_value()};
}

Evaluation summarize(const std::vector<RankRecord>& records) {
  Evaluation ev;
  ev.cases = records.size();
  double total = 0.0, hits = 0.0;
  for (const RankRecord& r : records) {
    total += static_cast<double>(r.rank);
    if (r.rank == 1) hits += 1.0;
    if (r.absent) ++ev.absent;
    ev.ranks.push_back(r.rank);
    ev.flagged.push_back(r.absent);
  }
  if (!records.empty()) {
    ev.avg_rank = total / static_cast<double>(records.size());
    ev.top1 = hits / static_cast<double>(records.size());
  }
  return ev;
}

}  // namespace

std::optional<std::size_t> Ranking::rank_of(std::uint64_t id) const {
  const auto it = std::find(ids.begin(), ids.end(), id);
  if (it == ids.end()) return std::nullopt;
  return static_cast<std::size_t>(it - ids.begin()) + 1;
}

Ranking rank_scores(std::vector<std::uint64_t> ids, std::vector<double> scores) {
  if (ids.size() != scores.size()) throw ValidationError("ids and scores differ in length");
  std::vector<std::size_t> order(ids.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (scores[a] != scores[b]) return scores[a] > scores[b];
    return ids[a] < ids[b];
  });
  Ranking r;
  r.ids.reserve(order.size());
  r.scores.reserve(order.size());
  for (std::size_t i : order) {
    r.ids.push_back(ids[i]);
    r.scores.push_back(scores[i]);
  }
  return r;
}

Ranking predict_link_source(const CoevolveState& state, NodeId u, Time t, const ModelParams& p) {
  if (u >= state.nodes()) throw ValidationError("node outside the network");
  std::vector<std::uint64_t> ids;
  std::vector<double> scores;
  for (NodeId s = 0; s < state.nodes(); ++s) {
    if (s == u || state.network().follows(u, s)) continue;
    ids.push_back(s);
    scores.push_back(link_intensity(u, s, t, state, p));
  }
  return rank_scores(std::move(ids), std::move(scores));
}

Ranking predict_link_source(const History& history, NodeId u, Time t, const ModelParams& p) {
  return predict_link_source(replay_before(history, t, p), u, t, p);
}

std::vector<double> trf_shares(const History& history, Time t) {
  std::vector<double> shares(history.nodes(), 0.0);
  double total = 0.0;
  for (const Event& e : history.events) {
    if (e.time >= t) break;
    if (e.kind != EventKind::Link) continue;
    shares.at(e.source) += 1.0;
    total += 1.0;
  }
  if (total > 0.0)
    for (double& s : shares) s /= total;
  return shares;
}

Ranking trf_baseline(const History& history, Time t) {
  auto shares = trf_shares(history, t);
  std::vector<std::uint64_t> ids(shares.size());
  std::iota(ids.begin(), ids.end(), 0);
  return rank_scores(std::move(ids), std::move(shares));
}

Ranking trf_candidates(const std::vector<double>& shares, const NetworkState& network, NodeId u) {
  std::vector<std::uint64_t> ids;
  std::vector<double> scores;
  for (NodeId s = 0; s < network.nodes(); ++s) {
    if (s == u || network.follows(u, s)) continue;
    ids.push_back(s);
    scores.push_back(shares.at(s));
  }
  return rank_scores(std::move(ids), std::move(scores));
}

Ranking predict_activity(const CoevolveState& state, Time t, const ModelParams& p,
                         std::optional<NodeId> target_source) {
  if (target_source && *target_source >= state.nodes())
    throw ValidationError("target source outside the network");
  std::vector<std::uint64_t> ids(state.nodes());
  std::vector<double> scores(state.nodes());
  for (NodeId u = 0; u < state.nodes(); ++u) {
    ids[u] = u;
    scores[u] = target_source ? retweet_intensity(u, *target_source, t, state, p)
                              : total_retweet_intensity(u, t, state, p);
  }
  return rank_scores(std::move(ids), std::move(scores));
}

Ranking predict_activity(const History& history, Time t, const ModelParams& p,
                         std::optional<NodeId> target_source) {
  return predict_activity(replay_before(history, t, p), t, p, target_source);
}

Ranking predict_activity_pairs(const CoevolveState& state, Time t, const ModelParams& p) {
  const std::size_t m = state.nodes();
  std::vector<std::uint64_t> ids;
  std::vector<double> scores;
  ids.reserve(m * m);
  scores.reserve(m * m);
  for (NodeId u = 0; u < m; ++u)
    for (NodeId s = 0; s < m; ++s) {
      ids.push_back(static_cast<std::uint64_t>(u) * m + s);
      scores.push_back(retweet_intensity(u, s, t, state, p));
    }
  return rank_scores(std::move(ids), std::move(scores));
}

Ranking StaticHawkes::rank(const History& history, Time t,
                           std::optional<NodeId> target_source) const {
  CoevolveState state(network, params.omega1, params.omega2, params.link_variant);
  for (const Event& e : history.events) {
    if (e.time >= t) break;
    if (e.kind == EventKind::Retweet) state.apply(e);
  }
  return predict_activity(state, t, params, target_source);
}

StaticHawkes static_hawkes_baseline(const History& history, Time t_snapshot, double omega1) {
  validate_history(history);
  if (!(t_snapshot > 0.0)) throw ValidationError("snapshot time must be positive");
  History frozen{history.initial, {}};
  for (const Event& e : history.events) {
    if (e.time > t_snapshot) break;
    if (e.kind == EventKind::Link) frozen.initial.add_edge(e.destination, e.source, e.time);
  }
  for (const Event& e : history.events) {
    if (e.time >= t_snapshot) break;
    if (e.kind == EventKind::Retweet) frozen.events.push_back(e);
  }
  const auto stats = compute_sufficient_stats(frozen, t_snapshot, omega1, 1.0, LinkVariant::SelfDriven);
  const std::size_t m = history.nodes();
  StaticHawkes model{frozen.initial, ModelParams::homogeneous(m, 0.0, 0.0, 0.0, 0.0, omega1)};
  for (std::size_t u = 0; u < m; ++u) {
    model.params.eta[u] = static_cast<double>(stats.self_tweets[u]) / t_snapshot;
    const double exposure = stats.retweet_exposure_integral[u];
    model.params.beta[u] =
        exposure > 0.0 ? static_cast<double>(stats.source_retweets[u]) / exposure : 0.0;
  }
  return model;
}

Evaluation evaluate(const std::vector<Ranking>& rankings, const std::vector<std::uint64_t>& truths) {
  if (rankings.size() != truths.size()) throw ValidationError("need one truth per ranking");
  std::vector<RankRecord> records;
  for (std::size_t i = 0; i < rankings.size(); ++i) {
    const auto rank = rankings[i].rank_of(truths[i]);
    records.push_back(RankRecord{i, 0.0, truths[i], rank.value_or(rankings[i].size() + 1),
                                 rankings[i].size(), !rank.has_value()});
  }
  return summarize(records);
}

Split chronological_split(const History& history, double train_fraction) {
  if (!(train_fraction > 0.0 && train_fraction < 1.0))
    throw ValidationError("train fraction must lie in (0, 1)");
  validate_history(history);
  const std::size_t n = history.events.size();
  const auto cut = static_cast<std::size_t>(std::floor(train_fraction * static_cast<double>(n)));
  Split split{History{history.initial, {}}, {}, 0.0, cut};
  split.train.events.assign(history.events.begin(), history.events.begin() + static_cast<long>(cut));
  split.test.assign(history.events.begin() + static_cast<long>(cut), history.events.end());
  if (!split.test.empty())
    split.train_horizon = split.test.front().time;
  else if (!split.train.events.empty())
    split.train_horizon = split.train.events.back().time;
  return split;
}

Comparison compare_link_prediction(const History& history, std::size_t train_events,
                                   const ModelParams& fitted) {
  validate_history(history);
  fitted.validate();
  if (fitted.nodes() != history.nodes()) throw ValidationError("parameters do not match the network size");
  CoevolveState state(history.initial, fitted.omega1, fitted.omega2, fitted.link_variant);
  std::vector<double> link_counts(history.nodes(), 0.0);
  double links = 0.0;
  std::vector<RankRecord> model, baseline;
  for (std::size_t i = 0; i < history.events.size(); ++i) {
    const Event& e = history.events[i];
    if (i >= train_events && e.kind == EventKind::Link) {
      const Ranking ours = predict_link_source(state, e.destination, e.time, fitted);
      std::vector<double> shares = link_counts;
      if (links > 0.0)
        for (double& s : shares) s /= links;
      const Ranking trf = trf_candidates(shares, state.network(), e.destination);
      model.push_back(record_for(i, e, e.source, ours));
      baseline.push_back(record_for(i, e, e.source, trf));
    }
    if (e.kind == EventKind::Link) {
      link_counts[e.source] += 1.0;
      links += 1.0;
    }
    state.apply(e);
  }
  Comparison out{summarize(model), summarize(baseline), std::move(model), std::move(baseline)};
  return out;
}

Comparison compare_activity_prediction(const History& history, std::size_t train_events,
                                       const ModelParams& fitted, const StaticHawkes& baseline,
                                       ActivityMode mode) {
  validate_history(history);
  fitted.validate();
  if (fitted.nodes() != history.nodes() || baseline.params.nodes() != history.nodes())
    throw ValidationError("parameters do not match the network size");
  const std::size_t m = history.nodes();
  CoevolveState full(history.initial, fitted.omega1, fitted.omega2, fitted.link_variant);
  CoevolveState frozen(baseline.network, baseline.params.omega1, baseline.params.omega2,
                       baseline.params.link_variant);
  std::vector<RankRecord> model, base;
  auto rank = [&](const CoevolveState& state, const ModelParams& p, const Event& e) {
    switch (mode) {
      case ActivityMode::Nodes:
        return predict_activity(state, e.time, p);
      case ActivityMode::PerSource:
        return predict_activity(state, e.time, p, e.source);
      case ActivityMode::Pairs:
        return predict_activity_pairs(state, e.time, p);
    }
    return Ranking{};
  };
  for (std::size_t i = 0; i < history.events.size(); ++i) {
    const Event& e = history.events[i];
    if (i >= train_events && e.kind == EventKind::Retweet) {
      const std::uint64_t truth = mode == ActivityMode::Pairs
                                      ? static_cast<std::uint64_t>(e.destination) * m + e.source
                                      : e.destination;
      model.push_back(record_for(i, e, truth, rank(full, fitted, e)));
      base.push_back(record_for(i, e, truth, rank(frozen, baseline.params, e)));
    }
    full.apply(e);
    if (e.kind == EventKind::Retweet) frozen.apply(e);
  }
  return Comparison{summarize(model), summarize(base), std::move(model), std::move(base)};
}

}  // namespace coevolve::prediction
