#ifndef COEVOLVE_PREDICTION_HPP
#define COEVOLVE_PREDICTION_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "coevolve/estimator.hpp"
#include "coevolve/network.hpp"
#include "coevolve/params.hpp"
#include "coevolve/state.hpp"

namespace coevolve::prediction {

// Candidates in descending score order, ties broken by ascending id. Ids
// are node ids, or u * m + s in pair mode.
struct Ranking {
  std::vector<std::uint64_t> ids;
  std::vector<double> scores;

  std::size_t size() const { return ids.size(); }
  // 1-based position of `id`, if it is a candidate.
  std::optional<std::size_t> rank_of(std::uint64_t id) const;
};

Ranking rank_scores(std::vector<std::uint64_t> ids, std::vector<double> scores);

// Sources s != u with A_us(t) = 0, ranked by lambda_us(t). The state must
// hold every event before t.
Ranking predict_link_source(const CoevolveState& state, NodeId u, Time t, const ModelParams& p);
Ranking predict_link_source(const History& history, NodeId u, Time t, const ModelParams& p);

// Share of the links created before t that point to each node. All zero
// when no link has been created.
std::vector<double> trf_shares(const History& history, Time t);
// Every node ranked by its share.
Ranking trf_baseline(const History& history, Time t);
// The same shares restricted to the link candidates of u in `network`.
Ranking trf_candidates(const std::vector<double>& shares, const NetworkState& network, NodeId u);

enum class ActivityMode {
  Nodes,      // rank nodes by sum_s gamma_us
  PerSource,  // rank nodes by gamma_us for the event's source
  Pairs,      // rank (node, source) pairs by gamma_us
};

// Ranking of nodes by total retweet intensity, or by gamma_us for a fixed
// source when one is given.
Ranking predict_activity(const CoevolveState& state, Time t, const ModelParams& p,
                         std::optional<NodeId> target_source = std::nullopt);
Ranking predict_activity(const History& history, Time t, const ModelParams& p,
                         std::optional<NodeId> target_source = std::nullopt);
Ranking predict_activity_pairs(const CoevolveState& state, Time t, const ModelParams& p);

// Hawkes diffusion model on the network frozen at the snapshot time, with
// eta and beta fitted on the retweets before it.
struct StaticHawkes {
  NetworkState network;
  ModelParams params;

  // Replays the retweets of `history` before t on the frozen network.
  Ranking rank(const History& history, Time t,
               std::optional<NodeId> target_source = std::nullopt) const;
};

StaticHawkes static_hawkes_baseline(const History& history, Time t_snapshot, double omega1 = 1.0);

struct Evaluation {
  double avg_rank = 0.0;
  double top1 = 0.0;
  std::size_t cases = 0;
  std::size_t absent = 0;  // truths missing from their candidate set
  std::vector<std::size_t> ranks;
  std::vector<bool> flagged;
};

// Mean 1-based rank of each truth and the fraction ranked first. A truth
// outside its candidate set counts as rank size + 1 and is flagged.
Evaluation evaluate(const std::vector<Ranking>& rankings, const std::vector<std::uint64_t>& truths);

// The first `train_events` events form the training set. Splitting keeps
// every training timestamp at or before every test timestamp.
struct Split {
  History train;
  EventLog test;
  Time train_horizon;  // time of the first test event, or of the last event
  std::size_t train_events;
};

Split chronological_split(const History& history, double train_fraction);

struct RankRecord {
  std::size_t event_index;
  Time time;
  std::uint64_t truth;
  std::size_t rank;
  std::size_t candidates;
  bool absent;
};

struct Comparison {
  Evaluation model;
  Evaluation baseline;
  std::vector<RankRecord> model_records;
  std::vector<RankRecord> baseline_records;
};

// Every link event after the first `train_events` is a test case: its
// destination is known and its source is predicted by the model and by TRF
// on the same candidate set.
Comparison compare_link_prediction(const History& history, std::size_t train_events,
                                   const ModelParams& fitted);

// Every retweet after the first `train_events` is a test case: the emitting
// node is predicted by the model and by the static-network Hawkes baseline.
Comparison compare_activity_prediction(const History& history, std::size_t train_events,
                                       const ModelParams& fitted, const StaticHawkes& baseline,
                                       ActivityMode mode = ActivityMode::Nodes);

}  // namespace coevolve::prediction

#endif  // COEVOLVE_PREDICTION_HPP
