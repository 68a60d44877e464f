#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "coevolve/errors.hpp"
#include "coevolve/prediction.hpp"
#include "coevolve/simulator.hpp"

using namespace coevolve;
using namespace coevolve::prediction;

namespace {

NetworkState ring(std::size_t m) {
  NetworkState n(m);
  for (NodeId u = 0; u < m; ++u) n.add_edge(u, static_cast<NodeId>((u + 1) % m), 0.0);
  return n;
}

Ranking ranking(std::vector<std::uint64_t> ids) {
  std::vector<double> scores(ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i) scores[i] = static_cast<double>(ids.size() - i);
  return rank_scores(std::move(ids), std::move(scores));
}

}  // namespace

TEST(Ranking, DescendingWithIdTieBreak) {
  const auto r = rank_scores({4, 1, 3, 2}, {0.5, 0.9, 0.5, 0.1});
  EXPECT_EQ(r.ids, (std::vector<std::uint64_t>{1, 3, 4, 2}));
  EXPECT_EQ(r.rank_of(4), 3U);
  EXPECT_FALSE(r.rank_of(7).has_value());
  EXPECT_THROW(rank_scores({1}, {}), ValidationError);
}

TEST(Ranking, InvariantUnderMonotoneTransforms) {
  const std::vector<std::uint64_t> ids{0, 1, 2, 3, 4, 5};
  const std::vector<double> scores{0.3, 2.0, 0.3, 1.5, 0.0, 7.0};
  std::vector<double> transformed;
  for (double s : scores) transformed.push_back(std::exp(3.0 * s) + 2.0);
  EXPECT_EQ(rank_scores(ids, scores).ids, rank_scores(ids, transformed).ids);
}

TEST(LinkPrediction, ColdCandidatesFallBackToIdOrder) {
  const auto p = ModelParams::homogeneous(5, 0.5, 0.1, 0.01, 0.3);
  NetworkState n(5);
  n.add_edge(2, 0, 0.0);
  const History h{n, {}};
  const auto r = predict_link_source(h, 2, 1.0, p);
  EXPECT_EQ(r.ids, (std::vector<std::uint64_t>{1, 3, 4}));
}

TEST(LinkPrediction, ExposedSourceRanksFirst) {
  const auto p = ModelParams::homogeneous(5, 0.5, 0.1, 0.01, 0.3);
  const History h{NetworkState(5), {retweet(3, 3, 0.5), retweet(2, 3, 1.0)}};
  const auto r = predict_link_source(h, 2, 2.0, p);
  ASSERT_EQ(r.size(), 4U);
  EXPECT_EQ(r.ids.front(), 3U);
  // Events at or after the prediction time are not used.
  EXPECT_EQ(predict_link_source(h, 2, 1.0, p).ids.front(), 0U);
}

TEST(Trf, SoleHolderRanksFirst) {
  const History h{NetworkState(5), {link(0, 4, 1.0), link(1, 4, 2.0), link(2, 4, 3.0)}};
  const auto shares = trf_shares(h, 10.0);
  EXPECT_DOUBLE_EQ(shares[4], 1.0);
  EXPECT_EQ(trf_baseline(h, 10.0).ids.front(), 4U);
  const auto c = trf_candidates(shares, h.initial, 3);
  EXPECT_EQ(c.ids.front(), 4U);
}

TEST(Trf, EmptyHistoryGivesIdOrder) {
  const History h{NetworkState(4), {}};
  EXPECT_EQ(trf_baseline(h, 5.0).ids, (std::vector<std::uint64_t>{0, 1, 2, 3}));
}

TEST(Trf, SharesSumToOne) {
  const auto p = ModelParams::homogeneous(10, 0.5, 0.07, 0.02, 0.5);
  const History h{ring(10), simulate(p, 40.0, 3, ring(10))};
  const auto shares = trf_shares(h, 40.0);
  EXPECT_NEAR(std::accumulate(shares.begin(), shares.end(), 0.0), 1.0, 1e-12);
}

TEST(Evaluation, HandComputedFixture) {
  const std::vector<Ranking> rs{ranking({3, 1, 2}), ranking({1, 3, 2}), ranking({2, 1, 3}),
                                ranking({3, 2, 1}), ranking({1, 2})};
  const std::vector<std::uint64_t> truths{3, 3, 3, 2, 3};
  const auto ev = evaluate(rs, truths);
  EXPECT_EQ(ev.ranks, (std::vector<std::size_t>{1, 2, 3, 2, 3}));
  EXPECT_DOUBLE_EQ(ev.avg_rank, 11.0 / 5.0);
  EXPECT_DOUBLE_EQ(ev.top1, 0.2);
  EXPECT_EQ(ev.absent, 1U);
  EXPECT_TRUE(ev.flagged[4]);
  EXPECT_FALSE(ev.flagged[0]);
}

TEST(Evaluation, PerfectPredictor) {
  std::vector<Ranking> rs;
  std::vector<std::uint64_t> truths;
  for (std::uint64_t k = 0; k < 6; ++k) {
    rs.push_back(ranking({k, k + 1, k + 2}));
    truths.push_back(k);
  }
  const auto ev = evaluate(rs, truths);
  EXPECT_DOUBLE_EQ(ev.avg_rank, 1.0);
  EXPECT_DOUBLE_EQ(ev.top1, 1.0);
}

TEST(Split, ChronologicalAndComplete) {
  const auto p = ModelParams::homogeneous(8, 0.5, 0.1, 0.02, 0.5);
  const History h{ring(8), simulate(p, 30.0, 4, ring(8))};
  const auto s = chronological_split(h, 0.8);
  EXPECT_EQ(s.train.events.size() + s.test.size(), h.events.size());
  EXPECT_EQ(s.train_events, s.train.events.size());
  ASSERT_FALSE(s.test.empty());
  EXPECT_LE(s.train.events.back().time, s.test.front().time);
  EXPECT_EQ(s.train_horizon, s.test.front().time);
  EXPECT_THROW(chronological_split(h, 1.0), ValidationError);
  EXPECT_THROW(chronological_split(h, 0.0), ValidationError);
}

TEST(StaticHawkes, PoissonRatesAreCountOverWindow) {
  History h{NetworkState(3), {}};
  for (int k = 0; k < 12; ++k) h.events.push_back(retweet(1, 1, 0.5 * (k + 1)));
  const auto b = static_hawkes_baseline(h, 8.0);
  EXPECT_DOUBLE_EQ(b.params.eta[1], 12.0 / 8.0);
  EXPECT_EQ(b.params.eta[0], 0.0);
}

TEST(StaticHawkes, MatchesFullModelWithoutLaterLinks) {
  const auto p = ModelParams::homogeneous(6, 0.5, 0.4, 0.0, 0.0);
  // Both links precede every retweet, so freezing them changes nothing.
  History h{ring(6), {link(0, 3, 0.1), link(2, 5, 0.2)}};
  NetworkState start = ring(6);
  start.add_edge(0, 3, 0.1);
  start.add_edge(2, 5, 0.2);
  for (const Event& e : simulate(p, 20.0, 6, start))
    if (e.time > 0.5) h.events.push_back(e);
  const auto b = static_hawkes_baseline(h, 15.0);
  ModelParams full = b.params;
  full.mu.assign(6, 0.05);
  full.alpha.assign(6, 0.2);
  for (double t : {15.5, 17.0, 19.0}) {
    EXPECT_EQ(b.rank(h, t).ids, predict_activity(h, t, full).ids);
    EXPECT_EQ(b.rank(h, t, 2).ids, predict_activity(h, t, full, 2).ids);
  }
}

TEST(Compare, LinkCasesMatchTestLinks) {
  const auto p = ModelParams::homogeneous(12, 0.6, 0.06, 0.02, 0.6);
  const History h{ring(12), simulate(p, 40.0, 10, ring(12))};
  const auto split = chronological_split(h, 0.7);
  std::size_t test_links = 0;
  for (const Event& e : split.test) test_links += e.kind == EventKind::Link ? 1 : 0;
  const auto c = compare_link_prediction(h, split.train_events, p);
  EXPECT_EQ(c.model.cases, test_links);
  EXPECT_EQ(c.baseline.cases, test_links);
  EXPECT_EQ(c.model.absent, 0U);
  for (std::size_t i = 0; i < c.model_records.size(); ++i)
    EXPECT_EQ(c.model_records[i].candidates, c.baseline_records[i].candidates);
}

TEST(Compare, ActivityModesUseMatchingIds) {
  const auto p = ModelParams::homogeneous(6, 0.6, 0.14, 0.02, 0.6);
  const History h{ring(6), simulate(p, 20.0, 11, ring(6))};
  const auto split = chronological_split(h, 0.7);
  const auto b = static_hawkes_baseline(h, split.train_horizon);
  for (auto mode : {ActivityMode::Nodes, ActivityMode::PerSource, ActivityMode::Pairs}) {
    const auto c = compare_activity_prediction(h, split.train_events, p, b, mode);
    EXPECT_GT(c.model.cases, 0U);
    EXPECT_EQ(c.model.absent, 0U);
    EXPECT_EQ(c.baseline.absent, 0U);
    const std::size_t expected = mode == ActivityMode::Pairs ? 36 : 6;
    EXPECT_EQ(c.model_records.front().candidates, expected);
  }
}
