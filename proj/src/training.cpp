// Copyright 2026 The Bidshade Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "bidshade/training.hpp"

#include <cmath>
#include <unordered_set>
#include <utility>

#include "bidshade/logistic.hpp"
#include "bidshade/random.hpp"

namespace bidshade {

std::vector<LabeledBid> expand_record(const AuctionRecord& record,
                                      const AugmentationConfig& config) {
  if (!(record.bid > 0.0) || !std::isfinite(record.bid)) return {};

  const bool has_price =
      record.min_win_price && *record.min_win_price > 0.0 &&
      std::isfinite(*record.min_win_price);
  if (!has_price) {
    return {LabeledBid{record.bid, record.won ? 1.0 : 0.0}};
  }

  const double price = *record.min_win_price;
  // Win-at-equality: a bid of exactly the minimum winning price wins.
  if (record.won != (record.bid >= price)) return {};  // contradictory feedback

  if (!config.enabled || config.points < 1) {
    return {LabeledBid{record.bid, record.won ? 1.0 : 0.0}};
  }

  // Counterfactual grid anchored at the logged bid, each point labeled by
  // the exact price. Anchoring at the bid keeps the synthetic bids
  // independent of the price draw, so the conditional win frequency at any
  // bid level equals the true win curve and the logistic fit stays
  // consistent. (A price-anchored grid would correlate bid and price and
  // bias the fit.)
  std::vector<LabeledBid> points;
  points.reserve(static_cast<std::size_t>(config.points));
  const double log_lo = std::log(config.low_mult);
  const double log_hi = std::log(config.high_mult);
  for (int i = 0; i < config.points; ++i) {
    const double frac = config.points == 1
                            ? 0.5
                            : static_cast<double>(i) / (config.points - 1);
    const double bid = std::exp(log_lo + frac * (log_hi - log_lo)) * record.bid;
    points.push_back(LabeledBid{bid, bid >= price ? 1.0 : 0.0});
  }
  return points;
}

namespace {

struct ExpandedPoint {
  std::uint32_t record = 0;
  LabeledBid point;
};

double mean_loss_over(const SegmentedWinRateModel& model,
                      std::span<const AuctionRecord> records,
                      const std::vector<ExpandedPoint>& points) {
  if (points.empty()) return 0.0;
  double total = 0.0;
  for (const auto& ep : points) {
    const auto& curve = model.resolve(records[ep.record].segment);
    total += logistic_loss(curve.logit_at(ep.point.bid), ep.point.label);
  }
  return total / static_cast<double>(points.size());
}

}  // namespace

TrainReport train_model(SegmentedWinRateModel& model,
                        std::span<const AuctionRecord> records,
                        const TrainingConfig& config) {
  TrainReport report;
  report.records = records.size();

  std::vector<ExpandedPoint> points;
  std::unordered_set<std::string> segments;
  for (std::uint32_t i = 0; i < records.size(); ++i) {
    auto expanded = expand_record(records[i], config.augmentation);
    if (expanded.empty()) {
      ++report.skipped_records;
      continue;
    }
    segments.insert(records[i].segment);
    for (const auto& p : expanded) points.push_back({i, p});
  }
  report.points = points.size();
  report.segments = segments.size();
  report.initial_loss = mean_loss_over(model, records, points);

  Rng rng(config.seed);
  std::vector<std::size_t> order(points.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  for (int epoch = 0; epoch < config.epochs; ++epoch) {
    if (config.shuffle) {
      // Fisher-Yates with the portable rng (std::shuffle is
      // implementation-defined and would break reproducibility).
      for (std::size_t i = order.size(); i > 1; --i) {
        std::swap(order[i - 1], order[rng.index(i)]);
      }
    }
    for (const std::size_t idx : order) {
      model.observe(records[points[idx].record].segment, points[idx].point);
    }
  }
  report.final_loss = mean_loss_over(model, records, points);
  return report;
}

}  // namespace bidshade
