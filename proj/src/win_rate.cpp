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
#include "bidshade/win_rate.hpp"

#include <cmath>

namespace bidshade {

std::string_view to_string(BidTransform t) {
  return t == BidTransform::kLogBid ? "log_bid" : "raw_bid";
}

std::optional<BidTransform> bid_transform_from_string(std::string_view s) {
  if (s == "log_bid") return BidTransform::kLogBid;
  if (s == "raw_bid") return BidTransform::kRawBid;
  return std::nullopt;
}

SegmentedWinRateModel::SegmentedWinRateModel(const WinRateModelConfig& config)
    : config_(config) {
  global_.curve.intercept = config_.initial_intercept;
  global_.curve.slope = config_.initial_slope;
  global_.curve.transform = config_.transform;
  global_.iterate = global_.curve;
}

const LogisticWinRate& SegmentedWinRateModel::resolve(
    const std::string& segment, bool* used_segment) const {
  const auto it = segments_.find(segment);
  const bool warm =
      it != segments_.end() &&
      it->second.observations >= config_.min_segment_observations;
  if (used_segment != nullptr) *used_segment = warm;
  return warm ? it->second.curve : global_.curve;
}

namespace {

bool valid_point(const LabeledBid& point, BidTransform transform) {
  if (!std::isfinite(point.bid) || !std::isfinite(point.label)) return false;
  return transform != BidTransform::kLogBid || point.bid > 0.0;
}

}  // namespace

void SegmentedWinRateModel::sgd_step(State& state, const LabeledBid& point) {
  const double z = apply_bid_transform(config_.transform, point.bid);
  const double p = sigmoid(state.iterate.intercept + state.iterate.slope * z);
  const double g = p - point.label;
  const double lr =
      config_.learning_rate /
      std::pow(1.0 + static_cast<double>(state.steps) / config_.decay_horizon,
               config_.decay_exponent);
  state.iterate.intercept -= lr * (g + config_.l2 * state.iterate.intercept);
  state.iterate.slope -= lr * (g * z + config_.l2 * state.iterate.slope);
  ++state.steps;

  if (config_.average_horizon > 0.0) {
    // Anytime tail averaging: a growing window of roughly the most recent
    // half of the iterates, capped by the configured horizon.
    const double window =
        std::min(std::max(1.0, 0.5 * static_cast<double>(state.steps)),
                 config_.average_horizon);
    state.curve.intercept +=
        (state.iterate.intercept - state.curve.intercept) / window;
    state.curve.slope += (state.iterate.slope - state.curve.slope) / window;
  } else {
    state.curve.intercept = state.iterate.intercept;
    state.curve.slope = state.iterate.slope;
  }
}

void SegmentedWinRateModel::observe(const std::string& segment,
                                    const LabeledBid& point) {
  if (!valid_point(point, config_.transform)) return;
  auto [it, inserted] = segments_.try_emplace(segment);
  if (inserted) {
    // Cold start from the current global estimate.
    it->second.curve = global_.curve;
    it->second.iterate = global_.curve;
  }
  sgd_step(it->second, point);
  ++it->second.observations;
  sgd_step(global_, point);
  ++global_.observations;
}

void SegmentedWinRateModel::observe(const std::string& segment,
                                    const std::vector<LabeledBid>& points) {
  for (const auto& p : points) observe(segment, p);
}

double SegmentedWinRateModel::mean_loss(
    const std::string& segment, const std::vector<LabeledBid>& points) const {
  const LogisticWinRate& curve = resolve(segment);
  double total = 0.0;
  std::size_t n = 0;
  for (const auto& p : points) {
    if (!valid_point(p, config_.transform)) continue;
    total += logistic_loss(curve.logit_at(p.bid), p.label);
    ++n;
  }
  return n == 0 ? 0.0 : total / static_cast<double>(n);
}

}  // namespace bidshade
