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
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "bidshade/logistic.hpp"

namespace bidshade {

// How the bid enters the logit. kLogBid gives
//   W(b) = sigmoid(intercept + slope * ln b),
// i.e. the minimum winning price is log-logistic distributed, and W(0+) = 0.
// kRawBid is the plain logistic in the bid itself.
enum class BidTransform { kLogBid, kRawBid };

std::string_view to_string(BidTransform t);
std::optional<BidTransform> bid_transform_from_string(std::string_view s);

inline double apply_bid_transform(BidTransform t, double bid) {
  return t == BidTransform::kLogBid ? std::log(bid) : bid;
}

// Two-parameter logistic win-rate curve for one inventory segment.
struct LogisticWinRate {
  double intercept = 0.0;
  double slope = 1.0;
  BidTransform transform = BidTransform::kLogBid;

  double logit_at(double bid) const {
    return intercept + slope * apply_bid_transform(transform, bid);
  }

  // P(win | bid). Defined for bid > 0 under kLogBid; returns 0 at bid <= 0.
  double predict(double bid) const {
    if (transform == BidTransform::kLogBid && bid <= 0.0) return 0.0;
    return sigmoid(logit_at(bid));
  }

  // dW/db. For kLogBid: W(1-W) * slope / b.
  double derivative(double bid) const {
    const double w = predict(bid);
    const double chain = transform == BidTransform::kLogBid ? slope / bid : slope;
    return w * (1.0 - w) * chain;
  }
};

// One observed or synthesized training point: did a bid at this level win?
struct LabeledBid {
  double bid = 0.0;
  double label = 0.0;  // 1 = won, 0 = lost
};

struct WinRateModelConfig {
  BidTransform transform = BidTransform::kLogBid;
  double initial_intercept = 0.0;
  double initial_slope = 1.0;
  // Per-model SGD step size
  //   lr(t) = learning_rate / (1 + t / decay_horizon)^decay_exponent.
  // The exponent must exceed 1/2 for the averaged iterates to reach the
  // efficient statistical rate (t^-1/2 itself is the boundary case where
  // averaging stops helping).
  double learning_rate = 0.5;
  double decay_horizon = 40000.0;
  double decay_exponent = 0.7;
  double l2 = 0.0;
  // Served curves are Polyak (tail) averages of the SGD iterates: at step t
  // the averaging window is min(t/2, average_horizon), so on stationary
  // data the noise keeps shrinking like 1/sqrt(t) while a finite horizon
  // bounds how far back the average reaches (drift tracking). The default
  // is effectively uncapped; 0 serves the raw iterate.
  double average_horizon = 1e9;
  // A segment's own curve is trusted only after this many observations;
  // colder segments fall back to the global curve.
  std::uint64_t min_segment_observations = 50;
};

// Per-segment logistic win-rate curves with a global fallback, trained
// online by SGD on the logistic loss. Every observation updates both the
// segment curve and the global curve; a segment seen for the first time
// starts from the current global parameters.
class SegmentedWinRateModel {
 public:
  struct State {
    LogisticWinRate curve;    // served curve (Polyak average of the iterates)
    LogisticWinRate iterate;  // raw SGD iterate the updates run on
    std::uint64_t observations = 0;
    std::uint64_t steps = 0;
  };

  SegmentedWinRateModel() : SegmentedWinRateModel(WinRateModelConfig{}) {}
  explicit SegmentedWinRateModel(const WinRateModelConfig& config);

  const WinRateModelConfig& config() const { return config_; }

  // Curve used to price this segment right now (segment curve once warm,
  // global before that). `used_segment` reports which one was picked.
  const LogisticWinRate& resolve(const std::string& segment,
                                 bool* used_segment = nullptr) const;

  double predict(const std::string& segment, double bid) const {
    return resolve(segment).predict(bid);
  }

  void observe(const std::string& segment, double bid, bool won) {
    observe(segment, LabeledBid{bid, won ? 1.0 : 0.0});
  }
  void observe(const std::string& segment, const LabeledBid& point);
  void observe(const std::string& segment, const std::vector<LabeledBid>& points);

  // Mean logistic loss of the currently resolved curves over a point set.
  double mean_loss(const std::string& segment,
                   const std::vector<LabeledBid>& points) const;

  const State& global() const { return global_; }
  const std::unordered_map<std::string, State>& segments() const {
    return segments_;
  }
  std::uint64_t total_observations() const { return global_.observations; }

  // Restores a state snapshot (deserialization path).
  void set_global(const State& s) { global_ = s; }
  void set_segment(const std::string& key, const State& s) { segments_[key] = s; }

 private:
  void sgd_step(State& state, const LabeledBid& point);

  WinRateModelConfig config_;
  State global_;
  std::unordered_map<std::string, State> segments_;
};

}  // namespace bidshade
