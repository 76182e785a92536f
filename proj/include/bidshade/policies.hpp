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

#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>

#include "bidshade/market.hpp"
#include "bidshade/shading.hpp"
#include "bidshade/training.hpp"
#include "bidshade/win_rate.hpp"

namespace bidshade {

// A bidding strategy under simulation. `decide` must not look at the
// auction outcome; feedback arrives through `observe` after the fact.
class BidPolicy {
 public:
  virtual ~BidPolicy() = default;
  virtual std::string_view name() const = 0;
  virtual double decide(const std::string& segment, double value,
                        double floor) = 0;
  virtual void observe(const AuctionRecord& /*outcome*/) {}
};

// Bids the full value. Zero surplus by construction in a first-price
// auction; the baseline everything else is measured against.
class TruthfulPolicy final : public BidPolicy {
 public:
  std::string_view name() const override { return "truthful"; }
  double decide(const std::string&, double value, double) override {
    return value;
  }
};

// Bids a fixed fraction of the value.
class FixedRatioPolicy final : public BidPolicy {
 public:
  explicit FixedRatioPolicy(double ratio);
  std::string_view name() const override { return name_; }
  double decide(const std::string&, double value, double) override {
    return ratio_ * value;
  }
  double ratio() const { return ratio_; }

 private:
  double ratio_;
  std::string name_;
};

// Shades with a segmented win-rate model, optionally learning online from
// the feedback it observes.
class ModelShadingPolicy final : public BidPolicy {
 public:
  ModelShadingPolicy(WinRateModelConfig model_config, ShadingConfig shading,
                     AugmentationConfig augmentation, bool learn = true);
  // Starts from an existing (pretrained) model state.
  ModelShadingPolicy(SegmentedWinRateModel model, ShadingConfig shading,
                     AugmentationConfig augmentation, bool learn = true);

  std::string_view name() const override { return "model"; }
  double decide(const std::string& segment, double value,
                double floor) override;
  void observe(const AuctionRecord& outcome) override;

  const SegmentedWinRateModel& model() const { return model_; }
  SegmentedWinRateModel& model() { return model_; }

 private:
  SegmentedWinRateModel model_;
  ShadingConfig shading_;
  AugmentationConfig augmentation_;
  bool learn_;
};

// Shades against the market's true win-rate curves. The best any
// distribution-informed bidder can do; the yardstick for capture.
class OracleShadingPolicy final : public BidPolicy {
 public:
  OracleShadingPolicy(const MarketModel& market, ShadingConfig shading);
  std::string_view name() const override { return "oracle"; }
  double decide(const std::string& segment, double value,
                double floor) override;

 private:
  const MarketModel* market_;
  ShadingConfig shading_;
  std::unordered_map<std::string, std::uint32_t> index_by_segment_;
};

}  // namespace bidshade
