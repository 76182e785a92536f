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
#include "bidshade/policies.hpp"

#include <cstdio>
#include <stdexcept>

namespace bidshade {

FixedRatioPolicy::FixedRatioPolicy(double ratio) : ratio_(ratio) {
  if (!(ratio > 0.0) || !(ratio <= 1.0)) {
    throw std::invalid_argument("fixed shading ratio must be in (0, 1]");
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "fixed_%.2f", ratio);
  name_ = buf;
}

ModelShadingPolicy::ModelShadingPolicy(WinRateModelConfig model_config,
                                       ShadingConfig shading,
                                       AugmentationConfig augmentation,
                                       bool learn)
    : model_(model_config), shading_(shading), augmentation_(augmentation),
      learn_(learn) {}

ModelShadingPolicy::ModelShadingPolicy(SegmentedWinRateModel model,
                                       ShadingConfig shading,
                                       AugmentationConfig augmentation,
                                       bool learn)
    : model_(std::move(model)), shading_(shading), augmentation_(augmentation),
      learn_(learn) {}

double ModelShadingPolicy::decide(const std::string& segment, double value,
                                  double floor) {
  bool used_segment = false;
  const LogisticWinRate& curve = model_.resolve(segment, &used_segment);
  const ShadeResult r = shade_bid(curve, value, floor, shading_);
  return r.status == ShadeStatus::kNoBid ? 0.0 : r.bid;
}

void ModelShadingPolicy::observe(const AuctionRecord& outcome) {
  if (!learn_) return;
  model_.observe(outcome.segment, expand_record(outcome, augmentation_));
}

OracleShadingPolicy::OracleShadingPolicy(const MarketModel& market,
                                         ShadingConfig shading)
    : market_(&market), shading_(shading) {
  for (std::uint32_t i = 0; i < market.segments().size(); ++i) {
    index_by_segment_[market.segment(i).segment] = i;
  }
}

double OracleShadingPolicy::decide(const std::string& segment, double value,
                                   double floor) {
  const auto it = index_by_segment_.find(segment);
  if (it == index_by_segment_.end()) {
    throw std::invalid_argument("oracle policy: unknown segment " + segment);
  }
  const SegmentMarket& seg = market_->segment(it->second);
  const ShadeResult r = shade_bid(
      [&](double b) { return seg.true_win_rate(b); }, value, floor, shading_);
  return r.status == ShadeStatus::kNoBid ? 0.0 : r.bid;
}

}  // namespace bidshade
