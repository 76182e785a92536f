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

#include <functional>
#include <string>
#include <string_view>

#include "bidshade/golden_section.hpp"
#include "bidshade/win_rate.hpp"

namespace bidshade {

// In a first-price auction the expected surplus of bidding b for an
// impression worth v is (v - b) * W(b), with W the win-rate curve. The
// shader maximizes that product over the allowed bid range.
struct ShadingConfig {
  // Search interval as fractions of the value. max_ratio <= 1 means never
  // bid above the value.
  double min_ratio = 0.01;
  double max_ratio = 1.0;
  // Used when the model cannot be trusted (slope <= min_slope: the learned
  // curve is flat or decreasing in bid, so the surplus has no interior
  // maximum and shading degenerates).
  double fallback_ratio = 0.65;
  double min_slope = 1e-6;
  GoldenSectionOptions search{.tol_abs = 1e-9, .tol_rel = 1e-9,
                              .max_iterations = 200};
};

enum class ShadeStatus {
  kOptimized,       // interior surplus maximum
  kClampedToFloor,  // optimum was below the floor; bidding the floor
  kFallback,        // degenerate model, fixed fallback ratio used
  kNoBid,           // no profitable bid exists (value <= 0 or floor >= value)
};

std::string_view to_string(ShadeStatus s);

struct ShadeResult {
  double bid = 0.0;
  double win_probability = 0.0;
  double expected_surplus = 0.0;
  double shade_ratio = 0.0;  // bid / value, 0 when not bidding
  ShadeStatus status = ShadeStatus::kNoBid;
  bool used_segment_model = false;
};

// Maximizes (value - b) * win_rate(b) over [min_ratio*value, max_ratio*value],
// then applies the floor. win_rate may be any nonnegative curve that makes
// the surplus unimodal on the interval (true for the logistic family with
// positive slope, and for log-concave price distributions in general).
ShadeResult shade_bid(const std::function<double(double)>& win_rate,
                      double value, double floor, const ShadingConfig& config);

// Same, driven by a fitted logistic curve, with the degenerate-slope
// fallback applied.
ShadeResult shade_bid(const LogisticWinRate& curve, double value, double floor,
                      const ShadingConfig& config);

// Convenience wrapper binding a segmented model and a config.
class BidShader {
 public:
  BidShader(const SegmentedWinRateModel& model, ShadingConfig config)
      : model_(&model), config_(config) {}

  ShadeResult shade(const std::string& segment, double value,
                    double floor = 0.0) const;

  const ShadingConfig& config() const { return config_; }

 private:
  const SegmentedWinRateModel* model_;
  ShadingConfig config_;
};

}  // namespace bidshade
