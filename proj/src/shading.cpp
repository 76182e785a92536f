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
#include "bidshade/shading.hpp"

#include <cmath>
#include <stdexcept>

namespace bidshade {

std::string_view to_string(ShadeStatus s) {
  switch (s) {
    case ShadeStatus::kOptimized: return "optimized";
    case ShadeStatus::kClampedToFloor: return "clamped_to_floor";
    case ShadeStatus::kFallback: return "fallback";
    case ShadeStatus::kNoBid: return "no_bid";
  }
  return "unknown";
}

namespace {

void validate(const ShadingConfig& c) {
  if (!(c.min_ratio > 0.0) || !(c.max_ratio >= c.min_ratio) ||
      !(c.max_ratio <= 1.0)) {
    throw std::invalid_argument("shading ratios must satisfy 0 < min <= max <= 1");
  }
  if (!(c.fallback_ratio > 0.0) || !(c.fallback_ratio <= 1.0)) {
    throw std::invalid_argument("fallback_ratio must be in (0, 1]");
  }
}

ShadeResult finish(const std::function<double(double)>& win_rate, double value,
                   double bid, ShadeStatus status) {
  ShadeResult r;
  r.bid = bid;
  r.status = status;
  r.win_probability = win_rate(bid);
  r.expected_surplus = (value - bid) * r.win_probability;
  r.shade_ratio = bid / value;
  return r;
}

}  // namespace

ShadeResult shade_bid(const std::function<double(double)>& win_rate,
                      double value, double floor, const ShadingConfig& config) {
  validate(config);
  if (!std::isfinite(value) || value <= 0.0 || floor >= value) {
    return ShadeResult{};  // kNoBid
  }

  const double lo = config.min_ratio * value;
  const double hi = config.max_ratio * value;
  const auto surplus = [&](double b) { return (value - b) * win_rate(b); };
  const auto best = golden_section_maximize(surplus, lo, hi, config.search);

  if (best.x < floor) {
    // Surplus is decreasing past its peak, so the constrained optimum on
    // [floor, hi] sits exactly at the floor.
    return finish(win_rate, value, floor, ShadeStatus::kClampedToFloor);
  }
  return finish(win_rate, value, best.x, ShadeStatus::kOptimized);
}

ShadeResult shade_bid(const LogisticWinRate& curve, double value, double floor,
                      const ShadingConfig& config) {
  validate(config);
  if (!std::isfinite(value) || value <= 0.0 || floor >= value) {
    return ShadeResult{};
  }
  if (curve.slope <= config.min_slope) {
    const double bid = std::max(config.fallback_ratio * value, floor);
    auto r = finish([&](double b) { return curve.predict(b); }, value, bid,
                    ShadeStatus::kFallback);
    return r;
  }
  return shade_bid([&](double b) { return curve.predict(b); }, value, floor,
                   config);
}

ShadeResult BidShader::shade(const std::string& segment, double value,
                             double floor) const {
  bool used_segment = false;
  const LogisticWinRate& curve = model_->resolve(segment, &used_segment);
  ShadeResult r = shade_bid(curve, value, floor, config_);
  r.used_segment_model = used_segment;
  return r;
}

}  // namespace bidshade
