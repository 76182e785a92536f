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
#include <filesystem>
#include <string>
#include <vector>

#include "bidshade/random.hpp"

namespace bidshade {

// Synthetic ground truth for one inventory segment: the distribution of
// the highest competing bid and of the impression value.
enum class PriceDistribution { kLogLogistic, kLognormal };

struct SegmentMarket {
  std::string segment;
  PriceDistribution price_dist = PriceDistribution::kLogLogistic;
  // Log-logistic: scale alpha and shape k, F(x) = 1/(1 + (x/alpha)^-k).
  // Lognormal: scale = median (exp mu), shape = 1/sigma.
  double price_scale = 1.0;
  double price_shape = 2.5;
  double value_log_mean = 0.0;
  double value_log_stddev = 0.5;
  double floor = 0.0;
  double traffic_weight = 1.0;

  double sample_price(Rng& rng) const;
  double sample_value(Rng& rng) const;
  // P(highest competing bid <= b), floor not included.
  double true_win_rate(double bid) const;
};

// One simulated auction, shared by every policy under comparison.
struct SimAuction {
  std::uint32_t segment_index = 0;
  double value = 0.0;
  double floor = 0.0;
  double highest_other_bid = 0.0;
  // Lowest bid that wins: max(highest competing bid, floor).
  double min_win_price = 0.0;
};

class MarketModel {
 public:
  explicit MarketModel(std::vector<SegmentMarket> segments);

  const std::vector<SegmentMarket>& segments() const { return segments_; }
  const SegmentMarket& segment(std::uint32_t i) const { return segments_[i]; }

  SimAuction sample(Rng& rng) const;

  // P(win | bid) in this segment, including the floor cutoff.
  double true_win_rate(std::uint32_t segment_index, double bid) const;

  // Three-segment market used by the CLI when no market file is given.
  static MarketModel builtin_default();

  static MarketModel from_json_file(const std::filesystem::path& path);
  void to_json_file(const std::filesystem::path& path) const;

 private:
  std::vector<SegmentMarket> segments_;
  std::vector<double> cumulative_weight_;
};

}  // namespace bidshade
