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

#include <cstddef>
#include <span>
#include <vector>

#include "bidshade/auction_log.hpp"
#include "bidshade/shading.hpp"
#include "bidshade/win_rate.hpp"

namespace bidshade {

// Reliability of predicted win probabilities, bucketed into equal-width
// probability bins.
struct CalibrationBin {
  std::size_t count = 0;
  double mean_predicted = 0.0;
  double empirical_win_rate = 0.0;
};

struct CalibrationReport {
  std::vector<CalibrationBin> bins;
  // Expected calibration error: count-weighted mean |predicted - empirical|.
  double ece = 0.0;
  // Largest per-bin gap among bins holding at least min_bin_count points.
  double max_gap = 0.0;
  std::size_t samples = 0;
};

struct PredictionOutcome {
  double predicted = 0.0;  // model win probability
  bool won = false;
};

CalibrationReport calibrate(std::span<const PredictionOutcome> samples,
                            std::size_t num_bins = 10,
                            std::size_t min_bin_count = 50);

// Counterfactual replay of a shading model over a logged auction stream.
// Records carrying the minimum winning price are re-bid with the model and
// scored against that price; the log's own realized surplus and the
// hindsight optimum are reported alongside.
struct ReplayReport {
  std::size_t records = 0;
  std::size_t replayable = 0;  // records with a usable min_win_price
  std::size_t model_wins = 0;
  double model_win_rate = 0.0;
  double model_spend = 0.0;
  double model_surplus = 0.0;
  double model_mean_shade_ratio = 0.0;
  double logged_surplus = 0.0;       // what the logged bids actually earned
  double clairvoyant_surplus = 0.0;  // win every profitable auction at price
  CalibrationReport calibration;     // model predictions at the logged bids
};

ReplayReport evaluate_replay(const SegmentedWinRateModel& model,
                             std::span<const AuctionRecord> records,
                             const ShadingConfig& shading);

}  // namespace bidshade
