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
#include <span>
#include <vector>

#include "bidshade/auction_log.hpp"
#include "bidshade/win_rate.hpp"

namespace bidshade {

// When the minimum winning price of an auction is known, win/loss labels
// are available at every hypothetical bid level, not just the bid that
// was actually placed. Expansion emits `points` labeled bids on a
// log-spaced grid of multiples of the logged bid (label = bid >= price).
// The grid is anchored at the bid, never at the price: bids chosen before
// the price is revealed are independent of it, which keeps the label
// frequency at each level equal to the true win curve. Deterministic so
// that a training run is reproducible.
struct AugmentationConfig {
  bool enabled = true;
  int points = 5;
  double low_mult = 0.5;
  double high_mult = 2.0;
};

struct TrainingConfig {
  int epochs = 1;
  bool shuffle = true;
  std::uint64_t seed = 1;
  AugmentationConfig augmentation;
};

struct TrainReport {
  std::size_t records = 0;
  std::size_t skipped_records = 0;  // inconsistent or unusable
  std::size_t points = 0;           // labeled bids after expansion
  std::size_t segments = 0;
  double initial_loss = 0.0;  // mean logistic loss before / after training,
  double final_loss = 0.0;    // over the expanded point set
};

// Labeled bids for one record. Empty when the record is unusable:
// nonpositive bid, or a win/loss flag contradicting min_win_price.
std::vector<LabeledBid> expand_record(const AuctionRecord& record,
                                      const AugmentationConfig& config);

// Offline training: expands records, then runs epochs of per-point SGD
// through the model (shuffled with the config seed).
TrainReport train_model(SegmentedWinRateModel& model,
                        std::span<const AuctionRecord> records,
                        const TrainingConfig& config);

}  // namespace bidshade
