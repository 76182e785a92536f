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
#include <vector>

#include "bidshade/market.hpp"
#include "bidshade/policies.hpp"

namespace bidshade {

// What the exchange reports back after each auction.
enum class PriceFeedback {
  kAlways,    // minimum winning price on every auction
  kWinsOnly,  // only when the bidder won
  kNever,     // win/loss flag only
};

struct SimulationConfig {
  std::uint64_t seed = 1;
  std::size_t auctions = 100'000;
  // Auctions excluded from the reported metrics (learning burn-in).
  std::size_t warmup = 0;
  // Cumulative-surplus checkpoints every this many auctions (0 = off).
  std::size_t checkpoint_every = 0;
  PriceFeedback feedback = PriceFeedback::kAlways;
  // Collect the full auction log of the policy at this index.
  std::optional<std::size_t> log_policy_index;
};

struct PolicyMetrics {
  std::string policy;
  std::size_t auctions = 0;  // measured (post-warmup) auctions
  std::size_t wins = 0;
  double win_rate = 0.0;
  double spend = 0.0;
  double total_surplus = 0.0;
  double mean_surplus = 0.0;
  double mean_shade_ratio = 0.0;
  // (auction index, cumulative surplus over all auctions so far).
  std::vector<std::pair<std::size_t, double>> surplus_curve;
};

struct SimulationResult {
  std::vector<PolicyMetrics> policies;
  std::size_t measured_auctions = 0;
  // Hindsight bound over the measured window: win every profitable auction
  // at exactly its minimum winning price.
  double clairvoyant_surplus = 0.0;
  std::vector<AuctionRecord> log;  // filled when log_policy_index is set
};

// Plays every policy against the same pre-drawn auction stream (common
// random numbers), feeding outcomes back to learning policies in order.
SimulationResult run_simulation(const MarketModel& market,
                                std::vector<BidPolicy*> policies,
                                const SimulationConfig& config);

}  // namespace bidshade
