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
#include "bidshade/simulator.hpp"

#include <stdexcept>

namespace bidshade {

SimulationResult run_simulation(const MarketModel& market,
                                std::vector<BidPolicy*> policies,
                                const SimulationConfig& config) {
  if (policies.empty()) {
    throw std::invalid_argument("run_simulation: no policies");
  }
  if (config.warmup >= config.auctions) {
    throw std::invalid_argument("run_simulation: warmup must be < auctions");
  }
  if (config.log_policy_index && *config.log_policy_index >= policies.size()) {
    throw std::invalid_argument("run_simulation: log_policy_index out of range");
  }

  // Common random numbers: one pre-drawn stream shared by every policy.
  Rng rng(config.seed);
  std::vector<SimAuction> stream;
  stream.reserve(config.auctions);
  for (std::size_t i = 0; i < config.auctions; ++i) {
    stream.push_back(market.sample(rng));
  }

  SimulationResult result;
  result.measured_auctions = config.auctions - config.warmup;
  for (std::size_t i = config.warmup; i < config.auctions; ++i) {
    const SimAuction& a = stream[i];
    if (a.value > a.min_win_price) {
      result.clairvoyant_surplus += a.value - a.min_win_price;
    }
  }

  for (std::size_t p = 0; p < policies.size(); ++p) {
    BidPolicy& policy = *policies[p];
    PolicyMetrics m;
    m.policy = std::string(policy.name());
    double cumulative = 0.0;
    double ratio_sum = 0.0;

    for (std::size_t i = 0; i < config.auctions; ++i) {
      const SimAuction& a = stream[i];
      const SegmentMarket& seg = market.segment(a.segment_index);
      const double bid = policy.decide(seg.segment, a.value, a.floor);
      const bool won = bid >= a.min_win_price && bid > 0.0;
      const double surplus = won ? a.value - bid : 0.0;
      cumulative += surplus;

      if (i >= config.warmup) {
        ++m.auctions;
        if (won) {
          ++m.wins;
          m.spend += bid;
          m.total_surplus += surplus;
        }
        ratio_sum += a.value > 0.0 ? bid / a.value : 0.0;
      }

      AuctionRecord outcome;
      outcome.segment = seg.segment;
      outcome.value = a.value;
      outcome.bid = bid;
      outcome.won = won;
      const bool reveal_price =
          config.feedback == PriceFeedback::kAlways ||
          (config.feedback == PriceFeedback::kWinsOnly && won);
      if (reveal_price) outcome.min_win_price = a.min_win_price;
      policy.observe(outcome);
      if (config.log_policy_index && *config.log_policy_index == p) {
        result.log.push_back(std::move(outcome));
      }

      if (config.checkpoint_every != 0 &&
          (i + 1) % config.checkpoint_every == 0) {
        m.surplus_curve.emplace_back(i + 1, cumulative);
      }
    }

    if (m.auctions > 0) {
      m.win_rate = static_cast<double>(m.wins) / m.auctions;
      m.mean_surplus = m.total_surplus / m.auctions;
      m.mean_shade_ratio = ratio_sum / m.auctions;
    }
    result.policies.push_back(std::move(m));
  }
  return result;
}

}  // namespace bidshade
