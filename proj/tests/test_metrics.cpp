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
#include "bidshade/metrics.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include <doctest.h>

using namespace bidshade;

TEST_CASE("perfectly calibrated samples score zero ECE") {
  std::vector<PredictionOutcome> samples;
  for (int bin = 0; bin < 10; ++bin) {
    const double p = 0.05 + 0.1 * bin;
    const int wins = static_cast<int>(p * 1000);  // exact for these p
    for (int i = 0; i < 1000; ++i) {
      samples.push_back({p, i < wins});
    }
  }
  const auto report = calibrate(samples);
  CHECK(report.samples == 10'000);
  CHECK(report.ece == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(report.max_gap == doctest::Approx(0.0).epsilon(1e-12));
  for (const auto& bin : report.bins) {
    CHECK(bin.count == 1000);
  }
}

TEST_CASE("ECE is the count-weighted mean gap") {
  std::vector<PredictionOutcome> samples;
  // Bin [0.2,0.3): 300 samples predicted 0.25, none won -> gap 0.25.
  for (int i = 0; i < 300; ++i) samples.push_back({0.25, false});
  // Bin [0.6,0.7): 100 samples predicted 0.65, all won -> gap 0.35.
  for (int i = 0; i < 100; ++i) samples.push_back({0.65, true});
  const auto report = calibrate(samples, 10, 50);
  CHECK(report.samples == 400);
  CHECK(report.ece ==
        doctest::Approx((0.25 * 300 + 0.35 * 100) / 400).epsilon(1e-12));
  CHECK(report.max_gap == doctest::Approx(0.35).epsilon(1e-12));
}

TEST_CASE("max_gap ignores bins below the count threshold") {
  std::vector<PredictionOutcome> samples;
  for (int i = 0; i < 200; ++i) samples.push_back({0.45, i < 90});  // gap 0
  samples.push_back({0.95, false});  // lone sample, gap 0.95
  const auto report = calibrate(samples, 10, 50);
  CHECK(report.max_gap < 0.01);
  CHECK(report.ece > 0.0);  // the lone sample still contributes to ECE
}

TEST_CASE("out-of-range predictions are skipped") {
  std::vector<PredictionOutcome> samples = {
      {0.5, true},
      {-0.1, true},
      {1.5, false},
      {std::numeric_limits<double>::quiet_NaN(), true},
      {0.5, false},
  };
  const auto report = calibrate(samples);
  CHECK(report.samples == 2);
  CHECK(report.bins[5].count == 2);
}

TEST_CASE("boundary probabilities land in the end bins") {
  std::vector<PredictionOutcome> samples = {{0.0, false}, {1.0, true}};
  const auto report = calibrate(samples, 10, 1);
  CHECK(report.bins.front().count == 1);
  CHECK(report.bins.back().count == 1);
}

TEST_CASE("empty input yields an empty report") {
  const auto report = calibrate({}, 10, 50);
  CHECK(report.samples == 0);
  CHECK(report.ece == 0.0);
  CHECK(report.max_gap == 0.0);
}

TEST_CASE("replay of a hand-built log") {
  // Global curve (c=0, m=1) over log bid: W(b) = b / (1 + b), and the
  // surplus-optimal bid for value v is sqrt(1 + v) - 1.
  SegmentedWinRateModel model{WinRateModelConfig{}};
  ShadingConfig shading;

  std::vector<AuctionRecord> records = {
      {"s", 4.0, 2.0, true, 1.0},
      {"s", 1.0, 0.8, false, 1.5},
      {"s", 2.0, 1.0, true, std::nullopt},  // no price: calibration only
      {"s", 3.0, 0.0, false, 2.0},          // no bid: replay only
  };
  const auto report = evaluate_replay(model, records, shading);

  CHECK(report.records == 4);
  CHECK(report.replayable == 3);

  // Model re-bids: v=4 -> sqrt(5)-1 ~ 1.236 beats price 1 (win, surplus
  // 2.764); v=1 -> sqrt(2)-1 loses to 1.5; v=3 -> 1.0 loses to 2.0.
  CHECK(report.model_wins == 1);
  CHECK(report.model_win_rate == doctest::Approx(1.0 / 3).epsilon(1e-12));
  const double b1 = std::sqrt(5.0) - 1.0;
  CHECK(report.model_spend == doctest::Approx(b1).epsilon(1e-6));
  CHECK(report.model_surplus == doctest::Approx(4.0 - b1).epsilon(1e-6));
  const double mean_ratio =
      (b1 / 4.0 + (std::sqrt(2.0) - 1.0) / 1.0 + 1.0 / 3.0) / 3.0;
  CHECK(report.model_mean_shade_ratio ==
        doctest::Approx(mean_ratio).epsilon(1e-6));

  // Logged surplus counts only the won record with a price: 4 - 2 = 2.
  CHECK(report.logged_surplus == doctest::Approx(2.0).epsilon(1e-12));
  // Clairvoyant: (4-1) + 0 + (3-2) = 4.
  CHECK(report.clairvoyant_surplus == doctest::Approx(4.0).epsilon(1e-12));

  // Calibration sees the three positive logged bids at W(2), W(0.8), W(1).
  CHECK(report.calibration.samples == 3);
}

TEST_CASE("replay of an empty log") {
  SegmentedWinRateModel model{WinRateModelConfig{}};
  const auto report = evaluate_replay(model, {}, ShadingConfig{});
  CHECK(report.records == 0);
  CHECK(report.replayable == 0);
  CHECK(report.model_win_rate == 0.0);
  CHECK(report.clairvoyant_surplus == 0.0);
}
