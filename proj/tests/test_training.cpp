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
#include "bidshade/training.hpp"

#include <cmath>

#include <doctest.h>

#include "bidshade/logistic.hpp"
#include "bidshade/random.hpp"

using namespace bidshade;

TEST_CASE("expansion labels hypothetical bids against the minimum price") {
  AuctionRecord rec{.segment = "s", .value = 3.0, .bid = 2.0, .won = true,
                    .min_win_price = 1.5};
  AugmentationConfig cfg;  // 5 points, multipliers 0.5 .. 2.0
  const auto pts = expand_record(rec, cfg);
  REQUIRE(pts.size() == 5);
  for (const auto& p : pts) {
    CHECK(p.label == (p.bid >= 1.5 ? 1.0 : 0.0));
  }
  // Log-symmetric grid around the logged bid; the middle point is the bid
  // itself with its actual outcome.
  CHECK(pts[2].bid == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(pts[2].label == 1.0);
  CHECK(pts.front().bid == doctest::Approx(1.0));
  CHECK(pts.back().bid == doctest::Approx(4.0));
  // Expected labels for grid {1, sqrt(2), 2, 2 sqrt(2), 4} vs price 1.5.
  CHECK(pts[0].label == 0.0);
  CHECK(pts[1].label == 0.0);
  CHECK(pts[3].label == 1.0);
  CHECK(pts[4].label == 1.0);
  // Grid is increasing.
  for (std::size_t i = 1; i < pts.size(); ++i) CHECK(pts[i].bid > pts[i - 1].bid);
}

TEST_CASE("a bid exactly at the price counts as a win") {
  // Tie at the minimum winning price; a one-point symmetric grid leaves the
  // bid untouched, so the comparison is exact.
  AuctionRecord rec{.segment = "s", .value = 3.0, .bid = 2.0, .won = true,
                    .min_win_price = 2.0};
  AugmentationConfig cfg;
  cfg.points = 1;
  const auto pts = expand_record(rec, cfg);
  REQUIRE(pts.size() == 1);
  CHECK(pts[0].bid == 2.0);
  CHECK(pts[0].label == 1.0);
}

TEST_CASE("records without price feedback pass through unchanged") {
  AuctionRecord rec{.segment = "s", .value = 3.0, .bid = 1.2, .won = false,
                    .min_win_price = std::nullopt};
  const auto pts = expand_record(rec, AugmentationConfig{});
  REQUIRE(pts.size() == 1);
  CHECK(pts[0].bid == 1.2);
  CHECK(pts[0].label == 0.0);
}

TEST_CASE("contradictory feedback is dropped") {
  // Claims a win while bidding under the minimum winning price.
  AuctionRecord bad{.segment = "s", .value = 3.0, .bid = 1.0, .won = true,
                    .min_win_price = 1.5};
  CHECK(expand_record(bad, AugmentationConfig{}).empty());

  // Claims a loss at a bid at/above the price (equality wins).
  AuctionRecord bad2{.segment = "s", .value = 3.0, .bid = 1.5, .won = false,
                     .min_win_price = 1.5};
  CHECK(expand_record(bad2, AugmentationConfig{}).empty());

  AuctionRecord nonpositive{.segment = "s", .value = 3.0, .bid = 0.0,
                            .won = false, .min_win_price = std::nullopt};
  CHECK(expand_record(nonpositive, AugmentationConfig{}).empty());
}

TEST_CASE("augmentation can be disabled") {
  AuctionRecord rec{.segment = "s", .value = 3.0, .bid = 2.0, .won = true,
                    .min_win_price = 1.5};
  AugmentationConfig cfg;
  cfg.enabled = false;
  const auto pts = expand_record(rec, cfg);
  REQUIRE(pts.size() == 1);
  CHECK(pts[0].bid == 2.0);
  CHECK(pts[0].label == 1.0);
}

TEST_CASE("training report counts and loss improvement") {
  // Synthetic log from a known curve; price feedback on every record.
  Rng rng(7);
  const double true_c = 0.5, true_m = 2.0;
  std::vector<AuctionRecord> records;
  for (int i = 0; i < 4'000; ++i) {
    AuctionRecord r;
    r.segment = i % 2 == 0 ? "a" : "b";
    r.value = rng.lognormal(0.3, 0.4);
    // Price drawn from the log-logistic matching the curve.
    const double u = rng.uniform_pos();
    r.min_win_price =
        std::exp((logit(u) - true_c) / true_m);
    r.bid = 0.7 * r.value;
    r.won = r.bid >= *r.min_win_price;
    records.push_back(r);
  }
  // One contradictory record.
  records.push_back({.segment = "a", .value = 1.0, .bid = 0.1, .won = true,
                     .min_win_price = 5.0});

  SegmentedWinRateModel model;
  TrainingConfig cfg;
  cfg.epochs = 2;
  const auto report = train_model(model, records, cfg);

  CHECK(report.records == 4'001);
  CHECK(report.skipped_records == 1);
  CHECK(report.points == 4'000 * 5);
  CHECK(report.segments == 2);
  CHECK(report.final_loss < report.initial_loss);

  // The learned global curve should be close to the generator.
  double max_err = 0.0;
  for (double b = 0.3; b <= 3.0; b += 0.1) {
    const double truth = sigmoid(true_c + true_m * std::log(b));
    max_err = std::max(max_err, std::fabs(model.predict("unseen", b) - truth));
  }
  CHECK(max_err < 0.08);
}

TEST_CASE("training is reproducible for a fixed seed") {
  Rng rng(9);
  std::vector<AuctionRecord> records;
  for (int i = 0; i < 500; ++i) {
    AuctionRecord r;
    r.segment = "s";
    r.value = 1.0;
    r.min_win_price = rng.lognormal(0.0, 0.5);
    r.bid = 0.8;
    r.won = r.bid >= *r.min_win_price;
    records.push_back(r);
  }
  SegmentedWinRateModel m1, m2;
  TrainingConfig cfg;
  cfg.epochs = 3;
  cfg.seed = 42;
  train_model(m1, records, cfg);
  train_model(m2, records, cfg);
  CHECK(m1.global().curve.intercept == m2.global().curve.intercept);
  CHECK(m1.global().curve.slope == m2.global().curve.slope);
}
