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

#include <algorithm>
#include <cmath>

namespace bidshade {

CalibrationReport calibrate(std::span<const PredictionOutcome> samples,
                            std::size_t num_bins, std::size_t min_bin_count) {
  CalibrationReport report;
  if (num_bins == 0) return report;
  report.bins.resize(num_bins);
  std::vector<double> pred_sum(num_bins, 0.0);
  std::vector<double> win_sum(num_bins, 0.0);

  for (const auto& s : samples) {
    if (!(s.predicted >= 0.0 && s.predicted <= 1.0)) continue;
    auto b = static_cast<std::size_t>(s.predicted * num_bins);
    b = std::min(b, num_bins - 1);
    ++report.bins[b].count;
    pred_sum[b] += s.predicted;
    win_sum[b] += s.won ? 1.0 : 0.0;
    ++report.samples;
  }
  if (report.samples == 0) return report;

  for (std::size_t b = 0; b < num_bins; ++b) {
    auto& bin = report.bins[b];
    if (bin.count == 0) continue;
    bin.mean_predicted = pred_sum[b] / bin.count;
    bin.empirical_win_rate = win_sum[b] / bin.count;
    const double gap = std::fabs(bin.mean_predicted - bin.empirical_win_rate);
    report.ece += gap * bin.count / static_cast<double>(report.samples);
    if (bin.count >= min_bin_count) report.max_gap = std::max(report.max_gap, gap);
  }
  return report;
}

ReplayReport evaluate_replay(const SegmentedWinRateModel& model,
                             std::span<const AuctionRecord> records,
                             const ShadingConfig& shading) {
  ReplayReport report;
  report.records = records.size();
  BidShader shader(model, shading);

  std::vector<PredictionOutcome> calib;
  calib.reserve(records.size());
  double ratio_sum = 0.0;

  for (const auto& rec : records) {
    if (rec.bid > 0.0) {
      calib.push_back({model.predict(rec.segment, rec.bid), rec.won});
    }

    if (!rec.min_win_price || !(*rec.min_win_price > 0.0)) continue;
    const double price = *rec.min_win_price;
    ++report.replayable;

    if (rec.won) report.logged_surplus += rec.value - rec.bid;
    if (rec.value > price) report.clairvoyant_surplus += rec.value - price;

    const ShadeResult r = shader.shade(rec.segment, rec.value);
    const double bid = r.status == ShadeStatus::kNoBid ? 0.0 : r.bid;
    const bool won = bid >= price && bid > 0.0;
    if (won) {
      ++report.model_wins;
      report.model_spend += bid;
      report.model_surplus += rec.value - bid;
    }
    ratio_sum += rec.value > 0.0 ? bid / rec.value : 0.0;
  }

  if (report.replayable > 0) {
    report.model_win_rate =
        static_cast<double>(report.model_wins) / report.replayable;
    report.model_mean_shade_ratio = ratio_sum / report.replayable;
  }
  report.calibration = calibrate(calib);
  return report;
}

}  // namespace bidshade
