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
#include "bidshade/market.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "bidshade/logistic.hpp"

namespace bidshade {

using nlohmann::json;

double SegmentMarket::sample_price(Rng& rng) const {
  if (price_dist == PriceDistribution::kLogLogistic) {
    return rng.log_logistic(price_scale, price_shape);
  }
  return rng.lognormal(std::log(price_scale), 1.0 / price_shape);
}

double SegmentMarket::sample_value(Rng& rng) const {
  return rng.lognormal(value_log_mean, value_log_stddev);
}

double SegmentMarket::true_win_rate(double bid) const {
  if (bid <= 0.0) return 0.0;
  if (price_dist == PriceDistribution::kLogLogistic) {
    // sigmoid(k ln b - k ln alpha)
    return sigmoid(price_shape * (std::log(bid) - std::log(price_scale)));
  }
  const double z = (std::log(bid) - std::log(price_scale)) * price_shape;
  return 0.5 * std::erfc(-z / std::sqrt(2.0));
}

MarketModel::MarketModel(std::vector<SegmentMarket> segments)
    : segments_(std::move(segments)) {
  if (segments_.empty()) {
    throw std::invalid_argument("market needs at least one segment");
  }
  double total = 0.0;
  for (const auto& s : segments_) {
    if (!(s.traffic_weight > 0.0)) {
      throw std::invalid_argument("traffic_weight must be positive");
    }
    total += s.traffic_weight;
    cumulative_weight_.push_back(total);
  }
  for (auto& w : cumulative_weight_) w /= total;
}

SimAuction MarketModel::sample(Rng& rng) const {
  const double u = rng.uniform();
  const auto it = std::upper_bound(cumulative_weight_.begin(),
                                   cumulative_weight_.end(), u);
  const auto idx = static_cast<std::uint32_t>(
      std::min<std::ptrdiff_t>(it - cumulative_weight_.begin(),
                               static_cast<std::ptrdiff_t>(segments_.size()) - 1));
  const SegmentMarket& seg = segments_[idx];
  SimAuction a;
  a.segment_index = idx;
  a.value = seg.sample_value(rng);
  a.floor = seg.floor;
  a.highest_other_bid = seg.sample_price(rng);
  a.min_win_price = std::max(a.highest_other_bid, a.floor);
  return a;
}

double MarketModel::true_win_rate(std::uint32_t segment_index,
                                  double bid) const {
  const SegmentMarket& seg = segments_[segment_index];
  if (bid < seg.floor) return 0.0;
  return seg.true_win_rate(bid);
}

MarketModel MarketModel::builtin_default() {
  std::vector<SegmentMarket> segs(3);
  segs[0] = {.segment = "site=news|size=300x250",
             .price_scale = 0.5, .price_shape = 2.0,
             .value_log_mean = 0.0, .value_log_stddev = 0.6,
             .traffic_weight = 1.0};
  segs[1] = {.segment = "site=video|size=640x480",
             .price_scale = 1.0, .price_shape = 2.5,
             .value_log_mean = 0.4, .value_log_stddev = 0.5,
             .traffic_weight = 1.0};
  segs[2] = {.segment = "site=sports|size=728x90",
             .price_scale = 2.0, .price_shape = 3.0,
             .value_log_mean = 0.9, .value_log_stddev = 0.4,
             .traffic_weight = 1.0};
  return MarketModel(std::move(segs));
}

namespace {

std::string_view dist_name(PriceDistribution d) {
  return d == PriceDistribution::kLogLogistic ? "log_logistic" : "lognormal";
}

PriceDistribution dist_from_name(std::string_view name) {
  if (name == "log_logistic") return PriceDistribution::kLogLogistic;
  if (name == "lognormal") return PriceDistribution::kLognormal;
  throw std::runtime_error("unknown price distribution: " + std::string(name));
}

}  // namespace

MarketModel MarketModel::from_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open market file: " + path.string());
  json j;
  in >> j;
  std::vector<SegmentMarket> segs;
  for (const auto& js : j.at("segments")) {
    SegmentMarket s;
    s.segment = js.at("segment").get<std::string>();
    s.price_dist = dist_from_name(js.value("price_dist", "log_logistic"));
    s.price_scale = js.at("price_scale").get<double>();
    s.price_shape = js.at("price_shape").get<double>();
    s.value_log_mean = js.value("value_log_mean", 0.0);
    s.value_log_stddev = js.value("value_log_stddev", 0.5);
    s.floor = js.value("floor", 0.0);
    s.traffic_weight = js.value("traffic_weight", 1.0);
    segs.push_back(std::move(s));
  }
  return MarketModel(std::move(segs));
}

void MarketModel::to_json_file(const std::filesystem::path& path) const {
  json out;
  out["segments"] = json::array();
  for (const auto& s : segments_) {
    out["segments"].push_back({{"segment", s.segment},
                               {"price_dist", dist_name(s.price_dist)},
                               {"price_scale", s.price_scale},
                               {"price_shape", s.price_shape},
                               {"value_log_mean", s.value_log_mean},
                               {"value_log_stddev", s.value_log_stddev},
                               {"floor", s.floor},
                               {"traffic_weight", s.traffic_weight}});
  }
  std::ofstream of(path);
  if (!of) throw std::runtime_error("cannot write market file: " + path.string());
  of << out.dump(2) << '\n';
}

}  // namespace bidshade
