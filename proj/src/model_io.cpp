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
#include "bidshade/model_io.hpp"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace bidshade {

using nlohmann::json;

namespace {

constexpr int kFormatVersion = 1;

json state_to_json(const SegmentedWinRateModel::State& s) {
  return json{{"intercept", s.curve.intercept},
              {"slope", s.curve.slope},
              {"iterate_intercept", s.iterate.intercept},
              {"iterate_slope", s.iterate.slope},
              {"observations", s.observations},
              {"steps", s.steps}};
}

SegmentedWinRateModel::State state_from_json(const json& j, BidTransform t) {
  SegmentedWinRateModel::State s;
  s.curve.intercept = j.at("intercept").get<double>();
  s.curve.slope = j.at("slope").get<double>();
  s.curve.transform = t;
  // The raw SGD iterate rides along so training can resume exactly.
  s.iterate.intercept = j.value("iterate_intercept", s.curve.intercept);
  s.iterate.slope = j.value("iterate_slope", s.curve.slope);
  s.iterate.transform = t;
  s.observations = j.at("observations").get<std::uint64_t>();
  s.steps = j.at("steps").get<std::uint64_t>();
  return s;
}

}  // namespace

std::string model_to_json(const SegmentedWinRateModel& model) {
  const auto& cfg = model.config();
  json j;
  j["format"] = "bidshade-model";
  j["version"] = kFormatVersion;
  j["config"] = {{"transform", to_string(cfg.transform)},
                 {"initial_intercept", cfg.initial_intercept},
                 {"initial_slope", cfg.initial_slope},
                 {"learning_rate", cfg.learning_rate},
                 {"decay_horizon", cfg.decay_horizon},
                 {"decay_exponent", cfg.decay_exponent},
                 {"l2", cfg.l2},
                 {"average_horizon", cfg.average_horizon},
                 {"min_segment_observations", cfg.min_segment_observations}};
  j["global"] = state_to_json(model.global());
  json segs = json::object();
  for (const auto& [key, state] : model.segments()) {
    segs[key] = state_to_json(state);
  }
  j["segments"] = std::move(segs);
  return j.dump(2);
}

SegmentedWinRateModel model_from_json(const std::string& text) {
  const json j = json::parse(text);
  if (j.value("format", "") != "bidshade-model") {
    throw std::runtime_error("not a bidshade model file");
  }
  if (j.at("version").get<int>() != kFormatVersion) {
    throw std::runtime_error("unsupported model file version");
  }

  const json& jc = j.at("config");
  WinRateModelConfig cfg;
  const auto transform =
      bid_transform_from_string(jc.at("transform").get<std::string>());
  if (!transform) {
    throw std::runtime_error("unknown bid transform in model file");
  }
  cfg.transform = *transform;
  cfg.initial_intercept = jc.at("initial_intercept").get<double>();
  cfg.initial_slope = jc.at("initial_slope").get<double>();
  cfg.learning_rate = jc.at("learning_rate").get<double>();
  cfg.decay_horizon = jc.at("decay_horizon").get<double>();
  cfg.decay_exponent = jc.value("decay_exponent", cfg.decay_exponent);
  cfg.l2 = jc.at("l2").get<double>();
  cfg.average_horizon = jc.value("average_horizon", cfg.average_horizon);
  cfg.min_segment_observations =
      jc.at("min_segment_observations").get<std::uint64_t>();

  SegmentedWinRateModel model(cfg);
  model.set_global(state_from_json(j.at("global"), cfg.transform));
  for (const auto& [key, js] : j.at("segments").items()) {
    model.set_segment(key, state_from_json(js, cfg.transform));
  }
  return model;
}

void save_model(const std::filesystem::path& path,
                const SegmentedWinRateModel& model) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write model file: " + path.string());
  out << model_to_json(model) << '\n';
}

SegmentedWinRateModel load_model(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open model file: " + path.string());
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return model_from_json(text);
}

}  // namespace bidshade
