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
//
// bidshade: simulate first-price auction markets, train win-rate models
// from auction logs, shade bids with them, and evaluate models by replay.
//
// The four stages pipe into each other through files:
//   bidshade simulate --log auctions.jsonl
//   bidshade train    --log auctions.jsonl --out model.json
//   bidshade shade    --model model.json --segment "site=news|size=300x250" --value 2.5
//   bidshade evaluate --log auctions.jsonl --model model.json

#include <cstdio>
#include <exception>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bidshade/auction_log.hpp"
#include "bidshade/market.hpp"
#include "bidshade/metrics.hpp"
#include "bidshade/model_io.hpp"
#include "bidshade/policies.hpp"
#include "bidshade/shading.hpp"
#include "bidshade/simulator.hpp"
#include "bidshade/training.hpp"
#include "bidshade/win_rate.hpp"

namespace {

using nlohmann::json;
using namespace bidshade;

// Shared flag groups -------------------------------------------------------

void add_shading_options(CLI::App* cmd, ShadingConfig* shading) {
  cmd->add_option("--min-ratio", shading->min_ratio,
                  "Lower bid bound as a fraction of value");
  cmd->add_option("--max-ratio", shading->max_ratio,
                  "Upper bid bound as a fraction of value");
  cmd->add_option("--fallback-ratio", shading->fallback_ratio,
                  "Ratio used when the model slope is degenerate");
}

struct ModelFlags {
  std::string transform = "log_bid";
  WinRateModelConfig config;

  WinRateModelConfig resolve() const {
    WinRateModelConfig out = config;
    const auto t = bid_transform_from_string(transform);
    if (!t) throw CLI::ValidationError("--transform", "unknown bid transform: " + transform);
    out.transform = *t;
    return out;
  }
};

void add_model_options(CLI::App* cmd, ModelFlags* flags) {
  cmd->add_option("--transform", flags->transform,
                  "Bid transform in the logit: log_bid or raw_bid");
  cmd->add_option("--lr", flags->config.learning_rate, "SGD base learning rate");
  cmd->add_option("--decay-horizon", flags->config.decay_horizon,
                  "Steps at which learning-rate decay sets in");
  cmd->add_option("--decay-exponent", flags->config.decay_exponent,
                  "Learning-rate decay exponent (must exceed 0.5 for "
                  "averaging to converge at the efficient rate)");
  cmd->add_option("--average-horizon", flags->config.average_horizon,
                  "Cap on the Polyak averaging window in steps "
                  "(0 serves the raw iterate)");
  cmd->add_option("--l2", flags->config.l2, "L2 regularization strength");
  cmd->add_option("--min-segment-obs", flags->config.min_segment_observations,
                  "Observations before a segment curve is trusted");
}

void add_augmentation_options(CLI::App* cmd, AugmentationConfig* aug) {
  cmd->add_flag_callback("--no-augment", [aug] { aug->enabled = false; },
                         "Disable counterfactual label augmentation");
  cmd->add_option("--augment-points", aug->points,
                  "Labeled bids synthesized per priced record");
}

MarketModel load_market(const std::string& path) {
  return path.empty() ? MarketModel::builtin_default()
                      : MarketModel::from_json_file(path);
}

// simulate -----------------------------------------------------------------

struct SimulateOptions {
  std::string market_file;
  std::string policy_spec = "truthful,fixed:0.50,fixed:0.80,model,oracle";
  SimulationConfig sim;
  ModelFlags model;
  AugmentationConfig augmentation;
  ShadingConfig shading;
  std::string log_file;
  std::optional<std::size_t> log_policy;
  std::string metrics_file;
  std::string save_model_file;
};

struct PolicySet {
  std::vector<std::unique_ptr<BidPolicy>> owned;
  std::vector<BidPolicy*> view;
  std::optional<std::size_t> first_model;
};

PolicySet build_policies(const std::string& list, const MarketModel& market,
                         const SimulateOptions& opts) {
  PolicySet set;
  std::string item;
  std::stringstream ss(list);
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    if (item == "truthful") {
      set.owned.push_back(std::make_unique<TruthfulPolicy>());
    } else if (item.rfind("fixed:", 0) == 0) {
      set.owned.push_back(
          std::make_unique<FixedRatioPolicy>(std::stod(item.substr(6))));
    } else if (item == "model") {
      if (!set.first_model) set.first_model = set.owned.size();
      set.owned.push_back(std::make_unique<ModelShadingPolicy>(
          opts.model.resolve(), opts.shading, opts.augmentation));
    } else if (item == "oracle") {
      set.owned.push_back(
          std::make_unique<OracleShadingPolicy>(market, opts.shading));
    } else {
      throw CLI::ValidationError(
          "--policies", "unknown policy '" + item +
                            "' (use truthful, fixed:R, model, oracle)");
    }
  }
  for (const auto& p : set.owned) set.view.push_back(p.get());
  return set;
}

json metrics_to_json(const SimulationResult& result,
                     const SimulateOptions& opts) {
  json out;
  out["auctions"] = opts.sim.auctions;
  out["warmup"] = opts.sim.warmup;
  out["seed"] = opts.sim.seed;
  out["measured_auctions"] = result.measured_auctions;
  out["clairvoyant_surplus"] = result.clairvoyant_surplus;
  out["policies"] = json::array();
  for (const auto& m : result.policies) {
    json jp{{"policy", m.policy},
            {"auctions", m.auctions},
            {"wins", m.wins},
            {"win_rate", m.win_rate},
            {"spend", m.spend},
            {"total_surplus", m.total_surplus},
            {"mean_surplus", m.mean_surplus},
            {"mean_shade_ratio", m.mean_shade_ratio}};
    if (result.clairvoyant_surplus > 0.0) {
      jp["capture"] = m.total_surplus / result.clairvoyant_surplus;
    }
    if (!m.surplus_curve.empty()) {
      json curve = json::array();
      for (const auto& [i, s] : m.surplus_curve) curve.push_back({i, s});
      jp["surplus_curve"] = std::move(curve);
    }
    out["policies"].push_back(std::move(jp));
  }
  return out;
}

void run_simulate(const SimulateOptions& opts_in) {
  SimulateOptions opts = opts_in;
  const MarketModel market = load_market(opts.market_file);
  PolicySet policies = build_policies(opts.policy_spec, market, opts);
  if (policies.view.empty()) {
    throw CLI::ValidationError("--policies", "no policies given");
  }

  if (!opts.log_file.empty()) {
    opts.sim.log_policy_index =
        opts.log_policy ? opts.log_policy
                        : policies.first_model.value_or(0);
  } else if (opts.log_policy) {
    opts.sim.log_policy_index = opts.log_policy;
  }

  const SimulationResult result =
      run_simulation(market, policies.view, opts.sim);

  std::printf("%-12s %10s %12s %14s %9s\n", "policy", "win_rate", "spend",
              "surplus", "capture");
  for (const auto& m : result.policies) {
    const double capture = result.clairvoyant_surplus > 0.0
                               ? m.total_surplus / result.clairvoyant_surplus
                               : 0.0;
    std::printf("%-12s %10.4f %12.2f %14.2f %9.4f\n", m.policy.c_str(),
                m.win_rate, m.spend, m.total_surplus, capture);
  }
  std::printf("clairvoyant surplus over %zu measured auctions: %.2f\n",
              result.measured_auctions, result.clairvoyant_surplus);

  if (!opts.log_file.empty()) {
    write_auction_log(opts.log_file, result.log);
    std::printf("wrote %zu auction records to %s\n", result.log.size(),
                opts.log_file.c_str());
  }
  if (!opts.metrics_file.empty()) {
    std::ofstream out(opts.metrics_file);
    if (!out) {
      throw std::runtime_error("cannot write metrics file: " + opts.metrics_file);
    }
    out << metrics_to_json(result, opts).dump(2) << '\n';
  }
  if (!opts.save_model_file.empty()) {
    if (!policies.first_model) {
      throw CLI::ValidationError("--save-model",
                                 "no 'model' policy in --policies");
    }
    const auto* mp = dynamic_cast<const ModelShadingPolicy*>(
        policies.view[*policies.first_model]);
    save_model(opts.save_model_file, mp->model());
    std::printf("saved model to %s\n", opts.save_model_file.c_str());
  }
}

// train --------------------------------------------------------------------

struct TrainOptions {
  std::string log_file;
  std::string out_file;
  std::string report_file;
  TrainingConfig training;
  ModelFlags model;
};

void run_train(const TrainOptions& opts) {
  const auto records = read_auction_log(opts.log_file);
  SegmentedWinRateModel model(opts.model.resolve());
  const TrainReport report = train_model(model, records, opts.training);

  std::printf("records: %zu (skipped %zu)\n", report.records,
              report.skipped_records);
  std::printf("expanded points: %zu over %zu segments\n", report.points,
              report.segments);
  std::printf("mean logistic loss: %.6f -> %.6f\n", report.initial_loss,
              report.final_loss);
  std::printf("global curve: intercept=%.6f slope=%.6f (%s)\n",
              model.global().curve.intercept, model.global().curve.slope,
              std::string(to_string(model.config().transform)).c_str());

  save_model(opts.out_file, model);
  std::printf("saved model to %s\n", opts.out_file.c_str());

  if (!opts.report_file.empty()) {
    json j{{"records", report.records},
           {"skipped_records", report.skipped_records},
           {"points", report.points},
           {"segments", report.segments},
           {"initial_loss", report.initial_loss},
           {"final_loss", report.final_loss}};
    std::ofstream out(opts.report_file);
    if (!out) {
      throw std::runtime_error("cannot write report file: " + opts.report_file);
    }
    out << j.dump(2) << '\n';
  }
}

// shade --------------------------------------------------------------------

struct ShadeOptions {
  std::string model_file;
  std::string segment;
  double value = 0.0;
  double floor = 0.0;
  ShadingConfig shading;
};

void run_shade(const ShadeOptions& opts) {
  const SegmentedWinRateModel model = load_model(opts.model_file);
  const BidShader shader(model, opts.shading);
  const ShadeResult r = shader.shade(opts.segment, opts.value, opts.floor);
  const json j{{"segment", opts.segment},
               {"value", opts.value},
               {"floor", opts.floor},
               {"bid", r.bid},
               {"win_probability", r.win_probability},
               {"expected_surplus", r.expected_surplus},
               {"shade_ratio", r.shade_ratio},
               {"status", std::string(to_string(r.status))},
               {"used_segment_model", r.used_segment_model}};
  std::printf("%s\n", j.dump(2).c_str());
}

// evaluate -----------------------------------------------------------------

struct EvaluateOptions {
  std::string log_file;
  std::string model_file;
  std::string out_file;
  ShadingConfig shading;
};

void run_evaluate(const EvaluateOptions& opts) {
  const auto records = read_auction_log(opts.log_file);
  const SegmentedWinRateModel model = load_model(opts.model_file);
  const ReplayReport report = evaluate_replay(model, records, opts.shading);

  std::printf("records: %zu, replayable (with price): %zu\n", report.records,
              report.replayable);
  std::printf("model:  wins=%zu win_rate=%.4f spend=%.2f surplus=%.2f\n",
              report.model_wins, report.model_win_rate, report.model_spend,
              report.model_surplus);
  std::printf("logged surplus: %.2f   clairvoyant surplus: %.2f\n",
              report.logged_surplus, report.clairvoyant_surplus);
  std::printf("calibration: ece=%.4f max_gap=%.4f over %zu predictions\n",
              report.calibration.ece, report.calibration.max_gap,
              report.calibration.samples);

  if (!opts.out_file.empty()) {
    json bins = json::array();
    for (const auto& b : report.calibration.bins) {
      bins.push_back({{"count", b.count},
                      {"mean_predicted", b.mean_predicted},
                      {"empirical_win_rate", b.empirical_win_rate}});
    }
    const json j{{"records", report.records},
                 {"replayable", report.replayable},
                 {"model_wins", report.model_wins},
                 {"model_win_rate", report.model_win_rate},
                 {"model_spend", report.model_spend},
                 {"model_surplus", report.model_surplus},
                 {"model_mean_shade_ratio", report.model_mean_shade_ratio},
                 {"logged_surplus", report.logged_surplus},
                 {"clairvoyant_surplus", report.clairvoyant_surplus},
                 {"calibration",
                  {{"ece", report.calibration.ece},
                   {"max_gap", report.calibration.max_gap},
                   {"samples", report.calibration.samples},
                   {"bins", bins}}}};
    std::ofstream out(opts.out_file);
    if (!out) {
      throw std::runtime_error("cannot write report file: " + opts.out_file);
    }
    out << j.dump(2) << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"First-price auction bid shading toolkit"};
  app.require_subcommand(1);

  SimulateOptions sim_opts;
  auto* sim = app.add_subcommand(
      "simulate", "Run bidding policies against a synthetic market");
  sim->add_option("--market", sim_opts.market_file,
                  "Market JSON file (builtin three-segment market if omitted)");
  sim->add_option("--auctions", sim_opts.sim.auctions, "Number of auctions");
  sim->add_option("--warmup", sim_opts.sim.warmup,
                  "Auctions excluded from metrics (learning burn-in)");
  sim->add_option("--seed", sim_opts.sim.seed, "Random seed");
  sim->add_option("--checkpoint-every", sim_opts.sim.checkpoint_every,
                  "Record cumulative surplus every N auctions");
  const std::map<std::string, PriceFeedback> feedback_names{
      {"always", PriceFeedback::kAlways},
      {"wins_only", PriceFeedback::kWinsOnly},
      {"never", PriceFeedback::kNever}};
  sim->add_option("--feedback", sim_opts.sim.feedback,
                  "Minimum-winning-price feedback: always, wins_only, never")
      ->transform(CLI::CheckedTransformer(feedback_names, CLI::ignore_case));
  sim->add_option("--policies", sim_opts.policy_spec,
                  "Comma list of truthful, fixed:R, model, oracle");
  sim->add_option("--log", sim_opts.log_file,
                  "Write the logged policy's auction stream (JSONL)");
  sim->add_option("--log-policy", sim_opts.log_policy,
                  "Index of the policy to log (default: first model policy)");
  sim->add_option("--metrics", sim_opts.metrics_file, "Write metrics JSON");
  sim->add_option("--save-model", sim_opts.save_model_file,
                  "Save the first model policy's learned state");
  add_model_options(sim, &sim_opts.model);
  add_augmentation_options(sim, &sim_opts.augmentation);
  add_shading_options(sim, &sim_opts.shading);
  sim->callback([&] { run_simulate(sim_opts); });

  TrainOptions train_opts;
  auto* train = app.add_subcommand(
      "train", "Fit a win-rate model to an auction log (JSONL)");
  train->add_option("--log", train_opts.log_file, "Auction log file")
      ->required();
  train->add_option("--out", train_opts.out_file, "Model JSON output path")
      ->required();
  train->add_option("--epochs", train_opts.training.epochs, "Training epochs");
  train->add_option("--seed", train_opts.training.seed, "Shuffle seed");
  train->add_option("--report", train_opts.report_file,
                    "Write a training report JSON");
  add_model_options(train, &train_opts.model);
  add_augmentation_options(train, &train_opts.training.augmentation);
  train->callback([&] { run_train(train_opts); });

  ShadeOptions shade_opts;
  auto* shade = app.add_subcommand(
      "shade", "Compute the surplus-maximizing bid for one impression");
  shade->add_option("--model", shade_opts.model_file, "Model JSON file")
      ->required();
  shade->add_option("--segment", shade_opts.segment, "Inventory segment key");
  shade->add_option("--value", shade_opts.value, "Impression value")
      ->required();
  shade->add_option("--floor", shade_opts.floor, "Auction floor price");
  add_shading_options(shade, &shade_opts.shading);
  shade->callback([&] { run_shade(shade_opts); });

  EvaluateOptions eval_opts;
  auto* eval = app.add_subcommand(
      "evaluate", "Replay a model against a logged auction stream");
  eval->add_option("--log", eval_opts.log_file, "Auction log file")
      ->required();
  eval->add_option("--model", eval_opts.model_file, "Model JSON file")
      ->required();
  eval->add_option("--out", eval_opts.out_file, "Write a replay report JSON");
  add_shading_options(eval, &eval_opts.shading);
  eval->callback([&] { run_evaluate(eval_opts); });

  std::string market_out;
  auto* market = app.add_subcommand(
      "market", "Write the builtin market definition as a template");
  market->add_option("--out", market_out, "Output JSON path")->required();
  market->callback([&] {
    MarketModel::builtin_default().to_json_file(market_out);
    std::printf("wrote market template to %s\n", market_out.c_str());
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
