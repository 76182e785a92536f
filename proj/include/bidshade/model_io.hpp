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

#include <filesystem>
#include <string>

#include "bidshade/win_rate.hpp"

namespace bidshade {

// Model file schema (JSON, version 1):
// {
//   "format": "bidshade-model", "version": 1,
//   "config": {"transform": "log_bid", "learning_rate": ..., ...},
//   "global": {"intercept": ..., "slope": ..., "observations": n, "steps": n},
//   "segments": {"site=a|size=300x250": {...}, ...}
// }
// Doubles are emitted with shortest-round-trip formatting, so a save/load
// cycle reproduces parameters bit for bit.

std::string model_to_json(const SegmentedWinRateModel& model);
SegmentedWinRateModel model_from_json(const std::string& text);

void save_model(const std::filesystem::path& path,
                const SegmentedWinRateModel& model);
SegmentedWinRateModel load_model(const std::filesystem::path& path);

}  // namespace bidshade
