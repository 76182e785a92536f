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

#include <algorithm>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bidshade {

// Inventory segments are identified by a canonical string formed from
// feature name/value pairs: pairs sorted by name, joined as "name=value"
// with '|'. Two feature sets that differ only in ordering map to the
// same key.
inline std::string canonical_segment_key(
    std::vector<std::pair<std::string, std::string>> features) {
  std::sort(features.begin(), features.end());
  std::string key;
  for (const auto& [name, value] : features) {
    if (!key.empty()) key += '|';
    key += name;
    key += '=';
    key += value;
  }
  return key;
}

}  // namespace bidshade
