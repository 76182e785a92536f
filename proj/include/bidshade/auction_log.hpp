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
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace bidshade {

// One first-price auction as the bidder saw it. `min_win_price` is the
// lowest bid that would have won (exchange feedback); when present it
// lets training synthesize win/loss labels at hypothetical bid levels
// and lets evaluation replay counterfactual policies.
struct AuctionRecord {
  std::string segment;
  double value = 0.0;
  double bid = 0.0;
  bool won = false;
  std::optional<double> min_win_price;

  bool operator==(const AuctionRecord&) const = default;
};

// JSONL, one record per line:
//   {"segment":"site=a","value":2.5,"bid":1.9,"won":true,"min_win_price":1.7}
std::string to_json_line(const AuctionRecord& record);
AuctionRecord auction_record_from_json(const std::string& line);

// Throws std::runtime_error with the offending line number on malformed
// input. Blank lines are ignored.
std::vector<AuctionRecord> read_auction_log(const std::filesystem::path& path);
std::vector<AuctionRecord> read_auction_log(std::istream& in);

void write_auction_log(const std::filesystem::path& path,
                       std::span<const AuctionRecord> records);
void write_auction_log(std::ostream& out, std::span<const AuctionRecord> records);

}  // namespace bidshade
