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
#include "bidshade/auction_log.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace bidshade {

using nlohmann::json;

std::string to_json_line(const AuctionRecord& r) {
  json j{{"segment", r.segment},
         {"value", r.value},
         {"bid", r.bid},
         {"won", r.won}};
  if (r.min_win_price) j["min_win_price"] = *r.min_win_price;
  return j.dump();
}

AuctionRecord auction_record_from_json(const std::string& line) {
  const json j = json::parse(line);
  AuctionRecord r;
  r.segment = j.at("segment").get<std::string>();
  r.value = j.at("value").get<double>();
  r.bid = j.at("bid").get<double>();
  r.won = j.at("won").get<bool>();
  if (j.contains("min_win_price") && !j["min_win_price"].is_null()) {
    r.min_win_price = j["min_win_price"].get<double>();
  }
  return r;
}

std::vector<AuctionRecord> read_auction_log(std::istream& in) {
  std::vector<AuctionRecord> records;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      records.push_back(auction_record_from_json(line));
    } catch (const json::exception& e) {
      throw std::runtime_error("auction log line " + std::to_string(line_no) +
                               ": " + e.what());
    }
  }
  return records;
}

std::vector<AuctionRecord> read_auction_log(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open auction log: " + path.string());
  }
  return read_auction_log(in);
}

void write_auction_log(std::ostream& out,
                       std::span<const AuctionRecord> records) {
  for (const auto& r : records) out << to_json_line(r) << '\n';
}

void write_auction_log(const std::filesystem::path& path,
                       std::span<const AuctionRecord> records) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot write auction log: " + path.string());
  }
  write_auction_log(out, records);
}

}  // namespace bidshade
