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

#include <sstream>

#include <doctest.h>

#include "bidshade/random.hpp"
#include "bidshade/segment.hpp"

using namespace bidshade;

TEST_CASE("round trip preserves records") {
  Rng rng(13);
  std::vector<AuctionRecord> records;
  for (int i = 0; i < 200; ++i) {
    AuctionRecord r;
    r.segment = i % 3 == 0 ? "site=a|size=300x250" : "site=b";
    r.value = rng.lognormal(0.0, 0.7);
    r.bid = 0.8 * r.value;
    r.won = rng.uniform() < 0.4;
    if (i % 2 == 0) r.min_win_price = rng.lognormal(0.0, 0.5);
    records.push_back(r);
  }
  std::stringstream ss;
  write_auction_log(ss, records);
  const auto back = read_auction_log(ss);
  CHECK(back == records);
}

TEST_CASE("blank lines are skipped, malformed lines are reported") {
  std::stringstream ok(
      R"({"segment":"s","value":1.0,"bid":0.5,"won":false})"
      "\n\n"
      R"({"segment":"t","value":2.0,"bid":1.5,"won":true,"min_win_price":1.2})"
      "\n");
  const auto records = read_auction_log(ok);
  REQUIRE(records.size() == 2);
  CHECK(records[0].segment == "s");
  CHECK_FALSE(records[0].min_win_price.has_value());
  CHECK(records[1].min_win_price == 1.2);

  std::stringstream bad("{\"segment\":\"s\"}\n");
  CHECK_THROWS_WITH_AS(static_cast<void>(read_auction_log(bad)),
                       doctest::Contains("line 1"), std::runtime_error);

  std::stringstream garbled(
      R"({"segment":"s","value":1.0,"bid":0.5,"won":false})"
      "\nnot json\n");
  CHECK_THROWS_WITH_AS(static_cast<void>(read_auction_log(garbled)),
                       doctest::Contains("line 2"), std::runtime_error);
}

TEST_CASE("missing file raises a clear error") {
  CHECK_THROWS_AS(static_cast<void>(read_auction_log("/nonexistent/x.jsonl")),
                  std::runtime_error);
}

TEST_CASE("null min_win_price reads as absent") {
  const auto r = auction_record_from_json(
      R"({"segment":"s","value":1.0,"bid":0.5,"won":false,"min_win_price":null})");
  CHECK_FALSE(r.min_win_price.has_value());
}

TEST_CASE("segment keys canonicalize feature order") {
  const auto a = canonical_segment_key({{"size", "300x250"}, {"site", "news"}});
  const auto b = canonical_segment_key({{"site", "news"}, {"size", "300x250"}});
  CHECK(a == b);
  CHECK(a == "site=news|size=300x250");
  CHECK(canonical_segment_key({}) == "");
}
