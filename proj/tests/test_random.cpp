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
#include "bidshade/random.hpp"

#include <cmath>
#include <vector>

#include <doctest.h>

using namespace bidshade;

TEST_CASE("seeds fully determine the stream") {
  Rng a(42), b(42), c(43);
  bool diverged = false;
  for (int i = 0; i < 1'000; ++i) {
    const double x = a.uniform();
    CHECK(x == b.uniform());
    if (x != c.uniform()) diverged = true;
  }
  CHECK(diverged);
}

TEST_CASE("uniform stays in the half-open unit interval") {
  Rng rng(7);
  double lo = 1.0, hi = 0.0, sum = 0.0;
  const int n = 100'000;
  for (int i = 0; i < n; ++i) {
    const double u = rng.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    lo = std::min(lo, u);
    hi = std::max(hi, u);
    sum += u;
  }
  CHECK(sum / n == doctest::Approx(0.5).epsilon(0.01));
  CHECK(lo < 0.001);
  CHECK(hi > 0.999);
}

TEST_CASE("normal has the right first two moments") {
  Rng rng(11);
  const int n = 200'000;
  double sum = 0.0, sum_sq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = rng.normal();
    sum += x;
    sum_sq += x * x;
  }
  const double mean = sum / n;
  const double var = sum_sq / n - mean * mean;
  CHECK(mean == doctest::Approx(0.0).epsilon(0.01));
  CHECK(std::fabs(mean) < 0.01);
  CHECK(var == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("log-logistic quantiles match the inverse cdf") {
  Rng rng(23);
  const double alpha = 2.0, k = 3.0;
  const int n = 200'000;
  // F(x) = 1/(1 + (x/alpha)^-k); check a few fixed thresholds.
  for (double q : {0.25, 0.5, 0.75}) {
    const double x_q = alpha * std::pow(q / (1.0 - q), 1.0 / k);
    Rng local(23);
    int below = 0;
    for (int i = 0; i < n; ++i) {
      if (local.log_logistic(alpha, k) <= x_q) ++below;
    }
    const double sigma = std::sqrt(q * (1 - q) / n);
    CHECK(std::fabs(static_cast<double>(below) / n - q) < 4 * sigma + 1e-9);
  }
  (void)rng;
}

TEST_CASE("bernoulli frequency approaches p") {
  Rng rng(5);
  const double p = 0.37;
  const int n = 100'000;
  double wins = 0.0;
  for (int i = 0; i < n; ++i) wins += rng.bernoulli(p);
  CHECK(wins / n == doctest::Approx(p).epsilon(0.02));
}

TEST_CASE("index covers the whole range and stays in bounds") {
  Rng rng(3);
  std::vector<int> counts(7, 0);
  for (int i = 0; i < 10'000; ++i) {
    const std::size_t k = rng.index(7);
    REQUIRE(k < 7);
    ++counts[k];
  }
  for (int c : counts) CHECK(c > 1'000);
}

TEST_CASE("uniform_pos is strictly positive") {
  Rng rng(9);
  for (int i = 0; i < 10'000; ++i) {
    CHECK(rng.uniform_pos() > 0.0);
  }
}
