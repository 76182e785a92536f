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
#include "bidshade/golden_section.hpp"

#include <cmath>

#include <doctest.h>

#include "bidshade/random.hpp"
#include "oracles.hpp"

using namespace bidshade;

TEST_CASE("quadratic peak is found to tight tolerance") {
  const auto f = [](double x) { return 3.0 - (x - 1.25) * (x - 1.25); };
  const auto r = golden_section_maximize(f, -4.0, 7.0);
  CHECK(r.converged);
  CHECK(r.x == doctest::Approx(1.25).epsilon(1e-7));
  CHECK(r.value == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("maximum on the boundary is returned exactly") {
  const auto inc = [](double x) { return 2.0 * x; };
  auto r = golden_section_maximize(inc, 0.0, 5.0);
  CHECK(r.x == doctest::Approx(5.0).epsilon(1e-9));
  CHECK(r.value == doctest::Approx(10.0).epsilon(1e-9));

  const auto dec = [](double x) { return -x; };
  r = golden_section_maximize(dec, 2.0, 9.0);
  CHECK(r.x == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("random unimodal functions match a dense grid") {
  Rng rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const double peak = rng.uniform(-3.0, 3.0);
    const double scale = rng.uniform(0.2, 4.0);
    const double power = rng.uniform(1.2, 3.0);
    const auto f = [=](double x) {
      return -scale * std::pow(std::fabs(x - peak), power);
    };
    const double lo = peak - rng.uniform(0.5, 4.0);
    const double hi = peak + rng.uniform(0.5, 4.0);
    const auto r = golden_section_maximize(f, lo, hi);
    const auto g = testing::grid_argmax(f, lo, hi);
    CHECK(std::fabs(r.x - g.x) < 1e-4);  // grid spacing dominates
    CHECK(r.value >= g.value - 1e-12);
  }
}

TEST_CASE("swapped bounds are tolerated") {
  const auto f = [](double x) { return -(x - 1.0) * (x - 1.0); };
  const auto r = golden_section_maximize(f, 4.0, -2.0);
  CHECK(r.x == doctest::Approx(1.0).epsilon(1e-7));
}

TEST_CASE("degenerate interval returns the point itself") {
  const auto f = [](double x) { return x * x; };
  const auto r = golden_section_maximize(f, 2.0, 2.0);
  CHECK(r.x == 2.0);
  CHECK(r.value == 4.0);
  CHECK(r.converged);
}

TEST_CASE("iteration cap is honored") {
  GoldenSectionOptions opts;
  opts.max_iterations = 5;
  opts.tol_abs = 0.0;
  opts.tol_rel = 0.0;
  int evals = 0;
  const auto f = [&](double x) {
    ++evals;
    return -x * x;
  };
  const auto r = golden_section_maximize(f, -1.0, 1.0, opts);
  CHECK_FALSE(r.converged);
  CHECK(evals == r.evaluations);
  CHECK(evals == 4 + 5);  // endpoints + two seeds + one per iteration
}

TEST_CASE("minimize is maximize of the negation") {
  const auto f = [](double x) { return (x - 2.0) * (x - 2.0) + 1.0; };
  const auto r = golden_section_minimize(f, -10.0, 10.0);
  CHECK(r.x == doctest::Approx(2.0).epsilon(1e-6));
  CHECK(r.value == doctest::Approx(1.0).epsilon(1e-12));
}
