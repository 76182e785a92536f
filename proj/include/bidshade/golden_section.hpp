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
#include <cmath>
#include <utility>

namespace bidshade {

struct GoldenSectionOptions {
  // Stop once the bracket is narrower than tol_abs + tol_rel * |bracket center|.
  double tol_abs = 1e-10;
  double tol_rel = 1e-10;
  int max_iterations = 200;
};

struct GoldenSectionResult {
  double x = 0.0;       // best abscissa found
  double value = 0.0;   // f(x)
  int evaluations = 0;
  bool converged = false;
};

// Maximizes a unimodal f on [lo, hi] by golden-section search.
// Each iteration shrinks the bracket by the inverse golden ratio and costs
// one function evaluation. The endpoints are evaluated once up front so a
// maximum sitting on the boundary is still returned exactly.
template <typename F>
GoldenSectionResult golden_section_maximize(F&& f, double lo, double hi,
                                            const GoldenSectionOptions& opts = {}) {
  GoldenSectionResult res;
  if (!(lo <= hi)) std::swap(lo, hi);

  // 1/phi and 1/phi^2
  constexpr double kInvPhi = 0.6180339887498949;
  constexpr double kInvPhi2 = 0.3819660112501051;

  double a = lo, b = hi;
  double fa = f(a), fb = f(b);
  res.evaluations = 2;

  double u = a + kInvPhi2 * (b - a);
  double v = a + kInvPhi * (b - a);
  double fu = f(u), fv = f(v);
  res.evaluations += 2;

  const auto tol = [&](double center) {
    return opts.tol_abs + opts.tol_rel * std::fabs(center);
  };

  for (int i = 0; i < opts.max_iterations; ++i) {
    if (b - a <= tol(0.5 * (a + b))) {
      res.converged = true;
      break;
    }
    if (fu > fv) {
      b = v; fb = fv;
      v = u; fv = fu;
      u = a + kInvPhi2 * (b - a);
      fu = f(u);
    } else {
      a = u; fa = fu;
      u = v; fu = fv;
      v = a + kInvPhi * (b - a);
      fv = f(v);
    }
    ++res.evaluations;
  }

  // Best of the four tracked points; interior points win ties.
  res.x = u; res.value = fu;
  if (fv > res.value) { res.x = v; res.value = fv; }
  if (fa > res.value) { res.x = a; res.value = fa; }
  if (fb > res.value) { res.x = b; res.value = fb; }
  return res;
}

template <typename F>
GoldenSectionResult golden_section_minimize(F&& f, double lo, double hi,
                                            const GoldenSectionOptions& opts = {}) {
  auto res = golden_section_maximize([&](double x) { return -f(x); }, lo, hi, opts);
  res.value = -res.value;
  return res;
}

}  // namespace bidshade
