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

#include <cmath>

namespace bidshade {

// Numerically safe logistic helpers. All of them are total on double
// (no overflow for any finite input).

inline double sigmoid(double u) {
  if (u >= 0.0) {
    return 1.0 / (1.0 + std::exp(-u));
  }
  const double e = std::exp(u);
  return e / (1.0 + e);
}

// log(1 + e^u) without overflow. Branch cutoffs follow the usual
// double-precision analysis: below -37 the result is e^u to full
// precision, above 33.3 it is u itself.
inline double log1p_exp(double u) {
  if (u < -37.0) return std::exp(u);
  if (u <= 18.0) return std::log1p(std::exp(u));
  if (u <= 33.3) return u + std::exp(-u);
  return u;
}

// Bernoulli log-loss of a logit u against label y in {0,1}:
//   -[y log sigmoid(u) + (1-y) log(1 - sigmoid(u))] = log1p_exp(u) - y*u
inline double logistic_loss(double logit, double label) {
  return log1p_exp(logit) - label * logit;
}

inline double logit(double p) { return std::log(p / (1.0 - p)); }

}  // namespace bidshade
