// Copyright 2026 The panpriv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>

#include "panpriv/rng.hpp"

namespace panpriv {

// Randomized response with parameter eps0: output the true bit with
// probability e^eps0 / (1 + e^eps0). Implemented as "keep the bit with
// probability (e^eps0 - 1)/(e^eps0 + 1), otherwise output a uniform bit".
struct RRParams {
  double eps0 = 0;
  double keep_prob = 0;  // (e^eps0 - 1)/(e^eps0 + 1)
  double flip_q = 0;     // 1/(e^eps0 + 1) = Pr[output != b]

  static RRParams from_eps0(double eps0);
  // eps0 = infinity: deterministic pass-through (keep_prob = 1, flip_q = 0).
  static RRParams noiseless();
  bool is_noiseless() const { return keep_prob >= 1.0; }
};

struct NoiseParams {
  double sigma2 = 0;  // per-client discrete Gaussian variance
  int64_t k = 1;      // truncation bound of the clipped count
};

int rr_bit(int b, const RRParams& params, Rng& rng);

// Unbiased estimate of the true count from a sum of n randomized responses:
// (sum - n*q) / (1 - 2q).
double debias_count(int64_t sum_of_responses, int64_t n,
                    const RRParams& params);

// Reference error curve C * sqrt(n * (1 + e^eps0/(1+e^eps0)^2)), C = 1.
double expected_error_bound(int64_t n, const RRParams& params);

// Picks eps0 so the aggregated sum of n randomized responses is (eps,
// delta)-DP, using the closed-form binomial-mechanism style condition: the
// number of uniformly random responses, n * 2/(e^eps0 + 1), must be at least
// (64/eps^2) * ln(4/delta). The returned eps0 is the maximal one satisfying
// that bound, floored at eps (no amplification below the local guarantee).
RRParams select_eps0_for_aggregator(double eps, double delta, int64_t n);

// Exact sampler for the discrete Gaussian N_Z(0, variance): discrete Laplace
// proposal with rejection (Canonne-Kamath-Steinke construction).
int64_t sample_discrete_gaussian(double variance, Rng& rng);

}  // namespace panpriv
