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

#include "panpriv/dp.hpp"

#include <cmath>
#include <limits>

#include "panpriv/errors.hpp"

namespace panpriv {

RRParams RRParams::from_eps0(double eps0) {
  if (!(eps0 > 0)) throw ParameterError("eps0 must be positive");
  RRParams p;
  p.eps0 = eps0;
  if (eps0 > 700) {
    // exp would overflow; clamp to deterministic pass-through.
    p.keep_prob = 1.0;
    p.flip_q = 0.0;
    return p;
  }
  const double e = std::exp(eps0);
  p.keep_prob = (e - 1) / (e + 1);
  p.flip_q = 1 / (e + 1);
  return p;
}

RRParams RRParams::noiseless() {
  RRParams p;
  p.eps0 = std::numeric_limits<double>::infinity();
  p.keep_prob = 1.0;
  p.flip_q = 0.0;
  return p;
}

int rr_bit(int b, const RRParams& params, Rng& rng) {
  if (b != 0 && b != 1) throw ParameterError("rr_bit input must be a bit");
  if (params.is_noiseless() || rng.bernoulli(params.keep_prob)) return b;
  return rng.bit() ? 1 : 0;
}

double debias_count(int64_t sum_of_responses, int64_t n,
                    const RRParams& params) {
  if (n == 0) return 0.0;
  const double q = params.flip_q;
  return (static_cast<double>(sum_of_responses) - static_cast<double>(n) * q) /
         (1 - 2 * q);
}

double expected_error_bound(int64_t n, const RRParams& params) {
  if (n <= 0) return 0.0;
  const double e = std::exp(std::min(params.eps0, 700.0));
  const double v = 1 + e / ((1 + e) * (1 + e));
  return std::sqrt(static_cast<double>(n) * v);
}

RRParams select_eps0_for_aggregator(double eps, double delta, int64_t n) {
  if (!(eps > 0) || eps >= 1 || !(delta > 0) || delta >= 1) {
    throw ParameterError("(eps, delta) must lie in (0, 1)");
  }
  if (n < 1) throw ParameterError("n must be >= 1");
  const double noise_needed = (64.0 / (eps * eps)) * std::log(4.0 / delta);
  // n * 2/(e^eps0+1) >= noise_needed  <=>  e^eps0 <= 2n/noise_needed - 1.
  const double bound = 2.0 * static_cast<double>(n) / noise_needed - 1.0;
  double eps0 = eps;
  if (bound > std::exp(eps)) eps0 = std::log(bound);
  return RRParams::from_eps0(eps0);
}

namespace {

// Bernoulli(exp(-gamma)) for gamma in [0, 1].
bool bernoulli_exp_frac(double gamma, Rng& rng) {
  uint64_t k = 1;
  for (;;) {
    if (!rng.bernoulli(gamma / static_cast<double>(k))) {
      return (k % 2) == 1;
    }
    ++k;
  }
}

bool bernoulli_exp(double gamma, Rng& rng) {
  while (gamma > 1) {
    if (!bernoulli_exp_frac(1.0, rng)) return false;
    gamma -= 1;
  }
  return bernoulli_exp_frac(gamma, rng);
}

// Discrete Laplace with scale t (pmf proportional to exp(-|y|/t)), t >= 1.
int64_t sample_discrete_laplace(int64_t t, Rng& rng) {
  for (;;) {
    const uint64_t u = rng.below(static_cast<uint64_t>(t));
    if (!bernoulli_exp(static_cast<double>(u) / static_cast<double>(t), rng)) {
      continue;
    }
    int64_t v = 0;
    while (bernoulli_exp(1.0, rng)) ++v;
    const int64_t mag = static_cast<int64_t>(u) + t * v;
    const bool negative = rng.bit();
    if (negative && mag == 0) continue;
    return negative ? -mag : mag;
  }
}

}  // namespace

int64_t sample_discrete_gaussian(double variance, Rng& rng) {
  if (variance < 0) throw ParameterError("variance must be nonnegative");
  if (variance == 0) return 0;
  const double sigma = std::sqrt(variance);
  const int64_t t = static_cast<int64_t>(std::floor(sigma)) + 1;
  for (;;) {
    const int64_t y = sample_discrete_laplace(t, rng);
    const double d =
        std::abs(static_cast<double>(y)) - variance / static_cast<double>(t);
    if (bernoulli_exp(d * d / (2 * variance), rng)) return y;
  }
}

}  // namespace panpriv
