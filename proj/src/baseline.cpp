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

#include "panpriv/baseline.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "panpriv/binomial.hpp"
#include "panpriv/errors.hpp"

namespace panpriv {

BaselineClient::BaselineClient(int64_t T, double eps) : T_(T) {
  if (T < 1) throw ParameterError("T must be >= 1");
  if (!(eps > 0)) throw ParameterError("eps must be positive");
  p_ = eps > 700 ? 0.0 : 1.0 / (std::exp(eps) + 1.0);
  responses_.reserve(T);
}

void BaselineClient::update(int x_t, Rng& rng) {
  if (step() >= T_) throw ProtocolError("update past horizon");
  const int bit = x_t ? 1 : 0;
  responses_.push_back(
      static_cast<uint8_t>(rng.bernoulli(p_) ? 1 - bit : bit));
}

int64_t BaselineClient::count_ones() const {
  return std::accumulate(responses_.begin(), responses_.end(), int64_t{0});
}

namespace {

// 1-response count of one simulated client: all-zero stream, or a single 1
// at the given step (event_step in [0, T), or -1 for none).
int64_t simulate_count(int64_t T, double eps, int64_t event_step, Rng& rng) {
  BaselineClient c(T, eps);
  for (int64_t t = 0; t < T; ++t) c.update(t == event_step ? 1 : 0, rng);
  return c.count_ones();
}

double empirical_tv_counts(const std::vector<int64_t>& h0,
                           const std::vector<int64_t>& h1, int64_t trials) {
  double tv = 0;
  for (size_t m = 0; m < h0.size(); ++m) {
    tv += std::abs(static_cast<double>(h0[m]) - static_cast<double>(h1[m]));
  }
  return tv / (2.0 * static_cast<double>(trials));
}

}  // namespace

DistinguisherResult run_distinguisher_experiment(int64_t T, double eps,
                                                 int64_t trials, Rng& rng) {
  if (trials < 1) throw ParameterError("trials must be >= 1");
  std::vector<int64_t> sample0(trials), sample1(trials);
  for (int64_t i = 0; i < trials; ++i) {
    sample0[i] = simulate_count(T, eps, -1, rng);
    const int64_t tpos = static_cast<int64_t>(rng.below(T));
    sample1[i] = simulate_count(T, eps, tpos, rng);
  }
  auto histogram = [&](const std::vector<int64_t>& s) {
    std::vector<int64_t> h(T + 1, 0);
    for (int64_t v : s) ++h[v];
    return h;
  };
  DistinguisherResult res;
  res.T = T;
  res.eps = eps;
  res.trials = trials;
  res.tv = empirical_tv_counts(histogram(sample0), histogram(sample1), trials);

  const int kBoot = 200;
  std::vector<double> boot(kBoot);
  for (int b = 0; b < kBoot; ++b) {
    std::vector<int64_t> h0(T + 1, 0), h1(T + 1, 0);
    for (int64_t i = 0; i < trials; ++i) {
      ++h0[sample0[rng.below(trials)]];
      ++h1[sample1[rng.below(trials)]];
    }
    boot[b] = empirical_tv_counts(h0, h1, trials);
  }
  std::sort(boot.begin(), boot.end());
  res.ci_low = boot[static_cast<size_t>(0.025 * kBoot)];
  res.ci_high = boot[static_cast<size_t>(0.975 * kBoot) - 1];
  return res;
}

ThresholdDecoder best_threshold(int64_t T, double eps) {
  const double p = eps > 700 ? 0.0 : 1.0 / (std::exp(eps) + 1.0);
  const std::vector<double> pmf0 = binom_pmf_vector(T, p);
  // One event: count = Bin(T-1, p) + Bern(1-p).
  std::vector<double> pmf1(T + 1, 0.0);
  if (T == 1) {
    pmf1[0] = p;
    pmf1[1] = 1 - p;
  } else {
    const std::vector<double> base = binom_pmf_vector(T - 1, p);
    for (int64_t m = 0; m <= T; ++m) {
      double v = 0;
      if (m <= T - 1) v += base[m] * p;
      if (m >= 1) v += base[m - 1] * (1 - p);
      pmf1[m] = v;
    }
  }
  ThresholdDecoder best;
  double best_gap = -1;
  double tail0 = 1, tail1 = 1;
  for (int64_t theta = 0; theta <= T; ++theta) {
    if (tail1 - tail0 > best_gap) {
      best_gap = tail1 - tail0;
      best.theta = theta;
      best.p0 = tail0;
      best.p1 = tail1;
    }
    tail0 -= pmf0[theta];
    tail1 -= pmf1[theta];
  }
  return best;
}

double baseline_estimate_error(int64_t n, int64_t T, double eps,
                               double event_prob, int64_t trials, Rng& rng) {
  if (n < 1 || trials < 1) throw ParameterError("n and trials must be >= 1");
  const ThresholdDecoder dec = best_threshold(T, eps);
  const double gap = dec.p1 - dec.p0;
  if (!(gap > 0)) throw ParameterError("degenerate decoder gap");
  double total_err = 0;
  for (int64_t trial = 0; trial < trials; ++trial) {
    int64_t true_count = 0;
    int64_t hits = 0;
    for (int64_t i = 0; i < n; ++i) {
      int64_t event_step = -1;
      if (rng.bernoulli(event_prob)) {
        event_step = static_cast<int64_t>(rng.below(T));
        ++true_count;
      }
      if (simulate_count(T, eps, event_step, rng) >= dec.theta) ++hits;
    }
    const double estimate =
        (static_cast<double>(hits) - static_cast<double>(n) * dec.p0) / gap;
    total_err += std::abs(estimate - static_cast<double>(true_count));
  }
  return total_err / static_cast<double>(trials);
}

}  // namespace panpriv
