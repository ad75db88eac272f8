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

#include <cmath>

#include "doctest.h"
#include "panpriv/dp.hpp"
#include "panpriv/errors.hpp"
#include "panpriv/stats.hpp"

using namespace panpriv;

TEST_CASE("randomized response parameters") {
  const RRParams rr = RRParams::from_eps0(1.0);
  const double e = std::exp(1.0);
  CHECK(rr.keep_prob == doctest::Approx((e - 1) / (e + 1)).epsilon(1e-12));
  CHECK(rr.flip_q == doctest::Approx(1 / (e + 1)).epsilon(1e-12));
  // keep + (1-keep)/2 = P[output = b] = e^eps/(1+e^eps)
  CHECK(rr.keep_prob + (1 - rr.keep_prob) / 2 ==
        doctest::Approx(e / (1 + e)).epsilon(1e-12));
  CHECK(!rr.is_noiseless());
  CHECK(RRParams::noiseless().is_noiseless());
  CHECK_THROWS_AS(RRParams::from_eps0(0.0), ParameterError);
  CHECK_THROWS_AS(RRParams::from_eps0(-1.0), ParameterError);
}

TEST_CASE("rr_bit empirical frequencies") {
  const RRParams rr = RRParams::from_eps0(1.0);
  Rng rng(11);
  const int64_t trials = 200000;
  int64_t ones = 0;
  for (int64_t i = 0; i < trials; ++i) ones += rr_bit(1, rr, rng);
  const double p_true = std::exp(1.0) / (1 + std::exp(1.0));
  const double freq = static_cast<double>(ones) / trials;
  CHECK(std::abs(freq - p_true) < 0.005);
}

TEST_CASE("debias is exact in expectation") {
  const RRParams rr = RRParams::from_eps0(2.0);
  // If all n responses came out 1: estimate = (n - n q)/(1-2q)
  const double est = debias_count(100, 100, rr);
  CHECK(est == doctest::Approx(100 * (1 - rr.flip_q) / (1 - 2 * rr.flip_q)));
  // near the all-noise baseline sum = round(n*q), the estimate is near 0
  const int64_t sum = std::llround(1000 * rr.flip_q);
  CHECK(debias_count(sum, 1000, rr) ==
        doctest::Approx((sum - 1000 * rr.flip_q) / (1 - 2 * rr.flip_q)));
  CHECK(debias_count(0, 0, RRParams::noiseless()) == 0.0);
}

TEST_CASE("aggregator eps0 selection") {
  // n = 1: no amplification, eps0 = eps
  const RRParams base = select_eps0_for_aggregator(0.5, 1e-6, 1);
  CHECK(base.eps0 == doctest::Approx(0.5));
  // monotone nondecreasing in n
  double prev = 0;
  for (int64_t n : {100, 1000, 10000, 100000, 1000000}) {
    const RRParams rr = select_eps0_for_aggregator(0.5, 1e-6, n);
    CHECK(rr.eps0 >= prev);
    CHECK(rr.eps0 >= 0.5);
    prev = rr.eps0;
  }
  // large n must give a strictly weaker local parameter than eps
  CHECK(select_eps0_for_aggregator(0.5, 1e-6, 1000000).eps0 > 0.5);
  CHECK_THROWS_AS(select_eps0_for_aggregator(0.0, 1e-6, 100), ParameterError);
  CHECK_THROWS_AS(select_eps0_for_aggregator(1.5, 1e-6, 100), ParameterError);
}

TEST_CASE("discrete gaussian moments") {
  Rng rng(12);
  for (double sigma2 : {0.5, 2.0, 9.0}) {
    const int64_t trials = 200000;
    double sum = 0, sumsq = 0;
    for (int64_t i = 0; i < trials; ++i) {
      const double v = static_cast<double>(sample_discrete_gaussian(sigma2, rng));
      sum += v;
      sumsq += v * v;
    }
    const double mean = sum / trials;
    const double var = sumsq / trials - mean * mean;
    CHECK(std::abs(mean) < 4 * std::sqrt(sigma2 / trials) + 0.01);
    // discrete Gaussian variance is close to (and at most about) sigma2
    CHECK(var == doctest::Approx(sigma2).epsilon(0.05));
  }
}

TEST_CASE("discrete gaussian matches its density") {
  Rng rng(13);
  const double sigma2 = 4.0;
  const int64_t trials = 200000;
  const int64_t width = 12;
  std::vector<int64_t> observed(2 * width + 1, 0);
  for (int64_t i = 0; i < trials; ++i) {
    const int64_t v = sample_discrete_gaussian(sigma2, rng);
    if (std::abs(v) <= width) ++observed[v + width];
  }
  std::vector<double> probs(2 * width + 1);
  double z = 0;
  for (int64_t x = -width; x <= width; ++x) {
    probs[x + width] = std::exp(-static_cast<double>(x * x) / (2 * sigma2));
    z += probs[x + width];
  }
  for (auto& p : probs) p /= z;
  CHECK(chi_square_gof(observed, probs) > 1e-4);
}

TEST_CASE("discrete gaussian degenerate variance") {
  Rng rng(14);
  for (int i = 0; i < 100; ++i) CHECK(sample_discrete_gaussian(0.0, rng) == 0);
  CHECK_THROWS_AS(sample_discrete_gaussian(-1.0, rng), ParameterError);
}
