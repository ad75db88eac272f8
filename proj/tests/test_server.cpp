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
#include "panpriv/errors.hpp"
#include "panpriv/server.hpp"

using namespace panpriv;

namespace {

KeyPair test_keys(uint64_t seed, uint64_t q = 65521) {
  Rng rng(seed);
  return keygen(GroupSpec::test(q), rng);
}

}  // namespace

TEST_CASE("count estimation, noiseless") {
  const KeyPair keys = test_keys(50);
  Rng rng(51);
  std::vector<Ciphertext> reports;
  int64_t truth = 0;
  for (int i = 0; i < 500; ++i) {
    const int b = rng.bernoulli(0.3) ? 1 : 0;
    truth += b;
    reports.push_back(enc(b, keys.pub, rng));
  }
  const CountEstimate est =
      estimate_count(reports, keys.priv, RRParams::noiseless());
  CHECK(est.estimate == doctest::Approx(static_cast<double>(truth)));
  CHECK(est.n == 500);
}

TEST_CASE("count estimation rejects malformed reports with the index") {
  const KeyPair keys = test_keys(52);
  Rng rng(53);
  std::vector<Ciphertext> reports;
  for (int i = 0; i < 5; ++i) reports.push_back(enc(1, keys.pub, rng));
  reports[3] = enc(7, keys.pub, rng);
  try {
    estimate_count(reports, keys.priv, RRParams::noiseless());
    FAIL("expected MalformedReportError");
  } catch (const MalformedReportError& e) {
    CHECK(e.index == 3);
  }
}

TEST_CASE("histogram estimation and shape validation") {
  const KeyPair keys = test_keys(54);
  Rng rng(55);
  std::vector<std::vector<Ciphertext>> reports;
  std::vector<int64_t> truth(4, 0);
  for (int i = 0; i < 200; ++i) {
    const int64_t bucket = static_cast<int64_t>(rng.below(4));
    ++truth[bucket];
    std::vector<Ciphertext> row;
    for (int64_t j = 0; j < 4; ++j) {
      row.push_back(enc(j == bucket ? 1 : 0, keys.pub, rng));
    }
    reports.push_back(std::move(row));
  }
  const HistogramEstimate est =
      estimate_histogram(reports, keys.priv, RRParams::noiseless());
  for (int64_t j = 0; j < 4; ++j) {
    CHECK(est.buckets[j] == doctest::Approx(static_cast<double>(truth[j])));
  }
  reports[10].pop_back();
  try {
    estimate_histogram(reports, keys.priv, RRParams::noiseless());
    FAIL("expected MalformedReportError");
  } catch (const MalformedReportError& e) {
    CHECK(e.index == 10);
  }
}

TEST_CASE("debias recovers the count under report noise") {
  const KeyPair keys = test_keys(56);
  const RRParams rr = RRParams::from_eps0(1.0);
  Rng rng(57);
  const int64_t n = 5000;
  const int64_t trials = 10;
  double total_err = 0;
  for (int64_t trial = 0; trial < trials; ++trial) {
    std::vector<Ciphertext> reports;
    int64_t truth = 0;
    for (int64_t i = 0; i < n; ++i) {
      const int b = rng.bernoulli(0.4) ? 1 : 0;
      truth += b;
      reports.push_back(enc(rr_bit(b, rr, rng), keys.pub, rng));
    }
    const CountEstimate est = estimate_count(reports, keys.priv, rr);
    total_err += std::abs(est.estimate - static_cast<double>(truth));
  }
  const double bound = 3 * std::sqrt(n * rr.flip_q * (1 - rr.flip_q)) /
                       (1 - 2 * rr.flip_q);
  CHECK(total_err / trials <= bound);
}

TEST_CASE("mean estimation via the homomorphic sum") {
  const KeyPair keys = test_keys(58);
  Rng rng(59);
  std::vector<Ciphertext> reports;
  int64_t sum = 0;
  const int64_t n = 300;
  for (int64_t i = 0; i < n; ++i) {
    const int64_t v = static_cast<int64_t>(rng.below(9));
    sum += v;
    reports.push_back(enc(v, keys.pub, rng));
  }
  const MeanEstimate est =
      estimate_mean(reports, keys.priv, keys.pub, 8, n, (65521 - 1) / 2);
  CHECK(est.sum_estimate == doctest::Approx(static_cast<double>(sum)));
  CHECK(est.mean ==
        doctest::Approx(static_cast<double>(sum) / static_cast<double>(n)));
}

TEST_CASE("mean decode range error is advisory") {
  const KeyPair keys = test_keys(60, 101);
  Rng rng(61);
  std::vector<Ciphertext> reports;
  for (int i = 0; i < 30; ++i) reports.push_back(enc(4, keys.pub, rng));
  // sum 120 wraps to 19 in the tiny group, outside a decode bound of 10
  CHECK_THROWS_AS(estimate_mean(reports, keys.priv, keys.pub, 4, 30, 10),
                  DecodeRangeError);
}

TEST_CASE("gaussian noise calibration formula") {
  const NoiseParams noise = calibrate_mean_noise(1.0, 1e-6, 8, 100);
  const double total_std = 8 * std::sqrt(2 * std::log(1.25e6));
  CHECK(noise.sigma2 ==
        doctest::Approx(total_std * total_std / 100).epsilon(1e-9));
  CHECK_THROWS_AS(calibrate_mean_noise(0, 1e-6, 8, 100), ParameterError);
  CHECK_THROWS_AS(calibrate_mean_noise(0.5, 1e-6, 0, 100), ParameterError);
}
