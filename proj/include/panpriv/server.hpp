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

#include <optional>
#include <vector>

#include "panpriv/client.hpp"
#include "panpriv/dp.hpp"
#include "panpriv/elgamal.hpp"

namespace panpriv {

struct CountEstimate {
  double estimate = 0;
  int64_t n = 0;
  double eps0 = 0;
  std::optional<int64_t> true_value;
  // two-server only
  int64_t accepted = 0;
  int64_t rejected = 0;
};

struct HistogramEstimate {
  // buckets[i] estimates #{devices: count = i} for i < k; buckets[k]
  // estimates #{devices: count >= k}.
  std::vector<double> buckets;
  int64_t n = 0;
};

struct MeanEstimate {
  double sum_estimate = 0;
  double mean = 0;
  int64_t clip_bound = 0;
  int64_t n = 0;
};

// Single-server estimators: decrypt, aggregate, de-bias.

CountEstimate estimate_count(const std::vector<Ciphertext>& reports,
                             const PrivateKey& priv, const RRParams& rr);

HistogramEstimate estimate_histogram(
    const std::vector<std::vector<Ciphertext>>& reports,
    const PrivateKey& priv, const RRParams& rr);

// Homomorphically adds all reports and decodes once (bound decode_bound).
MeanEstimate estimate_mean(const std::vector<Ciphertext>& reports,
                           const PrivateKey& priv, const PublicKey& pub,
                           int64_t k, int64_t n, uint64_t decode_bound);

// Gaussian-mechanism calibration at sensitivity k: total noise standard
// deviation k*sqrt(2*ln(1.25/delta))/eps, split evenly over n clients. In the
// notation of the averaging client (per-client N_Z(0, k*sigma^2)) this
// returns the raw per-client variance directly.
NoiseParams calibrate_mean_noise(double eps, double delta, int64_t k,
                                 int64_t n);

}  // namespace panpriv
