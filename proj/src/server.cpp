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

#include "panpriv/server.hpp"

#include <cmath>

#include "panpriv/errors.hpp"

namespace panpriv {

CountEstimate estimate_count(const std::vector<Ciphertext>& reports,
                             const PrivateKey& priv, const RRParams& rr) {
  int64_t sum = 0;
  for (size_t i = 0; i < reports.size(); ++i) {
    int64_t b;
    try {
      b = dec(reports[i], priv, 1);
    } catch (const DecodeRangeError&) {
      throw MalformedReportError("count report plaintext not a bit", i);
    }
    if (b != 0 && b != 1) {
      throw MalformedReportError("count report plaintext not a bit", i);
    }
    sum += b;
  }
  CountEstimate est;
  est.n = static_cast<int64_t>(reports.size());
  est.eps0 = rr.eps0;
  est.estimate = debias_count(sum, est.n, rr);
  return est;
}

HistogramEstimate estimate_histogram(
    const std::vector<std::vector<Ciphertext>>& reports,
    const PrivateKey& priv, const RRParams& rr) {
  HistogramEstimate est;
  est.n = static_cast<int64_t>(reports.size());
  if (reports.empty()) return est;
  const size_t width = reports[0].size();
  std::vector<int64_t> sums(width, 0);
  for (size_t i = 0; i < reports.size(); ++i) {
    if (reports[i].size() != width) {
      throw MalformedReportError("histogram report has wrong length", i);
    }
    for (size_t j = 0; j < width; ++j) {
      int64_t b;
      try {
        b = dec(reports[i][j], priv, 1);
      } catch (const DecodeRangeError&) {
        throw MalformedReportError("histogram plaintext not a bit", i);
      }
      if (b != 0 && b != 1) {
        throw MalformedReportError("histogram plaintext not a bit", i);
      }
      sums[j] += b;
    }
  }
  est.buckets.resize(width);
  for (size_t j = 0; j < width; ++j) {
    est.buckets[j] = debias_count(sums[j], est.n, rr);
  }
  return est;
}

MeanEstimate estimate_mean(const std::vector<Ciphertext>& reports,
                           const PrivateKey& priv, const PublicKey& pub,
                           int64_t k, int64_t n, uint64_t decode_bound) {
  if (reports.empty()) throw ParameterError("no reports");
  Ciphertext acc = reports[0];
  for (size_t i = 1; i < reports.size(); ++i) {
    acc = add_ciphertexts(acc, reports[i], pub);
  }
  int64_t sum;
  try {
    sum = dec(acc, priv, decode_bound);
  } catch (const DecodeRangeError&) {
    throw DecodeRangeError(
        "aggregated sum outside decode bound; increase the bound or use a "
        "larger group");
  }
  MeanEstimate est;
  est.sum_estimate = static_cast<double>(sum);
  est.n = n;
  est.clip_bound = k;
  est.mean = est.sum_estimate / static_cast<double>(n);
  return est;
}

NoiseParams calibrate_mean_noise(double eps, double delta, int64_t k,
                                 int64_t n) {
  if (!(eps > 0) || eps > 1 || !(delta > 0) || delta >= 1) {
    throw ParameterError("eps must lie in (0, 1] and delta in (0, 1)");
  }
  if (k < 1 || n < 1) throw ParameterError("k and n must be >= 1");
  const double total_std =
      static_cast<double>(k) * std::sqrt(2 * std::log(1.25 / delta)) / eps;
  NoiseParams noise;
  noise.k = k;
  noise.sigma2 = total_std * total_std / static_cast<double>(n);
  return noise;
}

}  // namespace panpriv
