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

#include "panpriv/binomial.hpp"

#include <cmath>

#include "panpriv/errors.hpp"

namespace panpriv {

double binom_pmf(int64_t T, double p, int64_t m) {
  if (m < 0 || m > T) return 0.0;
  if (p <= 0) return m == 0 ? 1.0 : 0.0;
  if (p >= 1) return m == T ? 1.0 : 0.0;
  // log-space for stability at large T
  const double lp = std::lgamma(static_cast<double>(T) + 1) -
                    std::lgamma(static_cast<double>(m) + 1) -
                    std::lgamma(static_cast<double>(T - m) + 1) +
                    static_cast<double>(m) * std::log(p) +
                    static_cast<double>(T - m) * std::log1p(-p);
  return std::exp(lp);
}

std::vector<double> binom_pmf_vector(int64_t T, double p) {
  std::vector<double> v(static_cast<size_t>(T) + 1);
  for (int64_t m = 0; m <= T; ++m) v[static_cast<size_t>(m)] = binom_pmf(T, p, m);
  return v;
}

TvReport tv_shifted_binomial(int64_t T, double p) {
  if (T < 2) throw ParameterError("T must be >= 2");
  if (!(p > 0) || !(p < 0.5)) throw ParameterError("p must lie in (0, 1/2)");
  TvReport r;
  r.T = T;
  r.p = p;

  const std::vector<double> pmf_t = binom_pmf_vector(T, p);
  const std::vector<double> pmf_t1 = binom_pmf_vector(T - 1, p);
  // law of Bin(T-1, p) + Bern(1-p)
  double tv = 0;
  double comp = 0;  // compensated summation
  for (int64_t m = 0; m <= T; ++m) {
    const double shifted =
        (m <= T - 1 ? pmf_t1[static_cast<size_t>(m)] : 0.0) * p +
        (m >= 1 ? pmf_t1[static_cast<size_t>(m - 1)] : 0.0) * (1 - p);
    const double term = std::fabs(pmf_t[static_cast<size_t>(m)] - shifted);
    const double y = term - comp;
    const double t = tv + y;
    comp = (t - tv) - y;
    tv = t;
  }
  r.tv_exact = tv / 2;

  const double tp = static_cast<double>(T) * p;
  const double nu = std::ceil(tp);
  r.demoivre_value = (1 - 2 * p) * (nu / tp) * binom_pmf(T, p, static_cast<int64_t>(nu));
  r.upper_bound = (1 - 2 * p) / std::sqrt(4 * p * (1 - p) * static_cast<double>(T));
  return r;
}

double demoivre_mad(int64_t T, double p) {
  if (T < 1) throw ParameterError("T must be >= 1");
  if (!(p > 0) || !(p < 1)) throw ParameterError("p must lie in (0, 1)");
  const double nu = std::ceil(static_cast<double>(T) * p);
  return 2 * nu * (1 - p) * binom_pmf(T, p, static_cast<int64_t>(nu));
}

double binom_mad_direct(int64_t T, double p) {
  const double tp = static_cast<double>(T) * p;
  double sum = 0;
  double comp = 0;
  for (int64_t m = 0; m <= T; ++m) {
    const double term = binom_pmf(T, p, m) * std::fabs(static_cast<double>(m) - tp);
    const double y = term - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return sum;
}

}  // namespace panpriv
