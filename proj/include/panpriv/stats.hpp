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

#include <cmath>
#include <cstdint>
#include <vector>

namespace panpriv {

// Regularized upper incomplete gamma Q(a, x); series / continued fraction.
inline double gamma_q(double a, double x) {
  if (x < 0 || a <= 0) return 1.0;
  if (x == 0) return 1.0;
  const double gln = std::lgamma(a);
  if (x < a + 1) {
    // series for P(a, x)
    double ap = a;
    double sum = 1.0 / a;
    double del = sum;
    for (int i = 0; i < 500; ++i) {
      ap += 1;
      del *= x / ap;
      sum += del;
      if (std::fabs(del) < std::fabs(sum) * 1e-15) break;
    }
    return 1.0 - sum * std::exp(-x + a * std::log(x) - gln);
  }
  // continued fraction for Q(a, x)
  double b = x + 1 - a;
  double c = 1e300;
  double d = 1 / b;
  double h = d;
  for (int i = 1; i < 500; ++i) {
    const double an = -static_cast<double>(i) * (i - a);
    b += 2;
    d = an * d + b;
    if (std::fabs(d) < 1e-300) d = 1e-300;
    c = b + an / c;
    if (std::fabs(c) < 1e-300) c = 1e-300;
    d = 1 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1) < 1e-15) break;
  }
  return std::exp(-x + a * std::log(x) - gln) * h;
}

inline double chi_square_pvalue(double stat, int df) {
  return gamma_q(df / 2.0, stat / 2.0);
}

// Goodness-of-fit p-value for observed category counts against expected
// probabilities.
inline double chi_square_gof(const std::vector<int64_t>& observed,
                             const std::vector<double>& probs) {
  int64_t total = 0;
  for (int64_t o : observed) total += o;
  double stat = 0;
  int df = -1;
  for (size_t i = 0; i < observed.size(); ++i) {
    const double expct = probs[i] * static_cast<double>(total);
    if (expct <= 0) continue;
    const double d = static_cast<double>(observed[i]) - expct;
    stat += d * d / expct;
    ++df;
  }
  if (df < 1) return 1.0;
  return chi_square_pvalue(stat, df);
}

inline double normal_sf(double z) { return 0.5 * std::erfc(z / std::sqrt(2.0)); }

// Two-sided Welch t-test p-value (normal approximation on the statistic,
// adequate for the sample sizes used here).
inline double welch_pvalue(const std::vector<double>& a,
                           const std::vector<double>& b) {
  auto moments = [](const std::vector<double>& v, double& mean, double& var) {
    mean = 0;
    for (double x : v) mean += x;
    mean /= static_cast<double>(v.size());
    var = 0;
    for (double x : v) var += (x - mean) * (x - mean);
    var /= static_cast<double>(v.size() - 1);
  };
  double ma, va, mb, vb;
  moments(a, ma, va);
  moments(b, mb, vb);
  const double se =
      std::sqrt(va / static_cast<double>(a.size()) + vb / static_cast<double>(b.size()));
  if (se == 0) return ma == mb ? 1.0 : 0.0;
  const double t = std::fabs(ma - mb) / se;
  return 2 * normal_sf(t);
}

// Total variation distance between two empirical count vectors over the same
// support.
inline double empirical_tv(const std::vector<int64_t>& a,
                           const std::vector<int64_t>& b) {
  int64_t na = 0, nb = 0;
  for (int64_t x : a) na += x;
  for (int64_t x : b) nb += x;
  double tv = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    tv += std::fabs(static_cast<double>(a[i]) / na -
                    static_cast<double>(b[i]) / nb);
  }
  return tv / 2;
}

}  // namespace panpriv
