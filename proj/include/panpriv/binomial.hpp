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
#include <vector>

namespace panpriv {

// Exact binomial numerics behind the lower-bound analysis: the total
// variation distance between Bin(T, p) and Bin(T-1, p) + Bern(1-p), the
// De Moivre mean-absolute-deviation identity, and the closed upper bound.

double binom_pmf(int64_t T, double p, int64_t m);
std::vector<double> binom_pmf_vector(int64_t T, double p);

struct TvReport {
  int64_t T = 0;
  double p = 0;
  double tv_exact = 0;        // direct summation over the support
  double demoivre_value = 0;  // (1-2p) * (ceil(Tp)/(Tp)) * P[Bin(T,p)=ceil(Tp)]
  double upper_bound = 0;     // (1-2p)/sqrt(4p(1-p)T)
};

// p in (0, 1/2), T >= 2. tv_exact is computed from exact pmfs; the
// demoivre_value is the closed-form identity it should match to 1e-10.
TvReport tv_shifted_binomial(int64_t T, double p);

// De Moivre's closed form for E|Bin(T,p) - Tp|:
// 2 * ceil(Tp) * (1-p) * P[Bin(T,p) = ceil(Tp)].
double demoivre_mad(int64_t T, double p);

// Direct-expectation oracle for the same quantity.
double binom_mad_direct(int64_t T, double p);

}  // namespace panpriv
