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

#include "panpriv/rng.hpp"

namespace panpriv {

// Information-theoretic baseline: the client state at step t is the list of
// per-step randomized responses (RR applied to each x_t on arrival). This is
// pan-private only for the admissible at-most-one-1 stream class, which is
// exactly the instance class of the lower bound; do not feed it general
// streams and call the trace private.
class BaselineClient {
 public:
  BaselineClient(int64_t T, double eps);

  void update(int x_t, Rng& rng);
  int64_t count_ones() const;
  int64_t step() const { return static_cast<int64_t>(responses_.size()); }
  const std::vector<uint8_t>& responses() const { return responses_; }
  double flip_prob() const { return p_; }

 private:
  int64_t T_;
  double p_;  // 1/(e^eps + 1)
  std::vector<uint8_t> responses_;
};

struct DistinguisherResult {
  int64_t T = 0;
  double eps = 0;
  int64_t trials = 0;
  double tv = 0;
  double ci_low = 0, ci_high = 0;  // bootstrap 95%
};

// Empirical total variation between the baseline client's 1-response counts
// on the all-zero stream and on a stream with a single 1 at a uniform step.
DistinguisherResult run_distinguisher_experiment(int64_t T, double eps,
                                                 int64_t trials, Rng& rng);

// Best-threshold decoder for CountNonZero from baseline outputs: theta
// maximizing P[count >= theta | event] - P[count >= theta | no event],
// with both probabilities from exact binomial pmfs.
struct ThresholdDecoder {
  int64_t theta = 0;
  double p0 = 0;  // P[count >= theta], no event
  double p1 = 0;  // P[count >= theta], one event
};

ThresholdDecoder best_threshold(int64_t T, double eps);

// Mean absolute CountNonZero error of n baseline clients over the given
// number of trials. Each client independently has one event (uniform step)
// with probability event_prob; the true statistic is the event count.
double baseline_estimate_error(int64_t n, int64_t T, double eps,
                               double event_prob, int64_t trials, Rng& rng);

}  // namespace panpriv
