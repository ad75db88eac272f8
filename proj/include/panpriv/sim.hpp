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
#include <string>
#include <vector>

#include "panpriv/field.hpp"
#include "panpriv/group.hpp"
#include "panpriv/rng.hpp"

namespace panpriv {

enum class Protocol { kCount, kHistogram, kMean, kCountTwoServer };

Protocol protocol_from_string(const std::string& s);
std::string protocol_to_string(Protocol p);

struct StreamGenSpec {
  enum class Kind { kBernoulli, kAtMostOne, kFixedCount, kAdversarialFile };
  Kind kind = Kind::kBernoulli;
  double q = 0.1;    // per-step event probability (bernoulli, at-most-one)
  int64_t m = 0;     // fixed-count
  std::string path;  // adversarial-file: newline-delimited bit strings

  // "bernoulli:0.1", "at-most-one:0.5", "fixed-count:3", "file:streams.txt"
  static StreamGenSpec parse(const std::string& s);
  std::string to_string() const;
};

// One client's input stream of length T; client i of an adversarial file
// reads line i mod #lines.
std::vector<int> generate_stream(const StreamGenSpec& spec, int64_t T,
                                 Rng& rng, int64_t client_id);

struct ExperimentConfig {
  Protocol protocol = Protocol::kCount;
  int64_t n = 1000;
  int64_t T = 20;
  int64_t k = 8;  // histogram / mean truncation bound
  // Report noise: eps0 directly, or (eps, delta) with eps0 derived by the
  // aggregator rule. eps0 = infinity means noiseless.
  double eps0 = 1.0;
  bool eps0_is_set = true;
  double eps = 1.0;
  double delta = 1e-6;
  double variance = -1;  // mean protocol; < 0 = calibrate from (eps, delta)
  std::string group = "test65521";
  uint64_t field = 0;  // 0 = group order (two-server)
  StreamGenSpec stream;
  uint64_t seed = 1;
  int64_t trials = 1;
  bool parallel = true;

  void validate() const;
};

struct TrialRecord {
  double true_value = 0;
  double estimate = 0;
  double abs_error = 0;
  int64_t accepted = 0, rejected = 0;  // two-server only
  // histogram: per-bucket values instead of scalars
  std::vector<double> true_buckets, estimate_buckets;
};

struct ExperimentResult {
  ExperimentConfig config;
  std::vector<TrialRecord> trials;
  double mean_abs_error = 0;
  double wall_seconds = 0;
  std::string to_json() const;  // schema_version tagged
};

ExperimentResult run_experiment(const ExperimentConfig& config);

// Intrusion checks: run two explicit streams through the same protocol and
// compare the full state traces an intruder would see.
struct IntrusionConfig {
  Protocol protocol = Protocol::kCount;
  std::string group = "crypto-default";
  std::vector<int> stream_a, stream_b;
  int64_t k = 4;
  uint64_t seed = 1;
  // Exact trace-distribution comparison by exhaustive enumeration over all
  // randomness; test groups only, count protocol, T <= 3.
  bool check_distribution = false;
  // Negative control: a broken client whose state includes the plaintext
  // running bit.
  bool leaky_client = false;
};

struct IntrusionReport {
  bool structural_pass = false;
  int64_t first_diff = -1;  // first structurally differing step, -1 if none
  bool distribution_checked = false;
  bool distribution_pass = false;
  // Joint distribution of ciphertext first components only (the g^r parts).
  bool first_component_pass = false;
  std::string detail;
  std::string to_json() const;
};

IntrusionReport run_intrusion_check(const IntrusionConfig& config);

// CSV: T,eps,p,tv_exact,demoivre,upper_bound,empirical_tv,ci_low,ci_high
std::string run_lowerbound_table(const std::vector<int64_t>& T_list,
                                 const std::vector<double>& eps_list,
                                 int64_t trials, uint64_t seed);

}  // namespace panpriv
