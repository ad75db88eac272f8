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

#include "panpriv/dp.hpp"
#include "panpriv/elgamal.hpp"

namespace panpriv {

// What a continuous intruder sees: one serialized state blob per step plus
// the initial state. rerand_count is bookkeeping and is not serialized.
class StateTrace {
 public:
  void add(std::vector<uint8_t> blob) { snapshots_.push_back(std::move(blob)); }
  size_t size() const { return snapshots_.size(); }
  const std::vector<uint8_t>& blob(size_t i) const { return snapshots_[i]; }
  // JSON lines: {"step":..,"blob_size":..,"blob_hash":".."}
  std::string dump_jsonl() const;

 private:
  std::vector<std::vector<uint8_t>> snapshots_;
};

uint64_t fnv1a64(const std::vector<uint8_t>& bytes);

// Structural comparison of two traces: same length, same per-snapshot sizes.
// Returns -1 if structurally identical, else the first differing step.
int64_t trace_structural_diff(const StateTrace& a, const StateTrace& b);

struct ClientOptions {
  // Replace rerandomize^t(enc(b)) by a fresh enc(b); the two have identical
  // distributions in this scheme. Default on for the crypto group, off for
  // test groups so the literal update rule is exercised too.
  bool fresh_enc = true;
  bool record_trace = false;

  static ClientOptions defaults_for(const GroupSpec& spec);
};

// CountNonZero client: state is one ciphertext holding the running OR bit.
class CountClient {
 public:
  CountClient(const PublicKey& pub, int64_t T, const ClientOptions& opt,
              Rng& rng);

  void update(int x_t, Rng& rng);
  // Randomized response applied under the encryption; step must equal T.
  Ciphertext report(const RRParams& rr, Rng& rng);

  int64_t step() const { return step_; }
  int64_t horizon() const { return T_; }
  const Ciphertext& state() const { return c_; }
  const StateTrace& trace() const { return trace_; }
  const PublicKey& pub() const { return pub_; }

 private:
  void snapshot();

  PublicKey pub_;
  int64_t T_;
  int64_t step_ = 0;
  ClientOptions opt_;
  Ciphertext c_;
  StateTrace trace_;
};

// Histogram client: c_i encrypts 1(count = i), d_i encrypts 1(count >= i),
// for i in [0, k]. Events shift both registers.
class HistClient {
 public:
  HistClient(const PublicKey& pub, int64_t k, int64_t T,
             const ClientOptions& opt, Rng& rng);

  void update(int x_t, Rng& rng);
  // Reports (c_0..c_{k-1}, d_k), each through the encrypted RR branch.
  std::vector<Ciphertext> report(const RRParams& rr, Rng& rng);
  // Averaging variant: homomorphic sum of i * c_i plus discrete Gaussian
  // noise; decrypts to min(count, k) + noise.
  Ciphertext report_average(const NoiseParams& noise, Rng& rng);

  int64_t step() const { return step_; }
  int64_t k() const { return k_; }
  const std::vector<Ciphertext>& c() const { return c_; }
  const std::vector<Ciphertext>& d() const { return d_; }
  const StateTrace& trace() const { return trace_; }

 private:
  void snapshot();
  Ciphertext fresh_state(int64_t bit, uint64_t rerands, Rng& rng);

  PublicKey pub_;
  int64_t k_, T_;
  int64_t step_ = 0;
  ClientOptions opt_;
  std::vector<Ciphertext> c_, d_;
  StateTrace trace_;
};

// Length-prefixed report serialization (binary; hex is the hex encoding of
// the same bytes).
std::vector<uint8_t> serialize_report_list(const std::vector<Ciphertext>& cts,
                                           const GroupSpec& spec);
std::vector<Ciphertext> parse_report_list(const std::vector<uint8_t>& bytes,
                                          const GroupSpec& spec);
std::string to_hex(const std::vector<uint8_t>& bytes);
std::vector<uint8_t> from_hex(const std::string& s);

}  // namespace panpriv
