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
#include <memory>
#include <string>
#include <vector>

#include "panpriv/rng.hpp"

namespace panpriv {

// Bit encryption built from a pan-private CountNonZero pipeline. The
// construction touches the pipeline only through these opaque interfaces;
// no group or ciphertext types appear below, only byte blobs.

class CountPipelineClient {
 public:
  virtual ~CountPipelineClient() = default;
  virtual void update(int x_t, Rng& rng) = 0;
  virtual std::vector<uint8_t> report(Rng& rng) = 0;
  virtual std::unique_ptr<CountPipelineClient> clone() const = 0;
  virtual std::vector<uint8_t> state_blob() const = 0;
};

class CountPipelineFactory {
 public:
  virtual ~CountPipelineFactory() = default;
  // Public operation: fresh client at step 0.
  virtual std::unique_ptr<CountPipelineClient> init(Rng& rng) const = 0;
  // Private operation: de-biased count estimate from serialized reports.
  virtual double estimate(
      const std::vector<std::vector<uint8_t>>& reports) const = 0;
  virtual int64_t horizon() const = 0;
};

// The library's own single-server count pipeline behind the interface.
// eps0 = infinity gives noiseless reports and a deterministic decryptor.
std::shared_ptr<const CountPipelineFactory> make_count_pipeline(
    const std::string& group_preset, int64_t T, double eps0,
    uint64_t key_seed);

struct ReducedKeys {
  std::shared_ptr<const CountPipelineFactory> pipeline;
  int64_t n = 0;
  int64_t T = 0;
  // Public half: the n initial client states. The estimate() method of the
  // pipeline is the private half.
  std::vector<std::unique_ptr<CountPipelineClient>> s0;
};

struct ReducedCiphertext {
  int64_t t = 0;  // in [1, T]
  std::vector<std::unique_ptr<CountPipelineClient>> states;
};

ReducedKeys reduced_keygen(
    std::shared_ptr<const CountPipelineFactory> pipeline, int64_t n,
    Rng& rng);

// One simulated step on every initial state with input b.
ReducedCiphertext reduced_enc(int b, const ReducedKeys& keys, Rng& rng);

// One zero-step on every state; rejects at t >= T.
ReducedCiphertext reduced_rerandomize(const ReducedCiphertext& c,
                                      const ReducedKeys& keys, Rng& rng);

// Zero-steps to the horizon, reports, estimates, thresholds at n/2.
int reduced_dec(const ReducedCiphertext& c, const ReducedKeys& keys, Rng& rng);

}  // namespace panpriv
