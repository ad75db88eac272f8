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

#include "panpriv/reduction.hpp"

#include <cmath>

#include "panpriv/client.hpp"
#include "panpriv/errors.hpp"
#include "panpriv/server.hpp"

namespace panpriv {

namespace {

class ConcreteClient : public CountPipelineClient {
 public:
  ConcreteClient(const PublicKey& pub, int64_t T, const RRParams& rr,
                 const ClientOptions& opt, Rng& rng)
      : rr_(rr), client_(pub, T, opt, rng) {}

  void update(int x_t, Rng& rng) override { client_.update(x_t, rng); }

  std::vector<uint8_t> report(Rng& rng) override {
    return serialize_report_list({client_.report(rr_, rng)},
                                 *client_.pub().spec);
  }

  std::unique_ptr<CountPipelineClient> clone() const override {
    return std::make_unique<ConcreteClient>(*this);
  }

  std::vector<uint8_t> state_blob() const override {
    std::vector<uint8_t> blob;
    serialize_ciphertext(client_.state(), *client_.pub().spec, blob);
    return blob;
  }

 private:
  RRParams rr_;
  CountClient client_;
};

class ConcreteFactory : public CountPipelineFactory {
 public:
  ConcreteFactory(GroupPtr spec, int64_t T, const RRParams& rr,
                  uint64_t key_seed)
      : spec_(std::move(spec)), T_(T), rr_(rr) {
    Rng key_rng(key_seed);
    keys_ = keygen(spec_, key_rng);
    opt_ = ClientOptions::defaults_for(*spec_);
  }

  std::unique_ptr<CountPipelineClient> init(Rng& rng) const override {
    return std::make_unique<ConcreteClient>(keys_.pub, T_, rr_, opt_, rng);
  }

  double estimate(
      const std::vector<std::vector<uint8_t>>& reports) const override {
    std::vector<Ciphertext> cts;
    cts.reserve(reports.size());
    for (const auto& blob : reports) {
      auto list = parse_report_list(blob, *spec_);
      if (list.size() != 1) throw ConfigError("expected one ciphertext");
      cts.push_back(std::move(list[0]));
    }
    return estimate_count(cts, keys_.priv, rr_).estimate;
  }

  int64_t horizon() const override { return T_; }

 private:
  GroupPtr spec_;
  int64_t T_;
  RRParams rr_;
  KeyPair keys_;
  ClientOptions opt_;
};

}  // namespace

std::shared_ptr<const CountPipelineFactory> make_count_pipeline(
    const std::string& group_preset, int64_t T, double eps0,
    uint64_t key_seed) {
  if (T < 1) throw ParameterError("T must be >= 1");
  const RRParams rr = std::isinf(eps0) ? RRParams::noiseless()
                                       : RRParams::from_eps0(eps0);
  return std::make_shared<ConcreteFactory>(GroupSpec::preset(group_preset), T,
                                           rr, key_seed);
}

ReducedKeys reduced_keygen(
    std::shared_ptr<const CountPipelineFactory> pipeline, int64_t n,
    Rng& rng) {
  if (n < 1) throw ParameterError("n must be >= 1");
  ReducedKeys keys;
  keys.n = n;
  keys.T = pipeline->horizon();
  keys.pipeline = std::move(pipeline);
  keys.s0.reserve(n);
  for (int64_t i = 0; i < n; ++i) keys.s0.push_back(keys.pipeline->init(rng));
  return keys;
}

ReducedCiphertext reduced_enc(int b, const ReducedKeys& keys, Rng& rng) {
  if (b != 0 && b != 1) throw ParameterError("plaintext must be a bit");
  ReducedCiphertext c;
  c.t = 1;
  c.states.reserve(keys.s0.size());
  for (const auto& s : keys.s0) {
    auto st = s->clone();
    st->update(b, rng);
    c.states.push_back(std::move(st));
  }
  return c;
}

ReducedCiphertext reduced_rerandomize(const ReducedCiphertext& c,
                                      const ReducedKeys& keys, Rng& rng) {
  if (c.t >= keys.T) throw ProtocolError("ciphertext step counter at horizon");
  ReducedCiphertext out;
  out.t = c.t + 1;
  out.states.reserve(c.states.size());
  for (const auto& s : c.states) {
    auto st = s->clone();
    st->update(0, rng);
    out.states.push_back(std::move(st));
  }
  return out;
}

int reduced_dec(const ReducedCiphertext& c, const ReducedKeys& keys,
                Rng& rng) {
  if (c.t < 1 || c.t > keys.T) throw ProtocolError("invalid step counter");
  if (static_cast<int64_t>(c.states.size()) != keys.n) {
    throw ProtocolError("wrong number of client states");
  }
  std::vector<std::vector<uint8_t>> reports;
  reports.reserve(c.states.size());
  for (const auto& s : c.states) {
    auto st = s->clone();
    for (int64_t t = c.t; t < keys.T; ++t) st->update(0, rng);
    reports.push_back(st->report(rng));
  }
  const double est = keys.pipeline->estimate(reports);
  return est < static_cast<double>(keys.n) / 2.0 ? 0 : 1;
}

}  // namespace panpriv
