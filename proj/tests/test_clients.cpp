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

#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "panpriv/client.hpp"
#include "panpriv/errors.hpp"

using namespace panpriv;

namespace {

KeyPair test_keys(uint64_t seed, uint64_t q = 101) {
  Rng rng(seed);
  return keygen(GroupSpec::test(q), rng);
}

}  // namespace

TEST_CASE("count client computes the running OR") {
  const KeyPair keys = test_keys(30);
  const RRParams rr = RRParams::noiseless();
  for (bool fresh : {false, true}) {
    ClientOptions opt;
    opt.fresh_enc = fresh;
    Rng rng(31);
    for (int pattern = 0; pattern < 16; ++pattern) {
      CountClient client(keys.pub, 4, opt, rng);
      for (int t = 0; t < 4; ++t) client.update((pattern >> t) & 1, rng);
      const Ciphertext rep = client.report(rr, rng);
      CHECK(dec(rep, keys.priv, 1) == (pattern != 0 ? 1 : 0));
    }
  }
}

TEST_CASE("count client state machine guards") {
  const KeyPair keys = test_keys(32);
  Rng rng(33);
  ClientOptions opt;
  CountClient client(keys.pub, 2, opt, rng);
  CHECK_THROWS_AS(client.report(RRParams::noiseless(), rng), ProtocolError);
  client.update(0, rng);
  client.update(1, rng);
  CHECK_THROWS_AS(client.update(0, rng), ProtocolError);
  CHECK(client.report(RRParams::noiseless(), rng).rerand_count >= 1);
}

TEST_CASE("count client trace shape") {
  const KeyPair keys = test_keys(34);
  Rng rng(35);
  ClientOptions opt;
  opt.record_trace = true;
  CountClient a(keys.pub, 5, opt, rng);
  CountClient b(keys.pub, 5, opt, rng);
  for (int t = 0; t < 5; ++t) {
    a.update(0, rng);
    b.update(1, rng);
  }
  CHECK(a.trace().size() == 6);
  CHECK(trace_structural_diff(a.trace(), b.trace()) == -1);
}

TEST_CASE("rerand_count bookkeeping matches the step count") {
  const KeyPair keys = test_keys(36);
  for (bool fresh : {false, true}) {
    ClientOptions opt;
    opt.fresh_enc = fresh;
    Rng rng(37);
    CountClient client(keys.pub, 6, opt, rng);
    std::vector<int> x = {0, 0, 1, 0, 0, 0};
    for (size_t t = 0; t < x.size(); ++t) client.update(x[t], rng);
    // event at step 3: state was replaced by rerandomize^3(enc(1)), then
    // rerandomized three more times
    CHECK(client.state().rerand_count == 6);
  }
}

TEST_CASE("histogram client registers") {
  const KeyPair keys = test_keys(38);
  const int64_t k = 4, T = 6;
  Rng rng(39);
  ClientOptions opt;
  for (int trial = 0; trial < 20; ++trial) {
    HistClient client(keys.pub, k, T, opt, rng);
    int64_t count = 0;
    for (int64_t t = 0; t < T; ++t) {
      const int x = rng.bernoulli(0.4) ? 1 : 0;
      count += x;
      client.update(x, rng);
    }
    const int64_t clipped = std::min(count, k);
    int64_t ones = 0;
    for (int64_t i = 0; i <= k; ++i) {
      const int64_t ci = dec(client.c()[i], keys.priv, 1);
      const int64_t di = dec(client.d()[i], keys.priv, 1);
      ones += ci;
      CHECK(ci == (clipped == i ? 1 : 0));
      CHECK(di == (clipped >= i ? 1 : 0));
    }
    CHECK(ones == 1);  // the c-register is one-hot
  }
}

TEST_CASE("histogram report decrypts to indicator vector") {
  const KeyPair keys = test_keys(40);
  const int64_t k = 3, T = 5;
  Rng rng(41);
  ClientOptions opt;
  HistClient client(keys.pub, k, T, opt, rng);
  const std::vector<int> x = {1, 0, 1, 0, 0};  // count 2
  for (int v : x) client.update(v, rng);
  const auto rep = client.report(RRParams::noiseless(), rng);
  REQUIRE(rep.size() == static_cast<size_t>(k + 1));
  // (c_0, c_1, c_2, d_3) for count 2: (0, 0, 1, 0)
  CHECK(dec(rep[0], keys.priv, 1) == 0);
  CHECK(dec(rep[1], keys.priv, 1) == 0);
  CHECK(dec(rep[2], keys.priv, 1) == 1);
  CHECK(dec(rep[3], keys.priv, 1) == 0);
}

TEST_CASE("averaging report equals clipped count at zero variance") {
  const KeyPair keys = test_keys(42, 65521);
  const int64_t k = 8, T = 12;
  Rng rng(43);
  ClientOptions opt;
  NoiseParams noise;
  noise.k = k;
  noise.sigma2 = 0;
  for (int trial = 0; trial < 10; ++trial) {
    HistClient client(keys.pub, k, T, opt, rng);
    int64_t count = 0;
    for (int64_t t = 0; t < T; ++t) {
      const int x = rng.bernoulli(0.5) ? 1 : 0;
      count += x;
      client.update(x, rng);
    }
    const Ciphertext avg = client.report_average(noise, rng);
    CHECK(dec(avg, keys.priv, k) == std::min(count, k));
  }
}

TEST_CASE("count report applies randomized response") {
  const KeyPair keys = test_keys(44);
  const RRParams rr = RRParams::from_eps0(1.0);
  Rng rng(45);
  ClientOptions opt;
  const int64_t trials = 20000;
  int64_t ones = 0;
  for (int64_t i = 0; i < trials; ++i) {
    CountClient client(keys.pub, 1, opt, rng);
    client.update(1, rng);
    ones += dec(client.report(rr, rng), keys.priv, 1);
  }
  const double freq = static_cast<double>(ones) / trials;
  const double expected = 1 - rr.flip_q;
  CHECK(std::abs(freq - expected) < 0.01);
}
