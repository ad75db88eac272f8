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

#include <map>

#include "doctest.h"
#include "panpriv/errors.hpp"
#include "panpriv/two_server.hpp"

using namespace panpriv;

TEST_CASE("secret shares reconstruct") {
  const FieldSpec field(101);
  Rng rng(70);
  for (uint64_t v = 0; v < 5; ++v) {
    auto [s1, s2] = secret_share(v, field, rng);
    CHECK(field.add(s1, s2) == v);
  }
  CHECK_THROWS_AS(FieldSpec(100), ConfigError);
}

TEST_CASE("validity proof completeness") {
  const FieldSpec field(101);
  Rng rng(71);
  for (uint64_t v : {0ULL, 1ULL}) {
    for (int trial = 0; trial < 50; ++trial) {
      auto [s1, s2] = secret_share(v, field, rng);
      auto [p1, p2] = make_validity_proof(v, s1, s2, field, rng);
      for (uint64_t r = 1; r < field.p; ++r) {
        CHECK(verify_shares(s1, p1, s2, p2, r, field));
      }
    }
  }
}

TEST_CASE("validity proof soundness for non-bits") {
  const FieldSpec field(101);
  Rng rng(72);
  // v = 5: h(0) = 5*4 != 0, rejected at every challenge
  auto [s1, s2] = secret_share(5, field, rng);
  auto [p1, p2] = make_validity_proof(5, s1, s2, field, rng);
  for (uint64_t r = 1; r < field.p; ++r) {
    CHECK_FALSE(verify_shares(s1, p1, s2, p2, r, field));
  }
}

TEST_CASE("validity proof soundness for tampered h") {
  const FieldSpec field(101);
  Rng rng(73);
  int64_t accepts = 0, total = 0;
  for (int trial = 0; trial < 20; ++trial) {
    auto [s1, s2] = secret_share(1, field, rng);
    auto [p1, p2] = make_validity_proof(1, s1, s2, field, rng);
    // tamper with the h1 coefficient share: f*g != h as polynomials, so at
    // most deg(h) = 2 challenges can still verify
    p1.w[5] = field.add(p1.w[5], 1 + rng.below(field.p - 1));
    for (uint64_t r = 1; r < field.p; ++r) {
      accepts += verify_shares(s1, p1, s2, p2, r, field);
      ++total;
    }
  }
  CHECK(accepts <= total * 2 / 100);
}

TEST_CASE("mismatched data shares are rejected") {
  const FieldSpec field(101);
  Rng rng(74);
  auto [s1, s2] = secret_share(1, field, rng);
  auto [p1, p2] = make_validity_proof(1, s1, s2, field, rng);
  CHECK_FALSE(verify_shares(field.add(s1, 1), p1, s2, p2, 7, field));
}

TEST_CASE("server-1 view is identically distributed for v=0 and v=1") {
  // Full enumeration in F_5: view = (s1, pi1). The non-f0 coordinates are
  // coefficient minus an independent uniform mask, so the joint view is
  // uniform regardless of v; verified exhaustively.
  const FieldSpec field(5);
  const uint64_t p = field.p;
  std::map<std::array<uint64_t, 7>, uint64_t> view[2];
  for (uint64_t v = 0; v <= 1; ++v) {
    for (uint64_t s1 = 0; s1 < p; ++s1) {
      const uint64_t s2 = field.sub(v, s1);
      for (uint64_t u = 0; u < p; ++u) {
        for (uint64_t w = 0; w < p; ++w) {
          std::array<uint64_t, 6> masks{};
          for (;;) {
            auto [p1, p2] =
                make_validity_proof_with_masks(v, s1, s2, field, u, w, masks);
            ++view[v][p1.w];
            // odometer over the 6 masks
            size_t i = 0;
            while (i < masks.size() && ++masks[i] == p) masks[i++] = 0;
            if (i == masks.size()) break;
          }
        }
      }
    }
  }
  REQUIRE(view[0].size() == view[1].size());
  auto it0 = view[0].begin();
  auto it1 = view[1].begin();
  for (; it0 != view[0].end(); ++it0, ++it1) {
    CHECK(it0->first == it1->first);
    CHECK(it0->second == it1->second);
  }
}

TEST_CASE("two-server count client end to end") {
  auto spec = GroupSpec::test(101);
  Rng rng(75);
  const KeyPair k1 = keygen(spec, rng);
  const KeyPair k2 = keygen(spec, rng);
  const FieldSpec field(101);
  ClientOptions opt;
  const RRParams rr = RRParams::noiseless();

  std::vector<TsReport> reports;
  int64_t truth = 0;
  for (int i = 0; i < 40; ++i) {
    TsCountClient client(k1.pub, k2.pub, field, 4, opt, rng);
    int any = 0;
    for (int t = 0; t < 4; ++t) {
      const int x = rng.bernoulli(0.3) ? 1 : 0;
      any |= x;
      client.update(x, rng);
    }
    truth += any;
    reports.push_back(client.report(rr, rng));
  }
  Rng challenge(76);
  const TsAggregateResult agg =
      ts_aggregate(reports, k1.priv, k2.priv, rr, field, challenge);
  CHECK(agg.estimate.accepted == 40);
  CHECK(agg.estimate.rejected == 0);
  CHECK(agg.estimate.estimate == doctest::Approx(static_cast<double>(truth)));
  CHECK(agg.transcript_jsonl.find("\"accept\":true") != std::string::npos);
}

TEST_CASE("malicious share bundles are dropped") {
  auto spec = GroupSpec::test(101);
  Rng rng(77);
  const KeyPair k1 = keygen(spec, rng);
  const KeyPair k2 = keygen(spec, rng);
  const FieldSpec field(101);
  ClientOptions opt;
  const RRParams rr = RRParams::noiseless();

  std::vector<TsReport> reports;
  for (int i = 0; i < 10; ++i) {
    TsCountClient client(k1.pub, k2.pub, field, 2, opt, rng);
    client.update(1, rng);
    client.update(0, rng);
    reports.push_back(client.report(rr, rng));
  }
  // cheater claims v = 30 with an honest-shaped proof for it
  auto [s1, s2] = secret_share(30, field, rng);
  auto [p1, p2] = make_validity_proof(30, s1, s2, field, rng);
  TsReport bad;
  bad.c1 = enc(static_cast<int64_t>(s1), k1.pub, rng);
  bad.c2 = enc(static_cast<int64_t>(s2), k2.pub, rng);
  for (int j = 0; j < 7; ++j) {
    bad.pr1[j] = enc(static_cast<int64_t>(p1.w[j]), k1.pub, rng);
    bad.pr2[j] = enc(static_cast<int64_t>(p2.w[j]), k2.pub, rng);
  }
  reports.push_back(bad);

  Rng challenge(78);
  const TsAggregateResult agg =
      ts_aggregate(reports, k1.priv, k2.priv, rr, field, challenge);
  CHECK(agg.estimate.accepted == 10);
  CHECK(agg.estimate.rejected == 1);
  CHECK_FALSE(agg.accepted.back());
  CHECK(agg.estimate.estimate == doctest::Approx(10.0));
}

TEST_CASE("encrypted re-sharing preserves the share sum") {
  auto spec = GroupSpec::test(101);
  Rng rng(79);
  const KeyPair k1 = keygen(spec, rng);
  const KeyPair k2 = keygen(spec, rng);
  const FieldSpec field(101);
  for (int trial = 0; trial < 30; ++trial) {
    const uint64_t v = rng.below(101);
    auto [s1, s2] = secret_share(v, field, rng);
    const Ciphertext c1 = enc(static_cast<int64_t>(s1), k1.pub, rng);
    const Ciphertext c2 = enc(static_cast<int64_t>(s2), k2.pub, rng);
    auto [r1, r2] = reshare_encrypted(c1, c2, k1.pub, k2.pub, field, rng);
    const uint64_t t1 = dec_exponent(r1, k1.priv);
    const uint64_t t2 = dec_exponent(r2, k2.priv);
    CHECK(field.add(t1, t2) == v);
  }
}

TEST_CASE("two-server configuration guards") {
  auto spec = GroupSpec::test(101);
  Rng rng(80);
  const KeyPair k1 = keygen(spec, rng);
  const KeyPair k2 = keygen(spec, rng);
  ClientOptions opt;
  const FieldSpec wrong(FieldSpec::kDefaultPrime);
  CHECK_THROWS_AS(TsCountClient(k1.pub, k2.pub, wrong, 4, opt, rng),
                  ConfigError);
}
