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

#include "panpriv/two_server.hpp"

#include <sstream>

#include "panpriv/errors.hpp"

namespace panpriv {

std::pair<uint64_t, uint64_t> secret_share(uint64_t v, const FieldSpec& field,
                                           Rng& rng) {
  const uint64_t s1 = field.random_elem(rng);
  return {s1, field.sub(v % field.p, s1)};
}

namespace {

std::pair<ProofShare, ProofShare> split_proof(
    uint64_t s1, uint64_t s2, const std::array<uint64_t, 7>& coeff,
    const FieldSpec& field, const std::array<uint64_t, 6>& masks) {
  ProofShare pi1, pi2;
  pi1.w[0] = s1;
  pi2.w[0] = s2;
  for (int i = 1; i < 7; ++i) {
    pi2.w[i] = masks[i - 1];
    pi1.w[i] = field.sub(coeff[i], masks[i - 1]);
  }
  return {pi1, pi2};
}

std::array<uint64_t, 7> proof_coefficients(uint64_t v, uint64_t u, uint64_t w,
                                           const FieldSpec& field) {
  // f(0) = v, f(1) = u, g(0) = v - 1, g(1) = w, h = f * g.
  const uint64_t f0 = v % field.p;
  const uint64_t f1 = field.sub(u, f0);
  const uint64_t g0 = field.sub(f0, 1);
  const uint64_t g1 = field.sub(w, g0);
  const uint64_t h0 = field.mul(f0, g0);
  const uint64_t h1 = field.add(field.mul(f0, g1), field.mul(f1, g0));
  const uint64_t h2 = field.mul(f1, g1);
  return {f0, f1, g0, g1, h0, h1, h2};
}

}  // namespace

std::pair<ProofShare, ProofShare> make_validity_proof(uint64_t v, uint64_t s1,
                                                      uint64_t s2,
                                                      const FieldSpec& field,
                                                      Rng& rng) {
  const uint64_t u = field.random_elem(rng);
  const uint64_t w = field.random_elem(rng);
  std::array<uint64_t, 6> masks;
  for (auto& m : masks) m = field.random_elem(rng);
  return split_proof(s1, s2, proof_coefficients(v, u, w, field), field, masks);
}

std::pair<ProofShare, ProofShare> make_validity_proof_with_masks(
    uint64_t v, uint64_t s1, uint64_t s2, const FieldSpec& field, uint64_t u,
    uint64_t w, const std::array<uint64_t, 6>& masks) {
  return split_proof(s1, s2, proof_coefficients(v, u, w, field), field, masks);
}

ProofEval eval_proof_share(const ProofShare& pi, uint64_t r,
                           const FieldSpec& field) {
  const uint64_t r2 = field.mul(r, r);
  ProofEval e;
  e.f_r = field.add(pi.w[0], field.mul(pi.w[1], r));
  e.g_r = field.add(pi.w[2], field.mul(pi.w[3], r));
  e.h_r = field.add(pi.w[4],
                    field.add(field.mul(pi.w[5], r), field.mul(pi.w[6], r2)));
  e.h_0 = pi.w[4];
  return e;
}

bool verify_shares(uint64_t s1, const ProofShare& pi1, uint64_t s2,
                   const ProofShare& pi2, uint64_t r, const FieldSpec& field) {
  if (pi1.w[0] != s1 || pi2.w[0] != s2) return false;
  const ProofEval e1 = eval_proof_share(pi1, r, field);
  const ProofEval e2 = eval_proof_share(pi2, r, field);
  if (field.add(e1.h_0, e2.h_0) != 0) return false;
  const uint64_t f_r = field.add(e1.f_r, e2.f_r);
  const uint64_t g_r = field.add(e1.g_r, e2.g_r);
  const uint64_t h_r = field.add(e1.h_r, e2.h_r);
  return field.mul(f_r, g_r) == h_r;
}

TsCountClient::TsCountClient(const PublicKey& pub1, const PublicKey& pub2,
                             const FieldSpec& field, int64_t T,
                             const ClientOptions& opt, Rng& rng)
    : pub1_(pub1), pub2_(pub2), field_(field), T_(T), opt_(opt) {
  if (pub1.spec->kind != GroupKind::kTest ||
      pub2.spec->kind != GroupKind::kTest) {
    throw ConfigError("two-server mode needs a test group backend");
  }
  if (pub1.spec->q != field.p || pub2.spec->q != field.p) {
    throw ConfigError(
        "two-server mode needs group order equal to the field modulus");
  }
  set_fresh(0, 0, rng);
  snapshot();
}

void TsCountClient::set_fresh(uint64_t bit, uint64_t rerands, Rng& rng) {
  auto [s1, s2] = secret_share(bit, field_, rng);
  auto [p1, p2] = make_validity_proof(bit, s1, s2, field_, rng);
  auto put = [&](const PublicKey& pub, uint64_t s, const ProofShare& pi,
                 Ciphertext& c, std::array<Ciphertext, 7>& pr) {
    c = enc(static_cast<int64_t>(s), pub, rng);
    c.rerand_count = rerands;
    for (int i = 0; i < 7; ++i) {
      pr[i] = enc(static_cast<int64_t>(pi.w[i]), pub, rng);
      pr[i].rerand_count = rerands;
    }
  };
  put(pub1_, s1, p1, c1_, pr1_);
  put(pub2_, s2, p2, c2_, pr2_);
  if (!opt_.fresh_enc) {
    for (uint64_t t = 0; t < rerands; ++t) rerandomize_all(rng);
  }
}

void TsCountClient::rerandomize_all(Rng& rng) {
  c1_ = rerandomize(c1_, pub1_, rng);
  c2_ = rerandomize(c2_, pub2_, rng);
  for (auto& ct : pr1_) ct = rerandomize(ct, pub1_, rng);
  for (auto& ct : pr2_) ct = rerandomize(ct, pub2_, rng);
}

void TsCountClient::snapshot() {
  if (!opt_.record_trace) return;
  std::vector<uint8_t> blob;
  serialize_ciphertext(c1_, *pub1_.spec, blob);
  for (const auto& ct : pr1_) serialize_ciphertext(ct, *pub1_.spec, blob);
  serialize_ciphertext(c2_, *pub2_.spec, blob);
  for (const auto& ct : pr2_) serialize_ciphertext(ct, *pub2_.spec, blob);
  trace_.add(std::move(blob));
}

void TsCountClient::update(int x_t, Rng& rng) {
  if (step_ >= T_) throw ProtocolError("update past horizon");
  ++step_;
  if (x_t == 1) {
    set_fresh(1, static_cast<uint64_t>(step_), rng);
  } else {
    rerandomize_all(rng);
  }
  snapshot();
}

TsReport TsCountClient::report(const RRParams& rr, Rng& rng) {
  if (step_ != T_) throw ProtocolError("report before the horizon");
  if (!rr.is_noiseless() && !rng.bernoulli(rr.keep_prob)) {
    set_fresh(rng.bit() ? 1 : 0, static_cast<uint64_t>(T_) + 1, rng);
  }
  rerandomize_all(rng);
  TsReport out;
  out.c1 = c1_;
  out.c2 = c2_;
  out.pr1 = pr1_;
  out.pr2 = pr2_;
  return out;
}

std::pair<Ciphertext, Ciphertext> reshare_encrypted(const Ciphertext& c1,
                                                    const Ciphertext& c2,
                                                    const PublicKey& pub1,
                                                    const PublicKey& pub2,
                                                    const FieldSpec& field,
                                                    Rng& rng) {
  if (pub1.spec->q != field.p || pub2.spec->q != field.p) {
    throw ConfigError(
        "encrypted re-sharing needs group order equal to the field modulus");
  }
  const uint64_t r = field.random_elem(rng);
  Ciphertext a = add_ciphertexts(c1, enc(static_cast<int64_t>(r), pub1, rng),
                                 pub1);
  Ciphertext b = add_ciphertexts(
      c2, enc(static_cast<int64_t>(field.neg(r)), pub2, rng), pub2);
  return {a, b};
}

TsAggregateResult ts_aggregate(const std::vector<TsReport>& reports,
                               const PrivateKey& priv1,
                               const PrivateKey& priv2, const RRParams& rr,
                               const FieldSpec& field, Rng& challenge_rng) {
  if (priv1.spec->kind != GroupKind::kTest ||
      priv2.spec->kind != GroupKind::kTest) {
    throw ConfigError("two-server mode needs a test group backend");
  }
  if (priv1.spec->q != field.p || priv2.spec->q != field.p) {
    throw ConfigError(
        "two-server mode needs group order equal to the field modulus");
  }
  if (2 * reports.size() >= field.p) {
    throw ConfigError("field too small for this many clients");
  }
  TsAggregateResult out;
  out.challenge = field.random_challenge(challenge_rng);
  out.accepted.resize(reports.size(), false);
  uint64_t a1 = 0, a2 = 0;
  std::ostringstream log;
  for (size_t i = 0; i < reports.size(); ++i) {
    const TsReport& rep = reports[i];
    const uint64_t s1 = dec_exponent(rep.c1, priv1);
    const uint64_t s2 = dec_exponent(rep.c2, priv2);
    ProofShare pi1, pi2;
    for (int j = 0; j < 7; ++j) {
      pi1.w[j] = dec_exponent(rep.pr1[j], priv1);
      pi2.w[j] = dec_exponent(rep.pr2[j], priv2);
    }
    const bool ok = verify_shares(s1, pi1, s2, pi2, out.challenge, field);
    out.accepted[i] = ok;
    if (ok) {
      a1 = field.add(a1, s1);
      a2 = field.add(a2, s2);
      ++out.estimate.accepted;
    } else {
      ++out.estimate.rejected;
    }
    log << "{\"client\":" << i << ",\"accept\":" << (ok ? "true" : "false")
        << ",\"challenge\":" << out.challenge << "}\n";
  }
  out.transcript_jsonl = log.str();
  // Sum of accepted bits; < p/2 by the size check, so the residue is exact.
  const uint64_t sum = field.add(a1, a2);
  out.estimate.n = out.estimate.accepted;
  out.estimate.eps0 = rr.eps0;
  out.estimate.estimate =
      debias_count(static_cast<int64_t>(sum), out.estimate.n, rr);
  return out;
}

}  // namespace panpriv
