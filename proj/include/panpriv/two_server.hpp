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

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "panpriv/client.hpp"
#include "panpriv/field.hpp"
#include "panpriv/server.hpp"

namespace panpriv {

// Two-server model: additive secret shares over Z_p, each share encrypted
// under its server's key, plus a secret-shared validity proof that the
// shared value is a bit. The proof is the one-multiplication-gate special
// case of a secret-shared polynomial-identity proof: degree-1 polynomials f,
// g with f(0) = v, g(0) = v - 1 and uniform values at 1, and h = f * g. The
// servers jointly check h(0) = 0 and f(r)g(r) = h(r) at a random challenge.

// Additive shares of the 7 polynomial coefficients (f0, f1, g0, g1, h0, h1,
// h2). The f0 share of server i is the data share s_i itself.
struct ProofShare {
  std::array<uint64_t, 7> w{};
};

std::pair<uint64_t, uint64_t> secret_share(uint64_t v, const FieldSpec& field,
                                           Rng& rng);

std::pair<ProofShare, ProofShare> make_validity_proof(uint64_t v, uint64_t s1,
                                                      uint64_t s2,
                                                      const FieldSpec& field,
                                                      Rng& rng);
// Deterministic variant for the exhaustive zero-knowledge tests: u = f(1),
// w = g(1), and the 6 additive masks for the non-f0 coefficients of the
// second share.
std::pair<ProofShare, ProofShare> make_validity_proof_with_masks(
    uint64_t v, uint64_t s1, uint64_t s2, const FieldSpec& field, uint64_t u,
    uint64_t w, const std::array<uint64_t, 6>& masks);

// One server's evaluation shares at challenge r; these are what crosses the
// wire during verification. f(0) never does.
struct ProofEval {
  uint64_t f_r = 0, g_r = 0, h_r = 0, h_0 = 0;
};

ProofEval eval_proof_share(const ProofShare& pi, uint64_t r,
                           const FieldSpec& field);

// Joint verification (the simulated two-party exchange): accept iff
// h(0) = 0, f(r) * g(r) = h(r), and each server's f0 share equals its data
// share.
bool verify_shares(uint64_t s1, const ProofShare& pi1, uint64_t s2,
                   const ProofShare& pi2, uint64_t r, const FieldSpec& field);

// Wire format of one client's message: (c1, pr1, c2, pr2).
struct TsReport {
  Ciphertext c1, c2;
  std::array<Ciphertext, 7> pr1, pr2;
};

// Two-server CountNonZero client. Requires a test group whose order equals
// the field modulus so that share-valued exponents decode exactly.
class TsCountClient {
 public:
  TsCountClient(const PublicKey& pub1, const PublicKey& pub2,
                const FieldSpec& field, int64_t T, const ClientOptions& opt,
                Rng& rng);

  void update(int x_t, Rng& rng);
  TsReport report(const RRParams& rr, Rng& rng);

  int64_t step() const { return step_; }
  const StateTrace& trace() const { return trace_; }
  const Ciphertext& c1() const { return c1_; }
  const Ciphertext& c2() const { return c2_; }
  const std::array<Ciphertext, 7>& pr1() const { return pr1_; }
  const std::array<Ciphertext, 7>& pr2() const { return pr2_; }

 private:
  void set_fresh(uint64_t bit, uint64_t rerands, Rng& rng);
  void rerandomize_all(Rng& rng);
  void snapshot();

  PublicKey pub1_, pub2_;
  FieldSpec field_;
  int64_t T_;
  int64_t step_ = 0;
  ClientOptions opt_;
  Ciphertext c1_, c2_;
  std::array<Ciphertext, 7> pr1_{}, pr2_{};
  StateTrace trace_;
};

// Homomorphic re-sharing: adds encryptions of (r, -r) so each share marginal
// is fresh-uniform while the share sum is preserved.
std::pair<Ciphertext, Ciphertext> reshare_encrypted(const Ciphertext& c1,
                                                    const Ciphertext& c2,
                                                    const PublicKey& pub1,
                                                    const PublicKey& pub2,
                                                    const FieldSpec& field,
                                                    Rng& rng);

struct TsAggregateResult {
  CountEstimate estimate;
  uint64_t challenge = 0;
  std::vector<bool> accepted;
  std::string transcript_jsonl;  // one line per client: id, accept, challenge
};

// Verifies every bundle at a shared random challenge, drops rejected
// clients, and de-biases the accepted share sum.
TsAggregateResult ts_aggregate(const std::vector<TsReport>& reports,
                               const PrivateKey& priv1,
                               const PrivateKey& priv2, const RRParams& rr,
                               const FieldSpec& field, Rng& challenge_rng);

}  // namespace panpriv
