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

#include "panpriv/group.hpp"
#include "panpriv/rng.hpp"

namespace panpriv {

// Message-in-exponent discrete-log encryption over a prime-order group.
// (c1, c2) = (g^r, g^m * h^r). Rerandomizable ((c1*g^s, c2*h^s)) and
// additively homomorphic in the exponent; decoding is a bounded discrete log.

struct PublicKey {
  GroupPtr spec;
  Elem h;
  // Full power table for h (test groups only); makes rerandomization O(1).
  std::shared_ptr<const std::vector<uint64_t>> hpow;
};

struct PrivateKey {
  GroupPtr spec;
  uint64_t sk_u = 0;  // test backend
  mpz_class sk_z;     // crypto backend
};

struct KeyPair {
  PublicKey pub;
  PrivateKey priv;
};

struct Ciphertext {
  Elem c1, c2;
  // Protocol bookkeeping only; never affects group operations and is
  // excluded from serialization.
  uint64_t rerand_count = 0;
};

KeyPair keygen(GroupPtr spec, Rng& rng);

Ciphertext enc(int64_t m, const PublicKey& pub, Rng& rng);
// Deterministic variant with explicit randomness r in [0, q); used by the
// exhaustive enumeration tests (test groups only).
Ciphertext enc_with_r(int64_t m, const PublicKey& pub, uint64_t r);

Ciphertext rerandomize(const Ciphertext& c, const PublicKey& pub, Rng& rng);
Ciphertext rerandomize_with_s(const Ciphertext& c, const PublicKey& pub,
                              uint64_t s);

// Bounded decoding: returns m in [-bound, bound] with g^m = c2 * c1^{-sk}.
// Throws DecodeRangeError if the exponent is outside the centered range.
int64_t dec(const Ciphertext& c, const PrivateKey& priv, uint64_t bound);

// Raw exponent in [0, q) (test groups only; used for field-element payloads).
uint64_t dec_exponent(const Ciphertext& c, const PrivateKey& priv);

Ciphertext add_ciphertexts(const Ciphertext& a, const Ciphertext& b,
                           const PublicKey& pub);
Ciphertext scalar_mul(int64_t alpha, const Ciphertext& c,
                      const PublicKey& pub);

// Fixed-width state serialization (excludes rerand_count).
void serialize_ciphertext(const Ciphertext& c, const GroupSpec& spec,
                          std::vector<uint8_t>& out);

std::string public_key_to_hex(const PublicKey& pub);
std::string private_key_to_hex(const PrivateKey& priv);
PublicKey public_key_from_hex(const std::string& s);
PrivateKey private_key_from_hex(const std::string& s);

}  // namespace panpriv
