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

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "panpriv/rng.hpp"

namespace panpriv {

enum class GroupKind { kTest, kCrypto };

// An element of the prime-order subgroup. For a test group the value is a
// 64-bit residue mod p; for the crypto group it is a GMP integer (held behind
// a shared_ptr so test-path elements stay cheap to copy).
struct Elem {
  uint64_t u = 0;
  std::shared_ptr<const mpz_class> z;
};

// A prime-order cyclic group G = <g> of order q, realized as a subgroup of
// Z_p^*.  Two backends:
//   * kTest: q <= 2^16. Everything is enumerable; the group keeps a full power
//     table for g and a full discrete-log table over Z_p^*, so exponentiation
//     and decoding are O(1) lookups. Used for exact distribution tests and
//     fast simulations.
//   * kCrypto: the 2048-bit MODP group (g = 4, q = (p-1)/2 prime).
class GroupSpec {
 public:
  GroupKind kind;
  std::string name;

  // Test backend. p = k*q + 1 prime, g of order exactly q.
  uint64_t p = 0;
  uint64_t q = 0;
  uint64_t g = 0;
  std::vector<uint64_t> gpow;    // gpow[e] = g^e mod p, e in [0, q)
  std::vector<uint32_t> dlog;    // dlog[x] = e with g^e = x, UINT32_MAX if none

  // Crypto backend.
  mpz_class pz, qz, gz;

  // Builds an enumerable group of prime order q (q <= 2^16).
  static std::shared_ptr<const GroupSpec> test(uint64_t q);
  static std::shared_ptr<const GroupSpec> crypto_default();
  // Named presets: "test101", "test65521", "crypto-default".
  static std::shared_ptr<const GroupSpec> preset(const std::string& name);

  uint64_t order_u() const { return q; }

  Elem identity() const;
  Elem make(uint64_t v) const;  // test backend only
  Elem mul(const Elem& a, const Elem& b) const;
  Elem inv(const Elem& a) const;
  Elem pow(const Elem& a, uint64_t e) const;
  Elem pow_g(uint64_t e) const;
  Elem pow_g(const mpz_class& e) const;
  Elem pow_z(const Elem& a, const mpz_class& e) const;
  bool eq(const Elem& a, const Elem& b) const;

  // Full-group discrete log, test backend only. Exponent in [0, q).
  uint64_t dlog_of(const Elem& a) const;

  // Builds the per-base power table used to make test-group exponentiation a
  // lookup (e.g. for a public key h).
  std::vector<uint64_t> build_pow_table(const Elem& base) const;
  Elem pow_table(const std::vector<uint64_t>& table, uint64_t e) const;

  // Fixed-width serialization: 8 bytes LE for test, 256 bytes BE for crypto.
  size_t elem_bytes() const;
  void serialize_elem(const Elem& a, std::vector<uint8_t>& out) const;

  uint64_t random_exponent_u(Rng& rng) const { return rng.below(q); }
  mpz_class random_exponent_z(Rng& rng) const;

  bool same(const GroupSpec& other) const;
};

using GroupPtr = std::shared_ptr<const GroupSpec>;

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m);
uint64_t powmod_u64(uint64_t base, uint64_t e, uint64_t m);
bool is_prime_u64(uint64_t n);

}  // namespace panpriv
