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

#include "panpriv/group.hpp"

#include <limits>

#include "panpriv/errors.hpp"

namespace panpriv {

namespace {

// RFC 3526, 2048-bit MODP group. p is a safe prime; 4 generates the subgroup
// of quadratic residues, which has prime order q = (p-1)/2.
const char* kModp2048Hex =
    "FFFFFFFFFFFFFFFFC90FDAA22168C234C4C6628B80DC1CD1"
    "29024E088A67CC74020BBEA63B139B22514A08798E3404DD"
    "EF9519B3CD3A431B302B0A6DF25F14374FE1356D6D51C245"
    "E485B576625E7EC6F44C42E9A637ED6B0BFF5CB6F406B7ED"
    "EE386BFB5A899FA5AE9F24117C4B1FE649286651ECE45B3D"
    "C2007CB8A163BF0598DA48361C55D39A69163FA8FD24CF5F"
    "83655D23DCA3AD961C62F356208552BB9ED529077096966D"
    "670C354E4ABC9804F1746C08CA18217C32905E462E36CE3B"
    "E39E772C180E86039B2783A2EC07A28FB5C55DF06F4C52C9"
    "DE2BCBF6955817183995497CEA956AE515D2261898FA0510"
    "15728E5A8AACAA68FFFFFFFFFFFFFFFF";

constexpr size_t kCryptoElemBytes = 256;

}  // namespace

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>(
      static_cast<unsigned __int128>(a) * b % m);
}

uint64_t powmod_u64(uint64_t base, uint64_t e, uint64_t m) {
  uint64_t r = 1 % m;
  base %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, base, m);
    base = mulmod_u64(base, base, m);
    e >>= 1;
  }
  return r;
}

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d : {2ULL, 3ULL, 5ULL, 7ULL}) {
    if (n % d == 0) return n == d;
  }
  // Deterministic Miller-Rabin for 64-bit inputs.
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                     23ULL, 29ULL, 31ULL, 37ULL}) {
    if (a % n == 0) continue;
    uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::shared_ptr<const GroupSpec> GroupSpec::test(uint64_t q) {
  if (q < 2 || q > (1ULL << 16)) {
    throw ConfigError("test group order must be a prime <= 2^16");
  }
  if (!is_prime_u64(q)) {
    throw ConfigError("test group order is not prime: " + std::to_string(q));
  }
  auto spec = std::make_shared<GroupSpec>();
  spec->kind = GroupKind::kTest;
  spec->q = q;
  spec->name = "test" + std::to_string(q);

  // Smallest modulus p = k*q + 1 that is prime.
  uint64_t k = 2;
  while (!is_prime_u64(k * q + 1)) k += 2;
  spec->p = k * q + 1;

  // a^k has order dividing q; q prime, so any value != 1 is a generator.
  for (uint64_t a = 2;; ++a) {
    uint64_t cand = powmod_u64(a, k, spec->p);
    if (cand != 1) {
      spec->g = cand;
      break;
    }
  }

  spec->gpow.resize(q);
  spec->dlog.assign(spec->p, std::numeric_limits<uint32_t>::max());
  uint64_t x = 1;
  for (uint64_t e = 0; e < q; ++e) {
    spec->gpow[e] = x;
    spec->dlog[x] = static_cast<uint32_t>(e);
    x = mulmod_u64(x, spec->g, spec->p);
  }
  if (x != 1) throw ConfigError("generator does not have order q");
  return spec;
}

std::shared_ptr<const GroupSpec> GroupSpec::crypto_default() {
  auto spec = std::make_shared<GroupSpec>();
  spec->kind = GroupKind::kCrypto;
  spec->name = "crypto-default";
  spec->pz = mpz_class(kModp2048Hex, 16);
  spec->qz = (spec->pz - 1) / 2;
  spec->gz = 4;
  return spec;
}

std::shared_ptr<const GroupSpec> GroupSpec::preset(const std::string& name) {
  if (name == "test101") return test(101);
  if (name == "test65521") return test(65521);
  if (name == "crypto-default") return crypto_default();
  if (name.rfind("test", 0) == 0) {
    return test(std::stoull(name.substr(4)));
  }
  throw ConfigError("unknown group preset: " + name);
}

Elem GroupSpec::identity() const {
  if (kind == GroupKind::kTest) return Elem{1, nullptr};
  return Elem{0, std::make_shared<const mpz_class>(1)};
}

Elem GroupSpec::make(uint64_t v) const {
  if (kind != GroupKind::kTest) throw UsageError("make() is test-group only");
  return Elem{v % p, nullptr};
}

Elem GroupSpec::mul(const Elem& a, const Elem& b) const {
  if (kind == GroupKind::kTest) return Elem{mulmod_u64(a.u, b.u, p), nullptr};
  mpz_class r = (*a.z) * (*b.z);
  r %= pz;
  return Elem{0, std::make_shared<const mpz_class>(std::move(r))};
}

Elem GroupSpec::inv(const Elem& a) const {
  if (kind == GroupKind::kTest) {
    return Elem{powmod_u64(a.u, p - 2, p), nullptr};
  }
  mpz_class r;
  mpz_invert(r.get_mpz_t(), a.z->get_mpz_t(), pz.get_mpz_t());
  return Elem{0, std::make_shared<const mpz_class>(std::move(r))};
}

Elem GroupSpec::pow(const Elem& a, uint64_t e) const {
  if (kind == GroupKind::kTest) {
    return Elem{powmod_u64(a.u, e, p), nullptr};
  }
  mpz_class ez(static_cast<unsigned long>(e));
  return pow_z(a, ez);
}

Elem GroupSpec::pow_z(const Elem& a, const mpz_class& e) const {
  if (kind == GroupKind::kTest) {
    mpz_class r = e % static_cast<unsigned long>(q);
    return pow(a, r.get_ui());
  }
  mpz_class r;
  mpz_powm(r.get_mpz_t(), a.z->get_mpz_t(), e.get_mpz_t(), pz.get_mpz_t());
  return Elem{0, std::make_shared<const mpz_class>(std::move(r))};
}

Elem GroupSpec::pow_g(uint64_t e) const {
  if (kind == GroupKind::kTest) return Elem{gpow[e % q], nullptr};
  mpz_class ez(static_cast<unsigned long>(e));
  return pow_g(ez);
}

Elem GroupSpec::pow_g(const mpz_class& e) const {
  if (kind == GroupKind::kTest) {
    mpz_class r = e % static_cast<unsigned long>(q);
    return Elem{gpow[r.get_ui()], nullptr};
  }
  mpz_class r;
  mpz_powm(r.get_mpz_t(), gz.get_mpz_t(), e.get_mpz_t(), pz.get_mpz_t());
  return Elem{0, std::make_shared<const mpz_class>(std::move(r))};
}

bool GroupSpec::eq(const Elem& a, const Elem& b) const {
  if (kind == GroupKind::kTest) return a.u == b.u;
  return *a.z == *b.z;
}

uint64_t GroupSpec::dlog_of(const Elem& a) const {
  if (kind != GroupKind::kTest) {
    throw UsageError("full discrete log is test-group only");
  }
  uint32_t e = dlog[a.u];
  if (e == std::numeric_limits<uint32_t>::max()) {
    throw UsageError("element outside the subgroup");
  }
  return e;
}

std::vector<uint64_t> GroupSpec::build_pow_table(const Elem& base) const {
  if (kind != GroupKind::kTest) return {};
  std::vector<uint64_t> table(q);
  uint64_t x = 1;
  for (uint64_t e = 0; e < q; ++e) {
    table[e] = x;
    x = mulmod_u64(x, base.u, p);
  }
  return table;
}

Elem GroupSpec::pow_table(const std::vector<uint64_t>& table,
                          uint64_t e) const {
  return Elem{table[e % q], nullptr};
}

size_t GroupSpec::elem_bytes() const {
  return kind == GroupKind::kTest ? 8 : kCryptoElemBytes;
}

void GroupSpec::serialize_elem(const Elem& a, std::vector<uint8_t>& out) const {
  if (kind == GroupKind::kTest) {
    uint64_t v = a.u;
    for (int i = 0; i < 8; ++i) {
      out.push_back(static_cast<uint8_t>(v >> (8 * i)));
    }
    return;
  }
  size_t start = out.size();
  out.resize(start + kCryptoElemBytes, 0);
  size_t count = 0;
  std::vector<uint8_t> buf(kCryptoElemBytes);
  mpz_export(buf.data(), &count, 1, 1, 1, 0, a.z->get_mpz_t());
  // Right-align into the fixed-width slot.
  for (size_t i = 0; i < count; ++i) {
    out[start + kCryptoElemBytes - count + i] = buf[i];
  }
}

mpz_class GroupSpec::random_exponent_z(Rng& rng) const {
  // 2048 + 64 bits then reduce mod q; the bias is < 2^-64.
  mpz_class acc = 0;
  for (int i = 0; i < 33; ++i) {
    acc <<= 64;
    acc += mpz_class(static_cast<unsigned long>(rng.next_u64()));
  }
  return acc % qz;
}

bool GroupSpec::same(const GroupSpec& other) const {
  if (this == &other) return true;
  if (kind != other.kind) return false;
  if (kind == GroupKind::kTest) return p == other.p && q == other.q && g == other.g;
  return pz == other.pz && gz == other.gz;
}

}  // namespace panpriv
