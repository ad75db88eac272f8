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

#include "panpriv/elgamal.hpp"

#include <cmath>
#include <sstream>
#include <unordered_map>

#include "panpriv/errors.hpp"

namespace panpriv {

namespace {

uint64_t exponent_of_message(int64_t m, uint64_t q) {
  int64_t r = m % static_cast<int64_t>(q);
  if (r < 0) r += static_cast<int64_t>(q);
  return static_cast<uint64_t>(r);
}

mpz_class exponent_of_message_z(int64_t m, const mpz_class& q) {
  mpz_class r(static_cast<long>(m));
  r %= q;
  if (r < 0) r += q;
  return r;
}

int64_t center(uint64_t e, uint64_t q) {
  return e <= (q - 1) / 2 ? static_cast<int64_t>(e)
                          : static_cast<int64_t>(e) - static_cast<int64_t>(q);
}

}  // namespace

KeyPair keygen(GroupPtr spec, Rng& rng) {
  if (!spec) throw ConfigError("null group spec");
  KeyPair kp;
  kp.pub.spec = spec;
  kp.priv.spec = spec;
  if (spec->kind == GroupKind::kTest) {
    kp.priv.sk_u = spec->random_exponent_u(rng);
    kp.pub.h = spec->pow_g(kp.priv.sk_u);
    kp.pub.hpow = std::make_shared<const std::vector<uint64_t>>(
        spec->build_pow_table(kp.pub.h));
  } else {
    kp.priv.sk_z = spec->random_exponent_z(rng);
    kp.pub.h = spec->pow_g(kp.priv.sk_z);
  }
  return kp;
}

static Elem pow_h(const PublicKey& pub, uint64_t e) {
  if (pub.hpow) return pub.spec->pow_table(*pub.hpow, e);
  return pub.spec->pow(pub.h, e);
}

Ciphertext enc(int64_t m, const PublicKey& pub, Rng& rng) {
  const GroupSpec& G = *pub.spec;
  if (G.kind == GroupKind::kTest) {
    return enc_with_r(m, pub, G.random_exponent_u(rng));
  }
  mpz_class r = G.random_exponent_z(rng);
  Ciphertext c;
  c.c1 = G.pow_g(r);
  c.c2 = G.mul(G.pow_g(exponent_of_message_z(m, G.qz)), G.pow_z(pub.h, r));
  return c;
}

Ciphertext enc_with_r(int64_t m, const PublicKey& pub, uint64_t r) {
  const GroupSpec& G = *pub.spec;
  if (G.kind != GroupKind::kTest) {
    throw UsageError("enc_with_r is test-group only");
  }
  Ciphertext c;
  c.c1 = G.pow_g(r);
  c.c2 = G.mul(G.pow_g(exponent_of_message(m, G.q)), pow_h(pub, r));
  return c;
}

Ciphertext rerandomize(const Ciphertext& c, const PublicKey& pub, Rng& rng) {
  const GroupSpec& G = *pub.spec;
  if (G.kind == GroupKind::kTest) {
    return rerandomize_with_s(c, pub, G.random_exponent_u(rng));
  }
  mpz_class s = G.random_exponent_z(rng);
  Ciphertext out;
  out.c1 = G.mul(c.c1, G.pow_g(s));
  out.c2 = G.mul(c.c2, G.pow_z(pub.h, s));
  out.rerand_count = c.rerand_count + 1;
  return out;
}

Ciphertext rerandomize_with_s(const Ciphertext& c, const PublicKey& pub,
                              uint64_t s) {
  const GroupSpec& G = *pub.spec;
  Ciphertext out;
  out.c1 = G.mul(c.c1, G.pow_g(s));
  out.c2 = G.mul(c.c2, pow_h(pub, s));
  out.rerand_count = c.rerand_count + 1;
  return out;
}

int64_t dec(const Ciphertext& c, const PrivateKey& priv, uint64_t bound) {
  const GroupSpec& G = *priv.spec;
  if (G.kind == GroupKind::kTest) {
    Elem me = G.mul(c.c2, G.inv(G.pow(c.c1, priv.sk_u)));
    int64_t m = center(G.dlog_of(me), G.q);
    if (m > static_cast<int64_t>(bound) || m < -static_cast<int64_t>(bound)) {
      throw DecodeRangeError("exponent " + std::to_string(m) +
                             " outside decode bound " + std::to_string(bound));
    }
    return m;
  }

  Elem me = G.mul(c.c2, G.inv(G.pow_z(c.c1, priv.sk_z)));
  // Shift into [0, 2B] and run baby-step giant-step.
  const uint64_t range = 2 * bound + 1;
  Elem target = G.mul(me, G.pow_g(mpz_class(static_cast<unsigned long>(bound))));
  if (range <= 1024) {
    Elem x = G.identity();
    for (uint64_t j = 0; j < range; ++j) {
      if (G.eq(x, target)) return static_cast<int64_t>(j) - static_cast<int64_t>(bound);
      x = G.mul(x, G.pow_g(mpz_class(1)));
    }
    throw DecodeRangeError("exponent outside decode bound " +
                           std::to_string(bound));
  }
  const uint64_t m_step =
      static_cast<uint64_t>(std::ceil(std::sqrt(static_cast<double>(range))));
  std::unordered_map<std::string, uint64_t> baby;
  baby.reserve(m_step);
  Elem x = G.identity();
  Elem g1 = G.pow_g(mpz_class(1));
  for (uint64_t j = 0; j < m_step; ++j) {
    baby.emplace(x.z->get_str(16), j);
    x = G.mul(x, g1);
  }
  // giant step: g^{-m_step}
  Elem giant = G.inv(G.pow_g(mpz_class(static_cast<unsigned long>(m_step))));
  Elem y = target;
  for (uint64_t i = 0; i * m_step <= range; ++i) {
    auto it = baby.find(y.z->get_str(16));
    if (it != baby.end()) {
      uint64_t e = i * m_step + it->second;
      if (e <= range - 1) {
        return static_cast<int64_t>(e) - static_cast<int64_t>(bound);
      }
    }
    y = G.mul(y, giant);
  }
  throw DecodeRangeError("exponent outside decode bound " +
                         std::to_string(bound));
}

uint64_t dec_exponent(const Ciphertext& c, const PrivateKey& priv) {
  const GroupSpec& G = *priv.spec;
  if (G.kind != GroupKind::kTest) {
    throw UsageError("dec_exponent is test-group only");
  }
  Elem me = G.mul(c.c2, G.inv(G.pow(c.c1, priv.sk_u)));
  return G.dlog_of(me);
}

Ciphertext add_ciphertexts(const Ciphertext& a, const Ciphertext& b,
                           const PublicKey& pub) {
  const GroupSpec& G = *pub.spec;
  Ciphertext out;
  out.c1 = G.mul(a.c1, b.c1);
  out.c2 = G.mul(a.c2, b.c2);
  out.rerand_count = std::max(a.rerand_count, b.rerand_count);
  return out;
}

Ciphertext scalar_mul(int64_t alpha, const Ciphertext& c,
                      const PublicKey& pub) {
  const GroupSpec& G = *pub.spec;
  Ciphertext out;
  if (G.kind == GroupKind::kTest) {
    uint64_t e = exponent_of_message(alpha, G.q);
    out.c1 = G.pow(c.c1, e);
    out.c2 = G.pow(c.c2, e);
  } else {
    mpz_class e = exponent_of_message_z(alpha, G.qz);
    out.c1 = G.pow_z(c.c1, e);
    out.c2 = G.pow_z(c.c2, e);
  }
  out.rerand_count = c.rerand_count;
  return out;
}

void serialize_ciphertext(const Ciphertext& c, const GroupSpec& spec,
                          std::vector<uint8_t>& out) {
  spec.serialize_elem(c.c1, out);
  spec.serialize_elem(c.c2, out);
}

namespace {

std::string elem_hex(const GroupSpec& G, const Elem& a) {
  if (G.kind == GroupKind::kTest) {
    std::ostringstream os;
    os << std::hex << a.u;
    return os.str();
  }
  return a.z->get_str(16);
}

Elem elem_from_hex(const GroupSpec& G, const std::string& s) {
  if (G.kind == GroupKind::kTest) {
    return Elem{std::stoull(s, nullptr, 16), nullptr};
  }
  return Elem{0, std::make_shared<const mpz_class>(mpz_class(s, 16))};
}

}  // namespace

std::string public_key_to_hex(const PublicKey& pub) {
  return pub.spec->name + ":" + elem_hex(*pub.spec, pub.h);
}

std::string private_key_to_hex(const PrivateKey& priv) {
  const GroupSpec& G = *priv.spec;
  if (G.kind == GroupKind::kTest) {
    std::ostringstream os;
    os << std::hex << priv.sk_u;
    return G.name + ":" + os.str();
  }
  return G.name + ":" + priv.sk_z.get_str(16);
}

PublicKey public_key_from_hex(const std::string& s) {
  auto pos = s.find(':');
  if (pos == std::string::npos) throw ConfigError("malformed key record");
  PublicKey pub;
  pub.spec = GroupSpec::preset(s.substr(0, pos));
  pub.h = elem_from_hex(*pub.spec, s.substr(pos + 1));
  if (pub.spec->kind == GroupKind::kTest) {
    pub.hpow = std::make_shared<const std::vector<uint64_t>>(
        pub.spec->build_pow_table(pub.h));
  }
  return pub;
}

PrivateKey private_key_from_hex(const std::string& s) {
  auto pos = s.find(':');
  if (pos == std::string::npos) throw ConfigError("malformed key record");
  PrivateKey priv;
  priv.spec = GroupSpec::preset(s.substr(0, pos));
  if (priv.spec->kind == GroupKind::kTest) {
    priv.sk_u = std::stoull(s.substr(pos + 1), nullptr, 16);
  } else {
    priv.sk_z = mpz_class(s.substr(pos + 1), 16);
  }
  return priv;
}

}  // namespace panpriv
