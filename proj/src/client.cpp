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

#include "panpriv/client.hpp"

#include <sstream>

#include "panpriv/errors.hpp"

namespace panpriv {

uint64_t fnv1a64(const std::vector<uint8_t>& bytes) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (uint8_t b : bytes) {
    h ^= b;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string StateTrace::dump_jsonl() const {
  std::ostringstream os;
  for (size_t i = 0; i < snapshots_.size(); ++i) {
    os << "{\"step\":" << i << ",\"blob_size\":" << snapshots_[i].size()
       << ",\"blob_hash\":\"" << std::hex << fnv1a64(snapshots_[i]) << std::dec
       << "\"}\n";
  }
  return os.str();
}

int64_t trace_structural_diff(const StateTrace& a, const StateTrace& b) {
  const size_t n = std::max(a.size(), b.size());
  for (size_t i = 0; i < n; ++i) {
    if (i >= a.size() || i >= b.size()) return static_cast<int64_t>(i);
    if (a.blob(i).size() != b.blob(i).size()) return static_cast<int64_t>(i);
  }
  return -1;
}

ClientOptions ClientOptions::defaults_for(const GroupSpec& spec) {
  ClientOptions opt;
  opt.fresh_enc = spec.kind == GroupKind::kCrypto;
  return opt;
}

namespace {

// rerandomize^t(enc(b)), or the distribution-equal fresh encryption when the
// optimization is on (rerand_count still records t for bookkeeping).
Ciphertext state_encryption(int64_t bit, uint64_t rerands,
                            const PublicKey& pub, bool fresh_enc, Rng& rng) {
  Ciphertext c = enc(bit, pub, rng);
  if (fresh_enc) {
    c.rerand_count = rerands;
    return c;
  }
  for (uint64_t i = 0; i < rerands; ++i) c = rerandomize(c, pub, rng);
  return c;
}

}  // namespace

CountClient::CountClient(const PublicKey& pub, int64_t T,
                         const ClientOptions& opt, Rng& rng)
    : pub_(pub), T_(T), opt_(opt) {
  c_ = enc(0, pub_, rng);
  snapshot();
}

void CountClient::snapshot() {
  if (!opt_.record_trace) return;
  std::vector<uint8_t> blob;
  serialize_ciphertext(c_, *pub_.spec, blob);
  trace_.add(std::move(blob));
}

void CountClient::update(int x_t, Rng& rng) {
  if (step_ >= T_) throw ProtocolError("update past horizon");
  ++step_;
  if (x_t == 1) {
    c_ = state_encryption(1, static_cast<uint64_t>(step_), pub_,
                          opt_.fresh_enc, rng);
  } else {
    c_ = rerandomize(c_, pub_, rng);
  }
  snapshot();
}

Ciphertext CountClient::report(const RRParams& rr, Rng& rng) {
  if (step_ != T_) throw ProtocolError("report before the horizon");
  if (rr.is_noiseless() || rng.bernoulli(rr.keep_prob)) {
    return rerandomize(c_, pub_, rng);
  }
  const int64_t b = rng.bit() ? 1 : 0;
  return state_encryption(b, static_cast<uint64_t>(T_) + 1, pub_,
                          opt_.fresh_enc, rng);
}

HistClient::HistClient(const PublicKey& pub, int64_t k, int64_t T,
                       const ClientOptions& opt, Rng& rng)
    : pub_(pub), k_(k), T_(T), opt_(opt) {
  if (k < 1) throw ParameterError("k must be >= 1");
  c_.reserve(k + 1);
  d_.reserve(k + 1);
  c_.push_back(enc(1, pub_, rng));
  d_.push_back(enc(1, pub_, rng));
  for (int64_t i = 1; i <= k; ++i) {
    c_.push_back(enc(0, pub_, rng));
    d_.push_back(enc(0, pub_, rng));
  }
  snapshot();
}

void HistClient::snapshot() {
  if (!opt_.record_trace) return;
  std::vector<uint8_t> blob;
  for (const auto& ct : c_) serialize_ciphertext(ct, *pub_.spec, blob);
  for (const auto& ct : d_) serialize_ciphertext(ct, *pub_.spec, blob);
  trace_.add(std::move(blob));
}

Ciphertext HistClient::fresh_state(int64_t bit, uint64_t rerands, Rng& rng) {
  return state_encryption(bit, rerands, pub_, opt_.fresh_enc, rng);
}

void HistClient::update(int x_t, Rng& rng) {
  if (step_ >= T_) throw ProtocolError("update past horizon");
  ++step_;
  if (x_t == 0) {
    for (auto& ct : c_) ct = rerandomize(ct, pub_, rng);
    for (auto& ct : d_) ct = rerandomize(ct, pub_, rng);
  } else {
    // Shift downward from index k so each new c_i reads the pre-update
    // c_{i-1}; the in-place order of the written pseudocode would propagate
    // the reset index-0 value upward.
    for (int64_t i = k_; i >= 1; --i) {
      c_[i] = rerandomize(c_[i - 1], pub_, rng);
      d_[i] = rerandomize(d_[i - 1], pub_, rng);
    }
    c_[0] = fresh_state(0, static_cast<uint64_t>(step_), rng);
    d_[0] = fresh_state(1, static_cast<uint64_t>(step_), rng);
  }
  snapshot();
}

std::vector<Ciphertext> HistClient::report(const RRParams& rr, Rng& rng) {
  if (step_ != T_) throw ProtocolError("report before the horizon");
  std::vector<Ciphertext> v;
  v.reserve(k_ + 1);
  for (int64_t i = 0; i < k_; ++i) v.push_back(rerandomize(c_[i], pub_, rng));
  v.push_back(rerandomize(d_[k_], pub_, rng));
  for (auto& ct : v) {
    if (rr.is_noiseless() || rng.bernoulli(rr.keep_prob)) continue;
    const int64_t b = rng.bit() ? 1 : 0;
    ct = fresh_state(b, static_cast<uint64_t>(T_) + 1, rng);
  }
  return v;
}

Ciphertext HistClient::report_average(const NoiseParams& noise, Rng& rng) {
  if (step_ != T_) throw ProtocolError("report before the horizon");
  Ciphertext sum = scalar_mul(0, c_[0], pub_);
  for (int64_t i = 1; i < k_; ++i) {
    sum = add_ciphertexts(sum, scalar_mul(i, c_[i], pub_), pub_);
  }
  sum = add_ciphertexts(sum, scalar_mul(k_, d_[k_], pub_), pub_);
  const int64_t r = sample_discrete_gaussian(noise.sigma2, rng);
  sum = add_ciphertexts(sum, enc(r, pub_, rng), pub_);
  return rerandomize(sum, pub_, rng);
}

namespace {

void put_u32(std::vector<uint8_t>& out, uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<uint8_t>(v >> (8 * i)));
}

uint32_t get_u32(const std::vector<uint8_t>& in, size_t& pos) {
  if (pos + 4 > in.size()) throw ConfigError("truncated report list");
  uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= static_cast<uint32_t>(in[pos++]) << (8 * i);
  return v;
}

Elem parse_elem(const std::vector<uint8_t>& in, size_t& pos,
                const GroupSpec& spec) {
  const size_t w = spec.elem_bytes();
  if (pos + w > in.size()) throw ConfigError("truncated element");
  if (spec.kind == GroupKind::kTest) {
    uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<uint64_t>(in[pos + i]) << (8 * i);
    pos += w;
    return Elem{v, nullptr};
  }
  mpz_class z;
  mpz_import(z.get_mpz_t(), w, 1, 1, 1, 0, in.data() + pos);
  pos += w;
  return Elem{0, std::make_shared<const mpz_class>(std::move(z))};
}

}  // namespace

std::vector<uint8_t> serialize_report_list(const std::vector<Ciphertext>& cts,
                                           const GroupSpec& spec) {
  std::vector<uint8_t> out;
  put_u32(out, static_cast<uint32_t>(cts.size()));
  for (const auto& ct : cts) {
    std::vector<uint8_t> blob;
    serialize_ciphertext(ct, spec, blob);
    put_u32(out, static_cast<uint32_t>(blob.size()));
    out.insert(out.end(), blob.begin(), blob.end());
  }
  return out;
}

std::vector<Ciphertext> parse_report_list(const std::vector<uint8_t>& bytes,
                                          const GroupSpec& spec) {
  size_t pos = 0;
  const uint32_t n = get_u32(bytes, pos);
  std::vector<Ciphertext> cts;
  cts.reserve(n);
  for (uint32_t i = 0; i < n; ++i) {
    const uint32_t len = get_u32(bytes, pos);
    if (len != 2 * spec.elem_bytes()) throw ConfigError("bad ciphertext length");
    Ciphertext ct;
    ct.c1 = parse_elem(bytes, pos, spec);
    ct.c2 = parse_elem(bytes, pos, spec);
    cts.push_back(std::move(ct));
  }
  return cts;
}

std::string to_hex(const std::vector<uint8_t>& bytes) {
  static const char* digits = "0123456789abcdef";
  std::string s;
  s.reserve(bytes.size() * 2);
  for (uint8_t b : bytes) {
    s.push_back(digits[b >> 4]);
    s.push_back(digits[b & 0xf]);
  }
  return s;
}

std::vector<uint8_t> from_hex(const std::string& s) {
  if (s.size() % 2 != 0) throw ConfigError("odd-length hex string");
  auto nib = [](char c) -> uint8_t {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw ConfigError("bad hex digit");
  };
  std::vector<uint8_t> out;
  out.reserve(s.size() / 2);
  for (size_t i = 0; i < s.size(); i += 2) {
    out.push_back(static_cast<uint8_t>((nib(s[i]) << 4) | nib(s[i + 1])));
  }
  return out;
}

}  // namespace panpriv
