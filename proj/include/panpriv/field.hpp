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

#include "panpriv/errors.hpp"
#include "panpriv/group.hpp"
#include "panpriv/rng.hpp"

namespace panpriv {

// Prime field Z_p with machine-word arithmetic. Default p = 2^61 - 1; tiny
// primes (101) for exhaustive tests.
struct FieldSpec {
  uint64_t p;

  static constexpr uint64_t kDefaultPrime = (1ULL << 61) - 1;

  explicit FieldSpec(uint64_t prime = kDefaultPrime) : p(prime) {
    if (!is_prime_u64(prime)) {
      throw ConfigError("field modulus is not prime: " + std::to_string(prime));
    }
  }

  uint64_t add(uint64_t a, uint64_t b) const {
    uint64_t s = a + b;
    return s >= p ? s - p : s;
  }
  uint64_t sub(uint64_t a, uint64_t b) const { return a >= b ? a - b : a + p - b; }
  uint64_t neg(uint64_t a) const { return a == 0 ? 0 : p - a; }
  uint64_t mul(uint64_t a, uint64_t b) const { return mulmod_u64(a, b, p); }
  uint64_t pow(uint64_t a, uint64_t e) const { return powmod_u64(a, e, p); }
  uint64_t inv(uint64_t a) const { return pow(a, p - 2); }
  uint64_t random_elem(Rng& rng) const { return rng.below(p); }
  // nonzero challenge in [1, p)
  uint64_t random_challenge(Rng& rng) const { return 1 + rng.below(p - 1); }
};

}  // namespace panpriv
