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

#include <stdexcept>
#include <string>

namespace panpriv {

// Bad group/field/experiment configuration (non-prime order, wrong generator
// order, field too small for n, ...).
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Out-of-range parameter to an operation (eps <= 0, negative variance, ...).
class ParameterError : public std::invalid_argument {
 public:
  explicit ParameterError(const std::string& what)
      : std::invalid_argument(what) {}
};

// The encrypted exponent lies outside the configured decode bound. Distinct
// from a key error: the ciphertext is well formed, the plaintext is just not
// representable.
class DecodeRangeError : public std::runtime_error {
 public:
  explicit DecodeRangeError(const std::string& what)
      : std::runtime_error(what) {}
};

// Client state machine misuse: update past the horizon, report before step T.
class ProtocolError : public std::logic_error {
 public:
  explicit ProtocolError(const std::string& what) : std::logic_error(what) {}
};

// A received report fails structural or plaintext validation.
class MalformedReportError : public std::runtime_error {
 public:
  MalformedReportError(const std::string& what, size_t index)
      : std::runtime_error(what + " (report index " + std::to_string(index) +
                           ")"),
        index(index) {}
  size_t index;
};

// Mixing values that belong to different keys or group specs.
class UsageError : public std::logic_error {
 public:
  explicit UsageError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace panpriv
