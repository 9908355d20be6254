// Copyright 2026 The qusense Authors
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

namespace qusense {

/// Default tolerance for structural invariants (norm, trace, unitarity).
inline constexpr double kTolerance = 1e-10;

/// Default cap on the total register dimension for dense representations.
inline constexpr std::size_t kDefaultDenseCap = 4096;

/// Operand shapes do not agree (gate size vs. target qudits, state vs. dims).
class shape_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A dense object would exceed the configured dimension cap.
class capacity_error : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// A numeric invariant (normalization, Hermiticity, unitarity) was violated.
class invariant_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace qusense
