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

#include <cstddef>
#include <initializer_list>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "qusense/core/errors.hpp"

namespace qusense {

/// Ordered qudit dimensions of a mixed-radix register.
///
/// Qudit 0 is the most significant position: a flat index decomposes as
/// k = k_{n-1} + sum_l k_l * prod_{m>l} d_m.  The place value of qudit l
/// (prod_{m>l} d_m) is exposed as `weight(l)`; it is also the phase
/// multiplier that qudit carries in a phase-ladder state.
class Dims {
 public:
  Dims(std::initializer_list<int> dims) : Dims(std::vector<int>(dims)) {}

  explicit Dims(std::vector<int> dims, std::size_t cap = kDefaultDenseCap)
      : dims_(std::move(dims)) {
    if (dims_.empty()) {
      throw std::invalid_argument("Dims: register needs at least one qudit");
    }
    weights_.assign(dims_.size(), 1);
    std::size_t total = 1;
    for (std::size_t i = dims_.size(); i-- > 0;) {
      const int d = dims_[i];
      if (d < 2) {
        throw std::invalid_argument("Dims: qudit " + std::to_string(i) +
                                    " has dimension " + std::to_string(d) +
                                    " < 2");
      }
      weights_[i] = total;
      if (total > std::numeric_limits<std::size_t>::max() /
                      static_cast<std::size_t>(d)) {
        throw capacity_error("Dims: total dimension overflows");
      }
      total *= static_cast<std::size_t>(d);
    }
    if (total > cap) {
      throw capacity_error("Dims: total dimension " + std::to_string(total) +
                           " exceeds dense cap " + std::to_string(cap));
    }
    total_ = total;
  }

  /// Number of qudits n.
  std::size_t size() const noexcept { return dims_.size(); }
  /// Total dimension N = prod d_i.
  std::size_t total() const noexcept { return total_; }
  int operator[](std::size_t i) const { return dims_.at(i); }
  std::size_t weight(std::size_t i) const { return weights_.at(i); }

  std::span<const int> values() const noexcept { return dims_; }
  auto begin() const noexcept { return dims_.begin(); }
  auto end() const noexcept { return dims_.end(); }

  bool all_qubits() const noexcept {
    for (int d : dims_) {
      if (d != 2) return false;
    }
    return true;
  }

  friend bool operator==(const Dims& a, const Dims& b) noexcept {
    return a.dims_ == b.dims_;
  }

  std::string to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < dims_.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(dims_[i]);
    }
    return out + "}";
  }

  /// All-qubit register of n qubits.
  static Dims qubits(std::size_t n) { return Dims(std::vector<int>(n, 2)); }

 private:
  std::vector<int> dims_;
  std::vector<std::size_t> weights_;
  std::size_t total_ = 1;
};

/// A register basis label in both digit and flat form.
struct RegisterIndex {
  std::vector<int> digits;  // most significant first
  std::size_t flat = 0;

  friend bool operator==(const RegisterIndex&, const RegisterIndex&) = default;
};

inline RegisterIndex index_to_digits(std::size_t flat, const Dims& dims) {
  if (flat >= dims.total()) {
    throw std::out_of_range("index_to_digits: flat index " +
                            std::to_string(flat) + " out of range for " +
                            dims.to_string());
  }
  RegisterIndex out{std::vector<int>(dims.size()), flat};
  std::size_t rest = flat;
  for (std::size_t i = dims.size(); i-- > 0;) {
    const auto d = static_cast<std::size_t>(dims[i]);
    out.digits[i] = static_cast<int>(rest % d);
    rest /= d;
  }
  return out;
}

inline std::size_t digits_to_index(std::span<const int> digits,
                                   const Dims& dims) {
  if (digits.size() != dims.size()) {
    throw shape_error("digits_to_index: expected " +
                      std::to_string(dims.size()) + " digits, got " +
                      std::to_string(digits.size()));
  }
  std::size_t flat = 0;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (digits[i] < 0 || digits[i] >= dims[i]) {
      throw std::out_of_range("digits_to_index: digit " + std::to_string(i) +
                              " = " + std::to_string(digits[i]) +
                              " outside [0, " + std::to_string(dims[i]) + ")");
    }
    flat += static_cast<std::size_t>(digits[i]) * dims.weight(i);
  }
  return flat;
}

/// Digit of qudit `q` in flat index `flat`.
inline int digit_of(std::size_t flat, std::size_t q, const Dims& dims) {
  return static_cast<int>((flat / dims.weight(q)) %
                          static_cast<std::size_t>(dims[q]));
}

}  // namespace qusense
