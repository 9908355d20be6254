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

#include <cmath>
#include <optional>
#include <string_view>
#include <vector>

#include "qusense/gates/qft.hpp"

namespace qusense {

/// Probe strategies compared in the Fisher-information analysis.
enum class Strategy {
  SQL,   // n independent qubits, each with phase phi
  QPEA,  // qubit j carries 2^j phi (phase ladder), read out through QFT^dagger
  NOON,  // (|0..0> + e^{i (2^n - 1) phi}|1..1>)/sqrt 2
};

inline std::string_view to_string(Strategy s) {
  switch (s) {
    case Strategy::SQL: return "SQL";
    case Strategy::QPEA: return "QPEA";
    case Strategy::NOON: return "NOON";
  }
  return "?";
}

inline std::optional<Strategy> strategy_from_string(std::string_view s) {
  if (s == "SQL" || s == "sql") return Strategy::SQL;
  if (s == "QPEA" || s == "qpea") return Strategy::QPEA;
  if (s == "NOON" || s == "noon") return Strategy::NOON;
  return std::nullopt;
}

/// Final probe state of `strategy` on n qubits after acquiring phase
/// phi + delta (see phase_ladder_state for the role of delta).
inline PureState strategy_state(Strategy strategy, std::size_t n, double phi,
                                double delta = 0.0) {
  const Dims dims = Dims::qubits(n);
  const std::size_t dim = dims.total();
  Vector amp = Vector::Zero(static_cast<Eigen::Index>(dim));
  switch (strategy) {
    case Strategy::SQL: {
      // Each qubit (|0> + e^{i phi}|1>)/sqrt 2: amplitude depends on popcount.
      const double norm = std::pow(2.0, -0.5 * static_cast<double>(n));
      for (std::size_t k = 0; k < dim; ++k) {
        const int ones = __builtin_popcountll(k);
        amp(static_cast<Eigen::Index>(k)) = std::polar(norm, phi * ones) * std::polar(1.0, delta * ones);
      }
      return PureState(dims, std::move(amp));
    }
    case Strategy::QPEA:
      return phase_ladder_state(dims, phi, delta);
    case Strategy::NOON: {
      const double total = static_cast<double>(dim - 1);  // sum_j 2^j
      amp(0) = 1.0 / std::sqrt(2.0);
      amp(static_cast<Eigen::Index>(dim - 1)) =
          std::polar(1.0 / std::sqrt(2.0), total * phi) * std::polar(1.0, total * delta);
      return PureState(dims, std::move(amp));
    }
  }
  throw std::logic_error("strategy_state: unhandled strategy");
}

/// Readout circuit paired with each strategy: local Hadamards (SQL),
/// QFT^dagger (QPEA), CNOT ladder then Hadamard on qubit 0 (NOON). The NOON
/// readout leaves qubit 0 in (|0> + e^{i(2^n-1)phi}|1>)/sqrt 2 before the
/// Hadamard, so its outcome statistics are those of a parity measurement.
inline Circuit strategy_readout(Strategy strategy, std::size_t n) {
  const Dims dims = Dims::qubits(n);
  switch (strategy) {
    case Strategy::SQL: {
      Circuit c(dims);
      for (std::size_t q = 0; q < n; ++q) c.add(hadamard(static_cast<int>(q)));
      return c;
    }
    case Strategy::QPEA:
      return synthesize_inverse_qft(dims);
    case Strategy::NOON: {
      Circuit c(dims);
      for (std::size_t q = n; q-- > 1;) c.add(cnot(0, static_cast<int>(q)));
      c.add(hadamard(0));
      return c;
    }
  }
  throw std::logic_error("strategy_readout: unhandled strategy");
}

/// Outcome distribution of `strategy` at phase phi + delta with its paired
/// readout.
inline std::vector<double> strategy_distribution(Strategy strategy,
                                                 std::size_t n, double phi,
                                                 double delta = 0.0) {
  PureState psi = strategy_state(strategy, n, phi, delta);
  strategy_readout(strategy, n).apply(psi);
  return measure_distribution(psi);
}

}  // namespace qusense
