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
#include <cstdint>
#include <numbers>
#include <vector>

#include "qusense/gates/qft.hpp"
#include "qusense/util/parallel.hpp"

namespace qusense {

/// Phase-ladder register state: qudit l carries phi times its radix weight.
/// For dims {3,2,2} this is |4 phi> (x) |2 phi> (x) |phi> in digit order,
/// i.e. sum_k e^{i phi k}|k> / sqrt(N).
inline PureState prepare_phase_state(const Dims& dims, double phi) {
  return phase_ladder_state(dims, phi);
}

/// Inverse Chrestenson (Hadamard for qubits) on each qudit, then a
/// computational-basis measurement. Outcomes are labeled by register value,
/// qudit 0 least significant, the same labeling as `readout_qft`.
inline std::vector<double> readout_local_hadamard(const PureState& state) {
  PureState psi = state;
  const Dims& dims = psi.dims();
  for (std::size_t q = 0; q < dims.size(); ++q) {
    const int t = static_cast<int>(q);
    apply_gate(psi, dims[q] == 2 ? hadamard(t) : chrestenson_dagger_gate(t));
  }
  return to_register_values(measure_distribution(psi), dims);
}

/// QFT^dagger then measurement. A phase ladder with phi = 2 pi k / N gives
/// outcome k with certainty.
inline std::vector<double> readout_qft(const PureState& state) {
  PureState psi = state;
  synthesize_inverse_qft(psi.dims()).apply(psi);
  return to_register_values(measure_distribution(psi), psi.dims());
}

enum class Mapping { QFT, LocalH };

inline std::string_view to_string(Mapping m) {
  return m == Mapping::QFT ? "qft" : "local_h";
}

/// Outcome probabilities over a phase sweep: probability[i][k] for phase
/// phis[i] and register value k.
struct OutcomeImage {
  Dims dims;
  std::vector<double> phis;
  std::vector<std::vector<double>> probability;
};

inline std::vector<double> readout(const PureState& state, Mapping m) {
  return m == Mapping::QFT ? readout_qft(state) : readout_local_hadamard(state);
}

/// Readout image over `points` uniform phases on [0, 2 pi).
inline OutcomeImage digitization_image(const Dims& dims, std::size_t points,
                                       Mapping mapping) {
  if (points < 1) throw std::invalid_argument("digitization_image: no points");
  OutcomeImage img{dims, {}, {}};
  img.phis.resize(points);
  img.probability.resize(points);
  for (std::size_t i = 0; i < points; ++i) {
    img.phis[i] = 2.0 * std::numbers::pi * static_cast<double>(i) /
                  static_cast<double>(points);
  }
  parallel_for(points, [&](std::size_t i) {
    img.probability[i] = readout(prepare_phase_state(dims, img.phis[i]), mapping);
  });
  return img;
}

}  // namespace qusense
