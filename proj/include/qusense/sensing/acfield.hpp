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

#include <algorithm>
#include <cstdint>
#include <numbers>
#include <vector>

#include "qusense/core/sampling.hpp"
#include "qusense/metrology/estimation.hpp"
#include "qusense/sensing/digitization.hpp"

namespace qusense {

struct AcFieldResult {
  double field_phase = 0.0;
  std::vector<double> distribution;  // by register value
  std::vector<std::uint64_t> counts;
  std::size_t most_frequent = 0;     // register value with the most counts
  double estimate_digitized = 0.0;   // 2 pi most_frequent / N
  double estimate_ml = 0.0;          // maximum likelihood
};

/// Sensing circuit: QFT prepares the uniform superposition from |0>, qudit l
/// then picks up weight(l) * phi through a phase rotation (the controlled
/// U^(2^l) writes of the sensor), and QFT^dagger maps the phase to a register
/// value.
inline Circuit ac_field_circuit(const Dims& dims, double field_phase) {
  Circuit c = synthesize_qft(dims);
  for (std::size_t l = 0; l < dims.size(); ++l) {
    c.add(phase_rot(static_cast<int>(l),
                    field_phase * static_cast<double>(dims.weight(l))));
  }
  const Circuit inverse = synthesize_inverse_qft(dims);
  for (const GateOp& op : inverse.ops()) c.add(op);
  return c;
}

inline std::vector<double> ac_field_distribution(const Dims& dims,
                                                 double field_phase) {
  PureState psi(dims);
  ac_field_circuit(dims, field_phase).apply(psi);
  return to_register_values(measure_distribution(psi), dims);
}

inline AcFieldResult simulate_ac_field_estimation(double field_phase,
                                                  const Dims& dims,
                                                  std::uint64_t shots,
                                                  std::uint64_t seed) {
  AcFieldResult r;
  r.field_phase = field_phase;
  r.distribution = ac_field_distribution(dims, field_phase);
  r.counts = sample_outcomes(r.distribution, shots, seed);
  r.most_frequent = static_cast<std::size_t>(
      std::max_element(r.counts.begin(), r.counts.end()) - r.counts.begin());
  const double n = static_cast<double>(dims.total());
  r.estimate_digitized = 2.0 * std::numbers::pi * static_cast<double>(r.most_frequent) / n;
  r.estimate_ml = ml_phase_estimate(r.counts);
  return r;
}

/// Outcome distribution for each field phase (the amplitude sweep image).
inline OutcomeImage ac_field_image(const Dims& dims,
                                   const std::vector<double>& field_phases) {
  OutcomeImage img{dims, field_phases, {}};
  img.probability.resize(field_phases.size());
  parallel_for(field_phases.size(), [&](std::size_t i) {
    img.probability[i] = ac_field_distribution(dims, field_phases[i]);
  });
  return img;
}

/// Most probable register value per row; ties go to the lower value.
inline std::vector<std::size_t> argmax_outcomes(const OutcomeImage& img) {
  std::vector<std::size_t> out;
  out.reserve(img.probability.size());
  for (const auto& row : img.probability) {
    out.push_back(static_cast<std::size_t>(
        std::max_element(row.begin(), row.end()) - row.begin()));
  }
  return out;
}

}  // namespace qusense
