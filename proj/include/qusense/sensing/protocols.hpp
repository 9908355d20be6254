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
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qusense/sensing/digitization.hpp"

namespace qusense {

/// One memory qubit, one target: a target flip between the two sensing
/// steps leaves net phase 2 pi A tau, read out as population
/// sin^2(dphi / 2). tau = 1/(2A) gives the full flip.
inline double single_memory_protocol(double a_zz, double tau, bool flip_target) {
  if (!(tau > 0.0)) throw std::invalid_argument("single_memory_protocol: tau must be > 0");
  if (!(a_zz > 0.0)) throw std::invalid_argument("single_memory_protocol: A_zz must be > 0");
  const double dphi = flip_target ? 2.0 * std::numbers::pi * a_zz * tau : 0.0;
  const double s = std::sin(0.5 * dphi);
  return s * s;
}

/// Two-memory phase estimation: phase ladder (MSQ phi, LSQ 2 phi), QFT^dagger,
/// most probable outcome written MSB first. phi = 0, pi/2, pi, 3 pi/2 map to
/// "00", "01", "10", "11"; ties resolve to the smaller value.
inline std::string two_memory_qpea_example(double phi) {
  const auto dist = readout_qft(prepare_phase_state(Dims{2, 2}, phi));
  const auto j = static_cast<int>(std::max_element(dist.begin(), dist.end()) - dist.begin());
  std::string bits(2, '0');
  bits[0] = static_cast<char>('0' + ((j >> 1) & 1));
  bits[1] = static_cast<char>('0' + (j & 1));
  return bits;
}

}  // namespace qusense
