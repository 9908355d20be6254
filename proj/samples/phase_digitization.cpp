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

// Reads a 12-level register (one qutrit, two qubits) prepared in a phase
// ladder, once through local inverse Chrestenson gates and once through the
// inverse QFT, and prints the most likely outcome of each.

#include <algorithm>
#include <cstdio>
#include <numbers>

#include "qusense/sensing/digitization.hpp"

int main() {
  using namespace qusense;
  const Dims dims{3, 2, 2};
  std::printf("%8s  %-22s  %-22s\n", "phi/2pi", "local readout (k, p)", "QFT readout (k, p)");
  for (int i = 0; i <= 24; ++i) {
    const double phi = 2.0 * std::numbers::pi * i / 24.0;
    const PureState psi = prepare_phase_state(dims, phi);
    const auto local = readout_local_hadamard(psi);
    const auto qft = readout_qft(psi);
    const auto lk = std::max_element(local.begin(), local.end()) - local.begin();
    const auto qk = std::max_element(qft.begin(), qft.end()) - qft.begin();
    std::printf("%8.4f  %4td  %-16.4f  %4td  %-16.4f\n", i / 24.0, lk, local[lk], qk, qft[qk]);
  }
  return 0;
}
