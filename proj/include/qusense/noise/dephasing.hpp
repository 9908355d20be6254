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
#include <numbers>
#include <stdexcept>
#include <vector>

#include "qusense/core/ops.hpp"
#include "qusense/sensing/digitization.hpp"
#include "qusense/util/parallel.hpp"

namespace qusense {

/// Per-qudit dephasing strength in the computational basis.
/// lambda = 1 removes every coherence between different levels of a qudit.
struct DephasingSpec {
  std::vector<double> lambda;

  static DephasingSpec uniform(const Dims& dims, double l) {
    return {std::vector<double>(dims.size(), l)};
  }

  void validate(const Dims& dims) const {
    if (lambda.size() != dims.size()) {
      throw shape_error("DephasingSpec: one strength per qudit required");
    }
    for (double l : lambda) {
      if (!(l >= 0.0 && l <= 1.0)) {
        throw std::invalid_argument("DephasingSpec: strength outside [0, 1]");
      }
    }
  }
};

/// rho_ab is multiplied by (1 - lambda_i) for every qudit i on which the
/// basis states a and b differ. Diagonal elements are untouched.
inline MixedState dephase(const MixedState& state, const DephasingSpec& spec) {
  const Dims& dims = state.dims();
  spec.validate(dims);
  const std::size_t n = dims.total();
  std::vector<std::vector<int>> digits(n);
  for (std::size_t k = 0; k < n; ++k) digits[k] = index_to_digits(k, dims).digits;
  Matrix rho = state.rho();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b) continue;
      double f = 1.0;
      for (std::size_t q = 0; q < dims.size(); ++q) {
        if (digits[a][q] != digits[b][q]) f *= 1.0 - spec.lambda[q];
      }
      rho(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) *= f;
    }
  }
  return MixedState(dims, std::move(rho));
}

struct PurityStudy {
  Mapping mapping = Mapping::QFT;
  std::vector<double> phis;
  std::vector<double> purity;  // per phase
  double mean = 0.0;
  double std_error = 0.0;
};

inline constexpr std::size_t kDefaultPurityGrid = 256;

/// Phase ladder -> mapping -> full dephasing -> Tr(rho^2), over `points`
/// uniform phases on [0, 2 pi).
inline PurityStudy purity_study(const Dims& dims, Mapping mapping,
                                std::size_t points = kDefaultPurityGrid) {
  if (points < 2) throw std::invalid_argument("purity_study: need >= 2 phases");
  PurityStudy s;
  s.mapping = mapping;
  s.phis.resize(points);
  s.purity.resize(points);
  const Circuit inverse = synthesize_inverse_qft(dims);
  const DephasingSpec full = DephasingSpec::uniform(dims, 1.0);
  parallel_for(points, [&](std::size_t i) {
    const double phi = 2.0 * std::numbers::pi * static_cast<double>(i) /
                       static_cast<double>(points);
    PureState psi = prepare_phase_state(dims, phi);
    if (mapping == Mapping::QFT) {
      inverse.apply(psi);
    } else {
      for (std::size_t q = 0; q < dims.size(); ++q) {
        const int t = static_cast<int>(q);
        apply_gate(psi, dims[q] == 2 ? hadamard(t) : chrestenson_dagger_gate(t));
      }
    }
    s.phis[i] = phi;
    s.purity[i] = purity(dephase(MixedState(psi), full));
  });
  for (double p : s.purity) s.mean += p;
  s.mean /= static_cast<double>(points);
  double ss = 0.0;
  for (double p : s.purity) ss += (p - s.mean) * (p - s.mean);
  s.std_error = std::sqrt(ss / static_cast<double>(points - 1)) /
                std::sqrt(static_cast<double>(points));
  return s;
}

inline PurityStudy purity_study(std::size_t n_qubits, Mapping mapping,
                                std::size_t points = kDefaultPurityGrid) {
  if (n_qubits < 1) throw std::invalid_argument("purity_study: n must be >= 1");
  return purity_study(Dims::qubits(n_qubits), mapping, points);
}

}  // namespace qusense
