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
#include <vector>

#include "qusense/gates/circuit.hpp"

namespace qusense {

/// N-point DFT matrix F[k, j] = e^{2 pi i jk/N} / sqrt(N).
inline Matrix dft_matrix(std::size_t n) {
  if (n < 1) throw std::invalid_argument("dft_matrix: N must be >= 1");
  const auto en = static_cast<Eigen::Index>(n);
  Matrix f(en, en);
  const double norm = 1.0 / std::sqrt(static_cast<double>(n));
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < n; ++j) {
      const double angle =
          2.0 * std::numbers::pi * static_cast<double>((j * k) % n) /
          static_cast<double>(n);
      f(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(j)) =
          std::polar(norm, angle);
    }
  }
  return f;
}

/// Register value decoded with reversed digit significance.
///
/// For flat index s with digits (s_0 .. s_{n-1}) (qudit 0 most significant
/// in the flat order) this returns s_0 + s_1 d_0 + s_2 d_0 d_1 + ...; qudit 0
/// becomes the least significant digit. This is the labeling that
/// synthesize_qft's input and synthesize_inverse_qft's output use.
inline std::size_t reversed_value(std::size_t flat, const Dims& dims) {
  std::size_t value = 0;
  std::size_t place = 1;
  for (std::size_t q = 0; q < dims.size(); ++q) {
    value += static_cast<std::size_t>(digit_of(flat, q, dims)) * place;
    place *= static_cast<std::size_t>(dims[q]);
  }
  return value;
}

/// perm[s] = reversed_value(s). A bijection on [0, N).
inline std::vector<std::size_t> digit_reversal_permutation(const Dims& dims) {
  std::vector<std::size_t> perm(dims.total());
  for (std::size_t s = 0; s < perm.size(); ++s) {
    perm[s] = reversed_value(s, dims);
  }
  return perm;
}

/// P with P[s, perm[s]] = 1, so that
/// circuit_unitary(synthesize_qft(dims)) * P == dft_matrix(N).
inline Matrix digit_reversal_matrix(const Dims& dims) {
  const auto n = static_cast<Eigen::Index>(dims.total());
  Matrix p = Matrix::Zero(n, n);
  const auto perm = digit_reversal_permutation(dims);
  for (std::size_t s = 0; s < perm.size(); ++s) {
    p(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(perm[s])) = 1.0;
  }
  return p;
}

/// Relabels a distribution over flat indices by `reversed_value`.
inline std::vector<double> to_register_values(const std::vector<double>& flat,
                                              const Dims& dims) {
  if (flat.size() != dims.total()) {
    throw shape_error("to_register_values: distribution length mismatch");
  }
  std::vector<double> out(flat.size());
  for (std::size_t s = 0; s < flat.size(); ++s) {
    out[reversed_value(s, dims)] = flat[s];
  }
  return out;
}

/// Rotation angle that qudit `target` receives per unit of control digit of
/// qudit `control` (control < target): 2 pi / prod_{m=control..target} d_m.
inline double qft_ladder_angle(const Dims& dims, std::size_t control,
                               std::size_t target) {
  double prod = 1.0;
  for (std::size_t m = control; m <= target; ++m) prod *= dims[m];
  return 2.0 * std::numbers::pi / prod;
}

/// Generalized QFT over a mixed-radix register.
///
/// Qudits are processed from the last to the first. Qudit l gets a
/// Chrestenson (Hadamard for d = 2) gate followed by controlled phases from
/// qudits l-1, ..., 0, each weighted by control digit times target digit.
/// For dims {3,2,2} this yields H, CZ(pi/2), CZ(pi/6) on qudit 2; H, CZ(pi/3)
/// on qudit 1; C on qudit 0. Input digits are read with reversed
/// significance (see digit_reversal_matrix); no swap network is appended.
inline Circuit synthesize_qft(const Dims& dims) {
  Circuit c(dims);
  for (std::size_t l = dims.size(); l-- > 0;) {
    const int target = static_cast<int>(l);
    c.add(dims[l] == 2 ? hadamard(target) : chrestenson_gate(target));
    for (std::size_t p = l; p-- > 0;) {
      c.add(controlled_phase(static_cast<int>(p), target,
                             qft_ladder_angle(dims, p, l)));
    }
  }
  return c;
}

inline Circuit synthesize_inverse_qft(const Dims& dims) {
  return synthesize_qft(dims).adjoint();
}

/// Phase-ladder (Fourier) state sum_k e^{i phi k}|k> / sqrt(N).
///
/// Qudit l carries phase phi * weight(l) per unit digit, so for dims {3,2,2}
/// the qutrit carries 4 phi, qubit 1 carries 2 phi and qubit 2 carries phi.
///
/// The total phase is phi + delta with e^{i k delta} applied as a separate
/// factor; finite-difference stencils pass their step as delta so the
/// rounding of k phi is common to every stencil point.
inline PureState phase_ladder_state(const Dims& dims, double phi, double delta = 0.0) {
  const std::size_t n = dims.total();
  Vector amp(static_cast<Eigen::Index>(n));
  const double norm = 1.0 / std::sqrt(static_cast<double>(n));
  for (std::size_t k = 0; k < n; ++k) {
    amp(static_cast<Eigen::Index>(k)) =
        std::polar(norm, phi * static_cast<double>(k)) *
        std::polar(1.0, delta * static_cast<double>(k));
  }
  return PureState(dims, std::move(amp));
}

}  // namespace qusense
