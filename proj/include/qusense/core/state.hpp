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
#include <complex>
#include <string>

#include <Eigen/Dense>

#include "qusense/core/dims.hpp"

namespace qusense {

using cplx = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

/// Normalized amplitude vector over a mixed-radix register.
class PureState {
 public:
  /// Computational basis state |k>.
  explicit PureState(Dims dims, std::size_t k = 0)
      : dims_(std::move(dims)), amplitudes_(Vector::Zero(
                                    static_cast<Eigen::Index>(dims_.total()))) {
    if (k >= dims_.total()) {
      throw std::out_of_range("PureState: basis index out of range");
    }
    amplitudes_(static_cast<Eigen::Index>(k)) = 1.0;
  }

  PureState(Dims dims, Vector amplitudes, double tol = kTolerance)
      : dims_(std::move(dims)), amplitudes_(std::move(amplitudes)) {
    if (static_cast<std::size_t>(amplitudes_.size()) != dims_.total()) {
      throw shape_error("PureState: " + std::to_string(amplitudes_.size()) +
                        " amplitudes for register " + dims_.to_string());
    }
    const double norm = amplitudes_.norm();
    if (std::abs(norm - 1.0) > tol) {
      throw invariant_error("PureState: norm " + std::to_string(norm) +
                            " differs from 1");
    }
  }

  const Dims& dims() const noexcept { return dims_; }
  const Vector& amplitudes() const noexcept { return amplitudes_; }
  cplx operator[](std::size_t k) const {
    return amplitudes_(static_cast<Eigen::Index>(k));
  }
  double norm() const { return amplitudes_.norm(); }

  // Mutable access for in-place gate application; callers keep the norm.
  Vector& mutable_amplitudes() noexcept { return amplitudes_; }

 private:
  Dims dims_;
  Vector amplitudes_;
};

/// Density matrix over a mixed-radix register.
class MixedState {
 public:
  explicit MixedState(const PureState& psi)
      : dims_(psi.dims()),
        rho_(psi.amplitudes() * psi.amplitudes().adjoint()) {}

  /// Validates shape, Hermiticity and unit trace. Positivity is checked
  /// separately by `check_positive` since it needs an eigendecomposition.
  MixedState(Dims dims, Matrix rho, double tol = kTolerance)
      : dims_(std::move(dims)), rho_(std::move(rho)) {
    const auto n = static_cast<Eigen::Index>(dims_.total());
    if (rho_.rows() != n || rho_.cols() != n) {
      throw shape_error("MixedState: matrix is " +
                        std::to_string(rho_.rows()) + "x" +
                        std::to_string(rho_.cols()) + ", register " +
                        dims_.to_string());
    }
    const double herm = (rho_ - rho_.adjoint()).cwiseAbs().maxCoeff();
    if (herm > tol) {
      throw invariant_error("MixedState: not Hermitian (deviation " +
                            std::to_string(herm) + ")");
    }
    const cplx tr = rho_.trace();
    if (std::abs(tr - 1.0) > tol) {
      throw invariant_error("MixedState: trace " + std::to_string(tr.real()) +
                            " differs from 1");
    }
  }

  /// Maximally mixed state I/N.
  static MixedState maximally_mixed(const Dims& dims) {
    const auto n = static_cast<Eigen::Index>(dims.total());
    return MixedState(dims, Matrix::Identity(n, n) / static_cast<double>(n));
  }

  const Dims& dims() const noexcept { return dims_; }
  const Matrix& rho() const noexcept { return rho_; }
  cplx operator()(std::size_t i, std::size_t j) const {
    return rho_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }

  Matrix& mutable_rho() noexcept { return rho_; }

  /// Smallest eigenvalue >= -tol.
  bool check_positive(double tol = kTolerance) const {
    Eigen::SelfAdjointEigenSolver<Matrix> es(rho_, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff() >= -tol;
  }

 private:
  Dims dims_;
  Matrix rho_;
};

}  // namespace qusense
