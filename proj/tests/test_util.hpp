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

#include <random>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>

#include "qusense/core/state.hpp"

namespace qusense::testing {

inline Matrix random_unitary(Eigen::Index n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Matrix z(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) z(i, j) = cplx(g(rng), g(rng));
  }
  Eigen::HouseholderQR<Matrix> qr(z);
  return qr.householderQ();
}

inline Vector random_vector(Eigen::Index n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Vector v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = cplx(g(rng), g(rng));
  return v.normalized();
}

inline PureState random_pure(const Dims& dims, std::mt19937_64& rng) {
  return PureState(dims, random_vector(static_cast<Eigen::Index>(dims.total()), rng));
}

/// Random full-rank density matrix: W W^dagger / Tr.
inline MixedState random_mixed(const Dims& dims, std::mt19937_64& rng) {
  const auto n = static_cast<Eigen::Index>(dims.total());
  std::normal_distribution<double> g;
  Matrix w(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) w(i, j) = cplx(g(rng), g(rng));
  }
  Matrix rho = w * w.adjoint();
  rho /= rho.trace();
  rho = (rho + rho.adjoint()) / 2.0;
  return MixedState(dims, rho);
}

/// Random register with n <= max_n qudits of dimension 2..max_d and
/// total dimension <= cap.
inline Dims random_dims(std::mt19937_64& rng, int max_n, int max_d,
                        std::size_t cap = 64) {
  std::uniform_int_distribution<int> count(1, max_n);
  std::uniform_int_distribution<int> dim(2, max_d);
  while (true) {
    std::vector<int> d(static_cast<std::size_t>(count(rng)));
    std::size_t total = 1;
    for (int& x : d) {
      x = dim(rng);
      total *= static_cast<std::size_t>(x);
    }
    if (total <= cap) return Dims(d);
  }
}

}  // namespace qusense::testing
