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

// Independent reference computations used to freeze expected values. Nothing
// here calls into the library's index, embedding or transform routines.

#include <cmath>
#include <complex>
#include <cstdio>
#include <string>
#include <numbers>
#include <vector>

#include <Eigen/Dense>

namespace qusense::oracle {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

/// All digit tuples of a mixed-radix register in odometer order (last digit
/// fastest), each paired with the value of the expansion
/// k = k_n + sum_l k_l prod_{m>l} d_m evaluated term by term.
inline std::vector<std::pair<std::vector<int>, long>> enumerate_register(
    const std::vector<int>& dims) {
  std::vector<std::pair<std::vector<int>, long>> out;
  std::vector<int> digits(dims.size(), 0);
  while (true) {
    long value = 0;
    for (std::size_t l = 0; l < dims.size(); ++l) {
      long place = 1;
      for (std::size_t m = l + 1; m < dims.size(); ++m) place *= dims[m];
      value += digits[l] * place;
    }
    out.emplace_back(digits, value);
    std::size_t i = dims.size();
    while (i > 0) {
      --i;
      if (++digits[i] < dims[i]) break;
      digits[i] = 0;
      if (i == 0) return out;
    }
  }
}

/// Full-space matrix of a local operator, element by element: entry (a, b)
/// is u[sub(a), sub(b)] when a and b agree on every non-target qudit.
inline Matrix embed(const std::vector<int>& dims, const std::vector<int>& targets,
                    const Matrix& u) {
  const auto reg = enumerate_register(dims);
  const auto n = static_cast<Eigen::Index>(reg.size());
  Matrix e = Matrix::Zero(n, n);
  auto sub = [&](const std::vector<int>& digits) {
    long s = 0;
    for (int t : targets) s = s * dims[static_cast<std::size_t>(t)] + digits[static_cast<std::size_t>(t)];
    return s;
  };
  for (const auto& [da, a] : reg) {
    for (const auto& [db, b] : reg) {
      bool same = true;
      for (std::size_t q = 0; q < dims.size(); ++q) {
        bool is_target = false;
        for (int t : targets) is_target |= (t == static_cast<int>(q));
        if (!is_target && da[q] != db[q]) same = false;
      }
      if (same) e(a, b) = u(sub(da), sub(db));
    }
  }
  return e;
}

/// exp(2 pi i jk / N) / sqrt(N) evaluated directly.
inline Matrix naive_dft(long n) {
  Matrix f(n, n);
  for (long k = 0; k < n; ++k) {
    for (long j = 0; j < n; ++j) {
      f(k, j) = std::exp(cplx(0.0, 2.0 * std::numbers::pi * double(j) *
                                       double(k) / double(n))) /
                std::sqrt(double(n));
    }
  }
  return f;
}

/// Probability that a QFT-based readout of the Fourier state with phase phi
/// returns value j: |sum_k e^{i (phi - 2 pi j/N) k}|^2 / N^2, summed term by
/// term.
inline double fejer_probability(long n, long j, double phi) {
  cplx acc = 0.0;
  const double x = phi - 2.0 * std::numbers::pi * double(j) / double(n);
  for (long k = 0; k < n; ++k) acc += std::exp(cplx(0.0, x * double(k)));
  return std::norm(acc) / double(n * n);
}

/// d/dphi of fejer_probability from the term-by-term derivative of the sum:
/// 2 Re(conj(S) S') / N^2 with S' = sum_k i k e^{i x k}.
inline double fejer_derivative(long n, long j, double phi) {
  cplx s = 0.0;
  cplx ds = 0.0;
  const double x = phi - 2.0 * std::numbers::pi * double(j) / double(n);
  for (long k = 0; k < n; ++k) {
    const cplx e = std::exp(cplx(0.0, x * double(k)));
    s += e;
    ds += cplx(0.0, double(k)) * e;
  }
  return 2.0 * std::real(std::conj(s) * ds) / double(n * n);
}

/// Value of a flat index with qudit 0 least significant:
/// s_0 + s_1 d_0 + s_2 d_0 d_1 + ...
inline long reversed_digits_value(const std::vector<int>& dims, const std::vector<int>& digits) {
  long v = 0;
  long place = 1;
  for (std::size_t l = 0; l < dims.size(); ++l) {
    v += digits[l] * place;
    place *= dims[l];
  }
  return v;
}

/// Readout image of phase-ladder states built from dense matrices only.
/// rows[i][j]: probability of register value j at phase 2 pi i / points.
/// `qft` selects the DFT^dagger readout, otherwise per-qudit inverse DFTs.
inline std::vector<std::vector<double>> readout_image(const std::vector<int>& dims,
                                                     int points, bool qft) {
  const auto reg = enumerate_register(dims);
  const long n = static_cast<long>(reg.size());
  Matrix u = Matrix::Identity(n, n);
  if (qft) {
    u = naive_dft(n).adjoint();
  } else {
    for (std::size_t q = 0; q < dims.size(); ++q) {
      u = embed(dims, {static_cast<int>(q)}, naive_dft(dims[q]).adjoint()) * u;
    }
  }
  std::vector<std::vector<double>> rows;
  for (int i = 0; i < points; ++i) {
    const double phi = 2.0 * std::numbers::pi * i / points;
    Eigen::VectorXcd psi(n);
    for (const auto& [digits, k] : reg) {
      psi(k) = std::exp(cplx(0.0, phi * double(k))) / std::sqrt(double(n));
    }
    const Eigen::VectorXcd out = u * psi;
    std::vector<double> row(static_cast<std::size_t>(n));
    for (const auto& [digits, s] : reg) {
      const long label = qft ? s : reversed_digits_value(dims, digits);
      row[static_cast<std::size_t>(label)] = std::norm(out(s));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

/// Golden-file text: probabilities rounded to 10 decimals.
inline std::string golden_csv(const std::vector<std::vector<double>>& qft,
                              const std::vector<std::vector<double>>& local) {
  std::string out = "mapping,phi_index,outcome,probability\n";
  char buf[96];
  for (int m = 0; m < 2; ++m) {
    const auto& rows = m == 0 ? qft : local;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = 0; j < rows[i].size(); ++j) {
        double p = rows[i][j];
        if (std::abs(p) < 5e-11) p = 0.0;
        std::snprintf(buf, sizeof(buf), "%s,%zu,%zu,%.10f\n", m == 0 ? "qft" : "local_h", i, j, p);
        out += buf;
      }
    }
  }
  return out;
}

}  // namespace qusense::oracle
