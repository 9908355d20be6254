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
#include <algorithm>
#include <cstdint>
#include <limits>
#include <numbers>
#include <span>
#include <vector>

#include "qusense/core/sampling.hpp"
#include "qusense/util/parallel.hpp"

namespace qusense {

namespace detail {

inline double wrap_phase(double phi) {
  const double two_pi = 2.0 * std::numbers::pi;
  phi = std::fmod(phi, two_pi);
  return phi < 0.0 ? phi + two_pi : phi;
}

}  // namespace detail

/// Signed difference a - b wrapped into [-pi, pi).
inline double phase_difference(double a, double b) {
  return detail::wrap_phase(a - b + std::numbers::pi) - std::numbers::pi;
}

/// Probability that a QFT^dagger readout of the N-level Fourier state with
/// phase phi returns register value j (Fejer kernel).
inline double qft_readout_probability(std::size_t n, std::size_t j, double phi) {
  const double nn = static_cast<double>(n);
  const double x = phi - 2.0 * std::numbers::pi * static_cast<double>(j) / nn;
  const double s = std::sin(0.5 * x);
  if (std::abs(s) < 1e-9) {
    // Second-order expansion around the peak.
    const double y = detail::wrap_phase(x + std::numbers::pi) - std::numbers::pi;
    return std::max(0.0, 1.0 - (nn * nn - 1.0) * y * y / 12.0);
  }
  const double num = std::sin(0.5 * nn * x);
  return num * num / (nn * nn * s * s);
}

/// Maximum-likelihood phase from QFT^dagger readout counts indexed by
/// register value. The log-likelihood is scanned on a grid of 8 N points
/// and refined by golden-section search around the best grid point.
///
/// A single qubit (N = 2) cannot tell phi from -phi; its estimate is folded
/// into [0, pi].
inline double ml_phase_estimate(std::span<const std::uint64_t> counts) {
  const std::size_t n = counts.size();
  if (n < 2) throw std::invalid_argument("ml_phase_estimate: need N >= 2");
  std::vector<std::size_t> seen;
  for (std::size_t j = 0; j < n; ++j) {
    if (counts[j] > 0) seen.push_back(j);
  }
  if (seen.empty()) throw std::invalid_argument("ml_phase_estimate: no counts");

  auto loglik = [&](double phi) {
    double l = 0.0;
    for (std::size_t j : seen) {
      const double p = qft_readout_probability(n, j, phi);
      l += static_cast<double>(counts[j]) * std::log(std::max(p, 1e-300));
    }
    return l;
  };

  const double span = n == 2 ? std::numbers::pi : 2.0 * std::numbers::pi;
  const std::size_t grid = 8 * n;
  const double step = span / static_cast<double>(grid);
  double best_phi = 0.0;
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i <= grid; ++i) {
    const double phi = step * static_cast<double>(i);
    const double l = loglik(phi);
    if (l > best) {
      best = l;
      best_phi = phi;
    }
  }

  double a = best_phi - step;
  double b = best_phi + step;
  if (n == 2) {
    a = std::max(a, 0.0);
    b = std::min(b, std::numbers::pi);
  }
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - g * (b - a);
  double d = a + g * (b - a);
  double fc = loglik(c);
  double fd = loglik(d);
  while (b - a > 1e-13) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - g * (b - a);
      fc = loglik(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + g * (b - a);
      fd = loglik(d);
    }
  }
  const double phi = 0.5 * (a + b);
  return n == 2 ? phi : detail::wrap_phase(phi);
}

struct EstimatorStatistics {
  double mean_error = 0.0;  // mean of wrapped (estimate - true)
  double std_dev = 0.0;     // sample standard deviation of the estimates
  std::size_t trials = 0;
};

/// Repeats `trials` experiments of `shots` readouts drawn from `dist`
/// (indexed by register value) and summarizes the ML phase estimates.
inline EstimatorStatistics estimator_statistics(std::span<const double> dist,
                                                double true_phi,
                                                std::uint64_t shots,
                                                std::size_t trials,
                                                std::uint64_t seed) {
  if (trials < 2) throw std::invalid_argument("estimator_statistics: trials < 2");
  std::vector<double> errors(trials);
  parallel_for(trials, [&](std::size_t t) {
    const auto counts = sample_outcomes(dist, shots, derive_seed(seed, t));
    errors[t] = phase_difference(ml_phase_estimate(counts), true_phi);
  });
  EstimatorStatistics s;
  s.trials = trials;
  for (double e : errors) s.mean_error += e;
  s.mean_error /= static_cast<double>(trials);
  double ss = 0.0;
  for (double e : errors) ss += (e - s.mean_error) * (e - s.mean_error);
  s.std_dev = std::sqrt(ss / static_cast<double>(trials - 1));
  return s;
}

}  // namespace qusense
