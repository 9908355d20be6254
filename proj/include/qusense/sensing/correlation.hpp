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

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "qusense/core/ops.hpp"
#include "qusense/core/sampling.hpp"
#include "qusense/gates/qft.hpp"
#include "qusense/sensing/spectrum.hpp"
#include "qusense/util/parallel.hpp"

namespace qusense {

enum class SpinState { Up, Down };

/// Nuclear-spin I_z eigenvalue: +1/2 for up, -1/2 for down.
inline double spin_projection(SpinState s) { return s == SpinState::Up ? 0.5 : -0.5; }

/// Readout fidelities of the three memory spins of the reference setup.
inline constexpr std::array<double, 3> kReferenceReadoutFidelities{0.958, 0.969, 0.996};

/// Two target spins coupled to the sensor.
///
/// Between the sensing steps a target precesses at
/// f_t = detuning + ms * (A_t - A_ref) with A_ref the first coupling, and
/// has flipped with probability (1 - e^{-T/T2*} cos(2 pi f_t T)) / 2.
struct TargetSpinConfig {
  std::vector<double> couplings{6000.0, 12400.0};  // A_zz per target, Hz
  std::vector<SpinState> initial{SpinState::Up, SpinState::Up};
  double detuning = 2500.0;  // Hz
  double t2_star = 5e-3;     // s; infinity disables the decay envelope
  double ms = -1.0;          // sensor spin projection during the evolution
  /// Targets marked false are held fixed between the steps (never flip).
  std::vector<bool> evolving{true, true};

  void validate() const {
    if (couplings.size() != 2) {
      throw std::invalid_argument("TargetSpinConfig: exactly two targets are supported");
    }
    if (initial.size() != couplings.size() || evolving.size() != couplings.size()) {
      throw std::invalid_argument("TargetSpinConfig: one initial state per target");
    }
    for (double a : couplings) {
      if (!(a > 0.0) || !std::isfinite(a)) {
        throw std::invalid_argument("TargetSpinConfig: couplings must be > 0");
      }
    }
    if (!(t2_star > 0.0)) throw std::invalid_argument("TargetSpinConfig: T2* must be > 0");
    if (!std::isfinite(detuning) || !std::isfinite(ms)) {
      throw std::invalid_argument("TargetSpinConfig: non-finite parameter");
    }
  }

  double precession_frequency(std::size_t t) const {
    return detuning + ms * (couplings[t] - couplings[0]);
  }
};

/// Default sensing time: the t2 flip writes phase pi onto the MSQ.
inline double default_sensing_time(const TargetSpinConfig& cfg) {
  return 1.0 / (4.0 * cfg.couplings.at(1));
}

/// T_c = 0, 15 us, ..., 5.985 ms (400 points, 6 ms span).
inline std::vector<double> default_correlation_times() {
  std::vector<double> t(400);
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = 15e-6 * static_cast<double>(i);
  return t;
}

struct CorrelationRun {
  double tau = 1.0 / (4.0 * 12400.0);  // s
  std::vector<double> correlation_times = default_correlation_times();
  /// Per-memory symmetric readout fidelity; none means ideal readout.
  std::optional<std::array<double, 2>> readout_fidelities;
  /// Shots per T_c point; 0 reports exact probabilities.
  std::uint64_t shots = 0;
  /// Zero-padded FFT length; 0 means no padding.
  std::size_t fft_length = 0;

  void validate() const {
    if (!(tau > 0.0) || !std::isfinite(tau)) {
      throw std::invalid_argument("CorrelationRun: tau must be > 0");
    }
    if (correlation_times.size() < 2) {
      throw std::invalid_argument("CorrelationRun: need at least two correlation times");
    }
    const double dt = correlation_times[1] - correlation_times[0];
    for (std::size_t i = 0; i < correlation_times.size(); ++i) {
      if (correlation_times[i] < 0.0) {
        throw std::invalid_argument("CorrelationRun: correlation times must be >= 0");
      }
      if (i > 0 && std::abs(correlation_times[i] - correlation_times[i - 1] - dt) >
                       1e-9 * std::max(dt, 1e-300)) {
        throw std::invalid_argument("CorrelationRun: correlation times must be uniform");
      }
    }
    if (!(dt > 0.0)) throw std::invalid_argument("CorrelationRun: times must increase");
    if (readout_fidelities) {
      for (double f : *readout_fidelities) {
        if (!(f >= 0.0 && f <= 1.0)) {
          throw std::invalid_argument("CorrelationRun: fidelity outside [0, 1]");
        }
      }
    }
  }
};

/// Register phases after one sensing step. The MSQ (qudit 1) acquires
/// 2 * 2 pi * tau * sum_t A_t I_t and the LSQ (qudit 0) twice that.
struct RegisterPhases {
  double lsq = 0.0;
  double msq = 0.0;
};

inline RegisterPhases first_step_phases(const TargetSpinConfig& cfg,
                                        const std::vector<SpinState>& states,
                                        double tau) {
  cfg.validate();
  if (!(tau > 0.0)) throw std::invalid_argument("first_step_phases: tau must be > 0");
  if (states.size() != cfg.couplings.size()) {
    throw std::invalid_argument("first_step_phases: one state per target");
  }
  double s = 0.0;
  for (std::size_t t = 0; t < states.size(); ++t) {
    s += cfg.couplings[t] * spin_projection(states[t]);
  }
  RegisterPhases p;
  p.msq = 4.0 * std::numbers::pi * tau * s;
  p.lsq = 2.0 * p.msq;
  return p;
}

/// Probability that target t has flipped after free evolution T.
inline double target_flip_probability(const TargetSpinConfig& cfg, std::size_t t,
                                      double T) {
  if (!cfg.evolving.at(t)) return 0.0;
  const double decay = std::isfinite(cfg.t2_star) ? std::exp(-T / cfg.t2_star) : 1.0;
  return 0.5 * (1.0 - decay * std::cos(2.0 * std::numbers::pi *
                                       cfg.precession_frequency(t) * T));
}

/// Memory flip probabilities {LSQ, MSQ} for given target flip probabilities.
///
/// Each flip pattern leaves the MSQ with net phase (first step minus second
/// step) 4 pi tau sum_t A_t Delta I_t, Delta I_t = +-1 for a flipped target.
/// The patterns are mixed with their probabilities, mapped by QFT^dagger and
/// each memory is read from its reduced state.
inline std::array<double, 2> memory_flip_probabilities(
    const TargetSpinConfig& cfg, double tau, const std::array<double, 2>& q) {
  const Dims dims{2, 2};
  const Circuit inverse = synthesize_inverse_qft(dims);
  Matrix rho = Matrix::Zero(4, 4);
  for (int pattern = 0; pattern < 4; ++pattern) {
    double weight = 1.0;
    double net = 0.0;
    for (std::size_t t = 0; t < 2; ++t) {
      const bool flipped = (pattern >> t) & 1;
      weight *= flipped ? q[t] : 1.0 - q[t];
      if (flipped) {
        const double delta = cfg.initial[t] == SpinState::Up ? 1.0 : -1.0;
        net += cfg.couplings[t] * delta;
      }
    }
    if (weight == 0.0) continue;
    PureState psi = phase_ladder_state(dims, 4.0 * std::numbers::pi * tau * net);
    inverse.apply(psi);
    rho += weight * psi.amplitudes() * psi.amplitudes().adjoint();
  }
  const MixedState mixed(dims, rho);
  std::array<double, 2> out{};
  for (int m = 0; m < 2; ++m) {
    const MixedState r = partial_trace(mixed, {m});
    out[static_cast<std::size_t>(m)] = std::clamp(r(1, 1).real(), 0.0, 1.0);
  }
  return out;
}

/// Symmetric readout error: a memory flip is reported correctly with
/// probability f.
inline double apply_readout_fidelity(double p, double f) {
  return f * p + (1.0 - f) * (1.0 - p);
}

struct CorrelationResult {
  std::vector<double> correlation_times;
  std::array<std::vector<double>, 2> memory;  // flip probability per memory
  std::array<Spectrum, 2> spectrum;
  std::array<SpectralPeak, 2> peak;
};

/// Correlation spectroscopy over the T_c sweep. Memory 0 (LSQ) follows
/// target 0 and memory 1 (MSQ) follows target 1 when each target writes an
/// integer register value.
inline CorrelationResult simulate_correlation_spectroscopy(
    const TargetSpinConfig& cfg, const CorrelationRun& run, std::uint64_t seed) {
  cfg.validate();
  run.validate();
  const std::size_t m = run.correlation_times.size();
  CorrelationResult res;
  res.correlation_times = run.correlation_times;
  res.memory[0].resize(m);
  res.memory[1].resize(m);
  parallel_for(m, [&](std::size_t i) {
    const double T = run.correlation_times[i];
    const std::array<double, 2> q{target_flip_probability(cfg, 0, T),
                                  target_flip_probability(cfg, 1, T)};
    auto p = memory_flip_probabilities(cfg, run.tau, q);
    for (std::size_t k = 0; k < 2; ++k) {
      if (run.readout_fidelities) p[k] = apply_readout_fidelity(p[k], (*run.readout_fidelities)[k]);
      if (run.shots > 0) {
        std::mt19937_64 rng(derive_seed(seed, 2 * i + k));
        std::binomial_distribution<std::uint64_t> b(run.shots, p[k]);
        p[k] = static_cast<double>(b(rng)) / static_cast<double>(run.shots);
      }
      res.memory[k][i] = p[k];
    }
  });
  const double dt = run.correlation_times[1] - run.correlation_times[0];
  for (std::size_t k = 0; k < 2; ++k) {
    res.spectrum[k] = periodogram(res.memory[k], dt, run.fft_length);
    res.peak[k] = find_peak(res.spectrum[k]);
  }
  return res;
}

}  // namespace qusense
