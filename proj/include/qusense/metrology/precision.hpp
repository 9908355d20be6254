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

#include "qusense/core/dims.hpp"
#include "qusense/metrology/strategies.hpp"

namespace qusense {

/// Planck constant in J s (exact SI value).
inline constexpr double kPlanckSI = 6.62607015e-34;

enum class PlanckUnits { Natural, SI };

/// Sensing setup linking the phase to the physical parameter alpha via
/// phi = (dE/dalpha) * delta_alpha * tau / h.
struct SensingParams {
  double dE_dalpha = 1.0;       // energy per unit alpha
  double tau = 1.0;             // shortest interrogation time
  double n_measurements = 1.0;  // N_m
  std::size_t n = 1;            // qubits
  PlanckUnits units = PlanckUnits::Natural;

  double planck() const { return units == PlanckUnits::SI ? kPlanckSI : 1.0; }

  void validate() const {
    if (!(tau > 0.0)) throw std::invalid_argument("SensingParams: tau must be > 0");
    if (!(n_measurements >= 1.0)) {
      throw std::invalid_argument("SensingParams: N_m must be >= 1");
    }
    if (n < 1) throw std::invalid_argument("SensingParams: n must be >= 1");
    if (!std::isfinite(dE_dalpha) || dE_dalpha == 0.0) {
      throw std::invalid_argument("SensingParams: dE/dalpha must be finite and nonzero");
    }
  }
};

/// Quantum Cramer-Rao precision Delta alpha for each strategy:
///   SQL   h / (sqrt(N_m) tau dE)
///   QPEA  h sqrt(3 / (N_m (4^n - 1))) / (tau dE)
///   NOON  h / (sqrt(N_m) (2^n - 1) tau dE)
inline double qcrb_precision(Strategy strategy, const SensingParams& p) {
  p.validate();
  const double h = p.planck();
  const double scale = p.tau * std::abs(p.dE_dalpha);
  const double two_n = std::ldexp(1.0, static_cast<int>(p.n));
  switch (strategy) {
    case Strategy::SQL:
      return h / (std::sqrt(p.n_measurements) * scale);
    case Strategy::QPEA:
      return h * std::sqrt(3.0 / (p.n_measurements * (two_n * two_n - 1.0))) / scale;
    case Strategy::NOON:
      return h / (std::sqrt(p.n_measurements) * (two_n - 1.0) * scale);
  }
  throw std::logic_error("qcrb_precision: unhandled strategy");
}

/// QPEA precision on a mixed-radix register, 4^n replaced by N^2.
inline double qcrb_precision(const Dims& dims, const SensingParams& p) {
  p.validate();
  const double n = static_cast<double>(dims.total());
  return p.planck() * std::sqrt(3.0 / (p.n_measurements * (n * n - 1.0))) /
         (p.tau * std::abs(p.dE_dalpha));
}

/// Dynamic range R / Delta:
///   SQL   (pi / h) sqrt(N_m)
///   QPEA  (2 pi / (sqrt(3) h)) sqrt(N_m) sqrt(4^n - 1)
/// NOON probes have no dynamic-range formula here and are rejected.
inline double dynamic_range(Strategy strategy, const SensingParams& p) {
  p.validate();
  const double h = p.planck();
  const double pi = std::numbers::pi;
  const double two_n = std::ldexp(1.0, static_cast<int>(p.n));
  switch (strategy) {
    case Strategy::SQL:
      return pi / h * std::sqrt(p.n_measurements);
    case Strategy::QPEA:
      return 2.0 * pi / (std::sqrt(3.0) * h) * std::sqrt(p.n_measurements) *
             std::sqrt(two_n * two_n - 1.0);
    case Strategy::NOON:
      break;
  }
  throw std::invalid_argument("dynamic_range: defined for SQL and QPEA only");
}

/// QPEA dynamic range on a mixed-radix register (4^n replaced by N^2).
inline double dynamic_range(const Dims& dims, const SensingParams& p) {
  p.validate();
  const double n = static_cast<double>(dims.total());
  return 2.0 * std::numbers::pi / (std::sqrt(3.0) * p.planck()) *
         std::sqrt(p.n_measurements) * std::sqrt(n * n - 1.0);
}

/// Fisher information with respect to alpha from the one for phi:
/// F_alpha = F_phi (tau dE/dalpha / h)^2.
inline double fisher_alpha(double fisher_phi, const SensingParams& p) {
  p.validate();
  const double r = p.tau * p.dE_dalpha / p.planck();
  return fisher_phi * r * r;
}

}  // namespace qusense
