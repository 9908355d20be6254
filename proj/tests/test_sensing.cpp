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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qusense/metrology/precision.hpp"
#include "qusense/sensing/acfield.hpp"
#include "qusense/sensing/correlation.hpp"
#include "qusense/sensing/protocols.hpp"

namespace qusense {
namespace {

constexpr double kPi = std::numbers::pi;
const Dims kTwelve{3, 2, 2};

std::size_t support(const std::vector<double>& p, double eps = 1e-9) {
  return static_cast<std::size_t>(std::count_if(p.begin(), p.end(), [&](double v) { return v > eps; }));
}

TEST(PhaseState, ZeroPhaseIsUniform) {
  const PureState psi = prepare_phase_state(kTwelve, 0.0);
  for (Eigen::Index k = 0; k < 12; ++k) {
    EXPECT_NEAR(std::abs(psi[k] - cplx(1.0 / std::sqrt(12.0), 0.0)), 0.0, 1e-15);
  }
}

TEST(PhaseState, MatchesDftColumn) {
  const PureState psi = prepare_phase_state(kTwelve, 2 * kPi / 12);
  const Matrix f = oracle::naive_dft(12);
  EXPECT_LT((psi.amplitudes() - f.col(1)).norm(), 1e-12);
  // Circuit route: QFT applied to the basis state whose reversed value is 1.
  PureState basis(kTwelve, digit_reversal_permutation(kTwelve)[1] == 1 ? 1 : 0);
  for (std::size_t s = 0; s < 12; ++s) {
    if (reversed_value(s, kTwelve) == 1) basis = PureState(kTwelve, s);
  }
  synthesize_qft(kTwelve).apply(basis);
  EXPECT_LT((basis.amplitudes() - f.col(1)).norm(), 1e-12);
}

TEST(PhaseState, QuditPhasesFollowWeights) {
  // Qutrit carries 4 phi, qubits 2 phi and phi.
  const double phi = 0.37;
  const PureState psi = prepare_phase_state(kTwelve, phi);
  for (std::size_t k = 0; k < 12; ++k) {
    const auto d = index_to_digits(k, kTwelve).digits;
    const double expected = 4 * phi * d[0] + 2 * phi * d[1] + phi * d[2];
    EXPECT_NEAR(std::arg(psi[static_cast<Eigen::Index>(k)] *
                         std::exp(cplx(0, -expected))), 0.0, 1e-12);
  }
}

TEST(LocalHadamard, ZeroPhaseIsDeterministic) {
  const auto p = readout_local_hadamard(prepare_phase_state(kTwelve, 0.0));
  EXPECT_NEAR(p[0], 1.0, 1e-12);
}

TEST(LocalHadamard, GenericPhaseScatters) {
  const auto p = readout_local_hadamard(prepare_phase_state(kTwelve, 2 * kPi * 0.13));
  EXPECT_GT(support(p), 1u);
  EXPECT_LT(*std::max_element(p.begin(), p.end()), 8.0 / (kPi * kPi));
}

TEST(LocalHadamard, PiIsSingleOutcome) {
  const auto p = readout_local_hadamard(prepare_phase_state(kTwelve, kPi));
  EXPECT_EQ(support(p), 1u);
  EXPECT_NEAR(*std::max_element(p.begin(), p.end()), 1.0, 1e-12);
}

TEST(QftReadout, GridPhasesAreDeterministic) {
  for (std::size_t k = 0; k < 12; ++k) {
    const auto p = readout_qft(prepare_phase_state(kTwelve, 2 * kPi * double(k) / 12));
    EXPECT_NEAR(p[k], 1.0, 1e-9) << k;
  }
}

TEST(QftReadout, MidBinMassOnAdjacentPair) {
  for (std::size_t k = 0; k < 12; ++k) {
    const double phi = 2 * kPi * (double(k) + 0.5) / 12;
    const auto p = readout_qft(prepare_phase_state(kTwelve, phi));
    std::vector<std::size_t> idx(12);
    for (std::size_t i = 0; i < 12; ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](auto a, auto b) { return p[a] > p[b]; });
    const std::size_t gap = (idx[0] + 12 - idx[1]) % 12;
    EXPECT_TRUE(gap == 1 || gap == 11);
    const double two_bin = oracle::fejer_probability(12, long(k), phi) +
                           oracle::fejer_probability(12, long((k + 1) % 12), phi);
    EXPECT_NEAR(p[idx[0]] + p[idx[1]], two_bin, 1e-12);
    EXPECT_GT(two_bin, 0.81);
  }
}

TEST(QftReadout, MatchesFejerKernelEverywhere) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 2 * kPi);
  for (int i = 0; i < 50; ++i) {
    const double phi = u(rng);
    const auto p = readout_qft(prepare_phase_state(kTwelve, phi));
    for (long j = 0; j < 12; ++j) {
      EXPECT_NEAR(p[std::size_t(j)], oracle::fejer_probability(12, j, phi), 1e-12);
    }
  }
}

TEST(QftReadout, ContrastBeatsLocalReadout) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(0.0, 2 * kPi);
  for (int i = 0; i < 100; ++i) {
    const double phi = u(rng);
    const auto p = readout_qft(prepare_phase_state(kTwelve, phi));
    std::vector<double> s = p;
    std::sort(s.rbegin(), s.rend());
    double pair = 0.0;
    for (std::size_t j = 0; j < 12; ++j) pair = std::max(pair, p[j] + p[(j + 1) % 12]);
    EXPECT_GE(pair, 8.0 / (kPi * kPi) - 1e-12);
  }
}

TEST(DigitizationImage, DiagonalBand) {
  const auto img = digitization_image(kTwelve, 132, Mapping::QFT);
  const auto top = argmax_outcomes(img);
  for (std::size_t i = 0; i < top.size(); ++i) {
    EXPECT_EQ(top[i], static_cast<std::size_t>(std::lround(img.phis[i] * 12 / (2 * kPi))) % 12);
  }
}

TEST(AcField, ZeroFieldIsOutcomeZero) {
  const auto r = simulate_ac_field_estimation(0.0, kTwelve, 1000, 1);
  EXPECT_NEAR(r.distribution[0], 1.0, 1e-12);
  EXPECT_EQ(r.counts[0], 1000u);
  EXPECT_EQ(r.estimate_digitized, 0.0);
  EXPECT_NEAR(phase_difference(r.estimate_ml, 0.0), 0.0, 1e-6);
}

TEST(AcField, DistributionMatchesFejer) {
  for (double phi : {0.3, 1.7, 4.4}) {
    const auto p = ac_field_distribution(kTwelve, phi);
    for (long j = 0; j < 12; ++j) {
      EXPECT_NEAR(p[std::size_t(j)], oracle::fejer_probability(12, j, phi), 1e-12);
    }
  }
}

TEST(AcField, StaircaseIsMonotone) {
  std::vector<double> phases;
  for (int i = 0; i < 240; ++i) phases.push_back(2 * kPi * (i + 0.5) / 240 - kPi / 12);
  phases.erase(phases.begin(), phases.begin() + 10);  // start at phase >= 0
  const auto top = argmax_outcomes(ac_field_image(kTwelve, phases));
  EXPECT_EQ(top.front(), 0u);
  EXPECT_EQ(top.back(), 11u);
  for (std::size_t i = 1; i < top.size(); ++i) EXPECT_GE(top[i], top[i - 1]);
}

TEST(AcField, EstimateNearTruth) {
  const auto r = simulate_ac_field_estimation(2.2, Dims{2, 2, 2, 2}, 10000, 7);
  EXPECT_NEAR(r.estimate_ml, 2.2, 0.01);
}

TEST(AcField, Reproducible) {
  const auto a = simulate_ac_field_estimation(1.0, kTwelve, 500, 42);
  const auto b = simulate_ac_field_estimation(1.0, kTwelve, 500, 42);
  EXPECT_EQ(a.counts, b.counts);
}

TargetSpinConfig table_config() {
  TargetSpinConfig cfg;
  cfg.couplings = {6000.0, 12000.0};
  return cfg;
}

constexpr double kTableTau = 1.0 / 48000.0;

TEST(Correlation, FirstStepPhasesMatchTable) {
  using S = SpinState;
  struct Row {
    S t2, t1;
    double lsq, msq;
  };
  // Rows listed as (t2, t1).
  const Row rows[] = {{S::Up, S::Up, 3 * kPi / 2, 3 * kPi / 4},
                      {S::Up, S::Down, kPi / 2, kPi / 4},
                      {S::Down, S::Up, -kPi / 2, -kPi / 4},
                      {S::Down, S::Down, -3 * kPi / 2, -3 * kPi / 4}};
  for (const Row& r : rows) {
    const auto p = first_step_phases(table_config(), {r.t1, r.t2}, kTableTau);
    EXPECT_NEAR(p.lsq, r.lsq, 1e-12);
    EXPECT_NEAR(p.msq, r.msq, 1e-12);
  }
}

TEST(Correlation, NoChangeMeansNoFlip) {
  const auto p = memory_flip_probabilities(TargetSpinConfig{}, 2e-5, {0.0, 0.0});
  EXPECT_NEAR(p[0], 0.0, 1e-14);
  EXPECT_NEAR(p[1], 0.0, 1e-14);
}

TEST(Correlation, DemultiplexesOntoMemories) {
  const auto cfg = table_config();
  EXPECT_NEAR(memory_flip_probabilities(cfg, kTableTau, {1, 0})[0], 1.0, 1e-12);
  EXPECT_NEAR(memory_flip_probabilities(cfg, kTableTau, {1, 0})[1], 0.0, 1e-12);
  EXPECT_NEAR(memory_flip_probabilities(cfg, kTableTau, {0, 1})[0], 0.0, 1e-12);
  EXPECT_NEAR(memory_flip_probabilities(cfg, kTableTau, {0, 1})[1], 1.0, 1e-12);
  for (double q : {0.1, 0.5, 0.8}) {
    const auto p = memory_flip_probabilities(cfg, kTableTau, {q, 0.3});
    EXPECT_NEAR(p[0], q, 1e-12);
    EXPECT_NEAR(p[1], 0.3, 1e-12);
  }
}

TEST(Correlation, CrosstalkFreeWithTableCouplings) {
  auto cfg = table_config();
  cfg.evolving = {true, false};
  CorrelationRun run;
  run.tau = kTableTau;
  const auto r = simulate_correlation_spectroscopy(cfg, run, 1);
  const auto [lo, hi] = std::minmax_element(r.memory[1].begin(), r.memory[1].end());
  EXPECT_LT(*hi - *lo, 1e-9);
  cfg.evolving = {false, true};
  const auto r2 = simulate_correlation_spectroscopy(cfg, run, 1);
  const auto [lo2, hi2] = std::minmax_element(r2.memory[0].begin(), r2.memory[0].end());
  EXPECT_LT(*hi2 - *lo2, 1e-9);
}

TEST(Correlation, NonIntegerWritesLeak) {
  TargetSpinConfig cfg;  // 12.4 kHz second coupling
  cfg.evolving = {true, false};
  CorrelationRun run;
  const auto r = simulate_correlation_spectroscopy(cfg, run, 1);
  const auto [lo, hi] = std::minmax_element(r.memory[1].begin(), r.memory[1].end());
  EXPECT_GT(*hi - *lo, 1e-4);
}

TEST(Correlation, DefaultPeaks) {
  const auto r = simulate_correlation_spectroscopy(TargetSpinConfig{}, CorrelationRun{}, 1);
  const double bin = 1.0 / (400 * 15e-6);
  EXPECT_LE(std::abs(r.peak[0].frequency - 2500.0), bin);
  EXPECT_LE(std::abs(r.peak[1].frequency - 3800.0), bin);
  EXPECT_GT(r.peak[0].fwhm, 0.0);
}

TEST(Correlation, SignReversalCancels) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(1e-6, 1e-3);
  for (int i = 0; i < 20; ++i) {
    TargetSpinConfig cfg;
    cfg.couplings = {u(rng) * 1e7, u(rng) * 1e7};
    CorrelationRun run;
    run.tau = u(rng);
    run.correlation_times = {0.0, 1e-5};
    cfg.evolving = {false, false};
    const auto r = simulate_correlation_spectroscopy(cfg, run, 1);
    for (std::size_t k = 0; k < 2; ++k) {
      EXPECT_NEAR(r.memory[k][0], 0.0, 1e-14);
      EXPECT_NEAR(r.memory[k][1], 0.0, 1e-14);
    }
  }
}

TEST(Correlation, DownTargetWritesNegativeValue) {
  auto cfg = table_config();
  cfg.initial = {SpinState::Down, SpinState::Up};
  // Register value -1 = 3: both memories flip.
  const auto p = memory_flip_probabilities(cfg, kTableTau, {1, 0});
  EXPECT_NEAR(p[0], 1.0, 1e-12);
  EXPECT_NEAR(p[1], 1.0, 1e-12);
}

TEST(Correlation, ReadoutFidelityAndShots) {
  CorrelationRun run;
  run.readout_fidelities = std::array<double, 2>{kReferenceReadoutFidelities[0],
                                                 kReferenceReadoutFidelities[1]};
  const auto r = simulate_correlation_spectroscopy(TargetSpinConfig{}, run, 1);
  EXPECT_NEAR(r.memory[0][0], 1.0 - 0.958, 1e-12);
  run.shots = 200;
  const auto a = simulate_correlation_spectroscopy(TargetSpinConfig{}, run, 5);
  const auto b = simulate_correlation_spectroscopy(TargetSpinConfig{}, run, 5);
  EXPECT_EQ(a.memory[0], b.memory[0]);
  for (double v : a.memory[1]) EXPECT_TRUE(v >= 0.0 && v <= 1.0);
}

TEST(Correlation, RejectsBadInput) {
  CorrelationRun run;
  run.tau = 0.0;
  EXPECT_THROW(simulate_correlation_spectroscopy(TargetSpinConfig{}, run, 1), std::invalid_argument);
  run.tau = -1.0;
  EXPECT_THROW(simulate_correlation_spectroscopy(TargetSpinConfig{}, run, 1), std::invalid_argument);
  TargetSpinConfig cfg;
  cfg.couplings = {6000.0, -1.0};
  EXPECT_THROW(simulate_correlation_spectroscopy(cfg, CorrelationRun{}, 1), std::invalid_argument);
  cfg.couplings = {6000.0};
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
}

TEST(Spectrum, NonNegativeAndPaddingInvariant) {
  std::vector<double> x(400);
  const double dt = 15e-6;
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = 0.5 - 0.5 * std::cos(2 * kPi * 3000.0 * dt * double(i));
  const Spectrum s = periodogram(x, dt);
  for (double m : s.magnitude) EXPECT_GE(m, 0.0);
  const SpectralPeak a = find_peak(s);
  const SpectralPeak b = find_peak(periodogram(x, dt, 4096));
  const double bin = 1.0 / (400 * dt);
  EXPECT_NEAR(a.frequency, 3000.0, bin);
  EXPECT_NEAR(b.frequency, a.frequency, bin);
  EXPECT_NEAR(s.frequency[1], bin, 1e-9);
}

TEST(Spectrum, RejectsDegenerateInput) {
  EXPECT_THROW(periodogram({1.0}, 1.0), std::invalid_argument);
  EXPECT_THROW(periodogram({1.0, 2.0}, 0.0), std::invalid_argument);
}

TEST(SingleMemory, Examples) {
  const double a = 6000.0;
  EXPECT_EQ(single_memory_protocol(a, 1e-4, false), 0.0);
  EXPECT_NEAR(single_memory_protocol(a, 1 / (2 * a), true), 1.0, 1e-15);
  const double dphi = kPi / 2;
  EXPECT_NEAR(single_memory_protocol(a, 1 / (4 * a), true),
              std::pow(std::sin(dphi / 2), 2), 1e-15);
  EXPECT_THROW(single_memory_protocol(a, 0.0, true), std::invalid_argument);
}

TEST(TwoMemory, Outcomes) {
  EXPECT_EQ(two_memory_qpea_example(0.0), "00");
  EXPECT_EQ(two_memory_qpea_example(kPi / 2), "01");
  EXPECT_EQ(two_memory_qpea_example(kPi), "10");
  EXPECT_EQ(two_memory_qpea_example(3 * kPi / 2), "11");
  EXPECT_EQ(two_memory_qpea_example(2 * kPi), "00");
  EXPECT_EQ(two_memory_qpea_example(kPi / 2 + 0.3), "01");
}

}  // namespace
}  // namespace qusense
