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

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "qusense/noise/dephasing.hpp"
#include "test_util.hpp"

namespace qusense {
namespace {

constexpr double kPi = std::numbers::pi;

MixedState plus_state() {
  Vector v(2);
  v << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  return MixedState(PureState(Dims{2}, v));
}

TEST(Dephase, ZeroStrengthIsIdentity) {
  std::mt19937_64 rng(1);
  const Dims dims{3, 2};
  const MixedState rho = testing::random_mixed(dims, rng);
  const MixedState out = dephase(rho, DephasingSpec::uniform(dims, 0.0));
  EXPECT_LT((out.rho() - rho.rho()).norm(), 1e-15);
}

TEST(Dephase, FullStrengthIsDiagonal) {
  std::mt19937_64 rng(2);
  const Dims dims{3, 2, 2};
  const MixedState rho = testing::random_mixed(dims, rng);
  const MixedState out = dephase(rho, DephasingSpec::uniform(dims, 1.0));
  const Matrix diag = rho.rho().diagonal().asDiagonal();
  EXPECT_LT((out.rho() - diag).norm(), 1e-15);
}

TEST(Dephase, PlusStateBecomesMaximallyMixed) {
  const MixedState out = dephase(plus_state(), DephasingSpec{{1.0}});
  EXPECT_LT((out.rho() - Matrix::Identity(2, 2) / 2.0).norm(), 1e-15);
  EXPECT_NEAR(purity(out), 0.5, 1e-15);
}

TEST(Dephase, PartialStrengthScalesCoherences) {
  const MixedState out = dephase(plus_state(), DephasingSpec{{0.3}});
  EXPECT_NEAR(out(0, 1).real(), 0.5 * 0.7, 1e-15);
  EXPECT_NEAR(out(0, 0).real(), 0.5, 1e-15);
}

TEST(Dephase, ProductOverDifferingQudits) {
  std::mt19937_64 rng(3);
  const Dims dims{2, 3};
  const MixedState rho = testing::random_mixed(dims, rng);
  const MixedState out = dephase(rho, DephasingSpec{{0.2, 0.5}});
  // |0,1> vs |1,2>: both qudits differ.
  const auto a = static_cast<Eigen::Index>(1);
  const auto b = static_cast<Eigen::Index>(5);
  EXPECT_LT(std::abs(out(a, b) - rho(a, b) * 0.8 * 0.5), 1e-15);
  // |0,1> vs |0,2>: only the qutrit differs.
  EXPECT_LT(std::abs(out(1, 2) - rho(1, 2) * 0.5), 1e-15);
}

TEST(Dephase, ChannelProperties) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 50; ++i) {
    const Dims dims = testing::random_dims(rng, 3, 3, 27);
    const MixedState rho = testing::random_mixed(dims, rng);
    DephasingSpec spec;
    for (std::size_t q = 0; q < dims.size(); ++q) spec.lambda.push_back(u(rng));
    const MixedState out = dephase(rho, spec);
    EXPECT_NEAR(out.rho().trace().real(), 1.0, 1e-12);
    EXPECT_LT((out.rho() - out.rho().adjoint()).norm(), 1e-14);
    EXPECT_TRUE(out.check_positive(1e-12));
    const auto full = DephasingSpec::uniform(dims, 1.0);
    const MixedState once = dephase(rho, full);
    EXPECT_LT((dephase(once, full).rho() - once.rho()).norm(), 1e-15);
  }
}

TEST(Dephase, RejectsBadSpec) {
  EXPECT_THROW(dephase(plus_state(), DephasingSpec{{1.5}}), std::invalid_argument);
  EXPECT_THROW(dephase(plus_state(), DephasingSpec{{-0.1}}), std::invalid_argument);
  EXPECT_THROW(dephase(plus_state(), DephasingSpec{{0.1, 0.1}}), shape_error);
}

double sum_squares(const std::vector<double>& p) {
  double s = 0.0;
  for (double v : p) s += v * v;
  return s;
}

TEST(PurityStudy, SingleQubitMappingsAgree) {
  const auto q = purity_study(1, Mapping::QFT);
  const auto h = purity_study(1, Mapping::LocalH);
  EXPECT_NEAR(q.mean, h.mean, 1e-14);
}

TEST(PurityStudy, GridPhasesArePure) {
  for (std::size_t n = 1; n <= 4; ++n) {
    const std::size_t big_n = std::size_t{1} << n;
    const auto s = purity_study(n, Mapping::QFT, big_n);
    for (double p : s.purity) EXPECT_NEAR(p, 1.0, 1e-12);
  }
}

TEST(PurityStudy, MatchesDiagonalOracle) {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (Mapping m : {Mapping::QFT, Mapping::LocalH}) {
      const auto s = purity_study(n, m, 32);
      for (std::size_t i = 0; i < s.phis.size(); ++i) {
        const auto p = readout(prepare_phase_state(Dims::qubits(n), s.phis[i]), m);
        EXPECT_NEAR(s.purity[i], sum_squares(p), 1e-10);
      }
    }
  }
}

TEST(PurityStudy, QftKeepsPurityLocalHLoses) {
  double prev_local = 2.0;
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto q = purity_study(n, Mapping::QFT);
    const auto h = purity_study(n, Mapping::LocalH);
    if (n >= 2) {
      EXPECT_GT(q.mean, h.mean);
    } else {
      EXPECT_GE(q.mean + 1e-12, h.mean);
    }
    EXPECT_LT(h.mean, prev_local);
    prev_local = h.mean;
    EXPECT_GT(q.std_error, 0.0);
  }
}

TEST(PurityStudy, MixedRadixRegister) {
  const auto q = purity_study(Dims{3, 2, 2}, Mapping::QFT, 64);
  const auto h = purity_study(Dims{3, 2, 2}, Mapping::LocalH, 64);
  EXPECT_GT(q.mean, h.mean);
  EXPECT_THROW(purity_study(0, Mapping::QFT), std::invalid_argument);
  (void)kPi;
}

}  // namespace
}  // namespace qusense
