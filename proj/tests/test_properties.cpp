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

#include <gtest/gtest.h>

#include "properties.hpp"

namespace qusense::testing {
namespace {

constexpr int kInstances = 1000;

void expect_clean(const PropertyReport& r) {
  EXPECT_EQ(r.failures, 0) << r.name << ": " << r.first_failure;
}

TEST(Properties, Unitarity) { expect_clean(check_unitarity(kInstances, 101)); }
TEST(Properties, DigitRoundTrip) { expect_clean(check_digit_roundtrip(kInstances, 102)); }
TEST(Properties, QftIdentity) { expect_clean(check_qft_identity(kInstances, 103)); }
TEST(Properties, DephasingPositivity) { expect_clean(check_dephasing_positivity(kInstances, 104)); }
TEST(Properties, SignReversal) { expect_clean(check_sign_reversal(kInstances, 105)); }

}  // namespace
}  // namespace qusense::testing
