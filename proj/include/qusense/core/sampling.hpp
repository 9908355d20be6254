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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "qusense/core/errors.hpp"

namespace qusense {

/// Checks that `dist` is a probability vector within `tol`.
inline void check_distribution(std::span<const double> dist,
                               double tol = kTolerance) {
  if (dist.empty()) {
    throw std::invalid_argument("distribution is empty");
  }
  double total = 0.0;
  for (std::size_t k = 0; k < dist.size(); ++k) {
    if (!std::isfinite(dist[k]) || dist[k] < -tol) {
      throw std::invalid_argument("distribution entry " + std::to_string(k) +
                                  " is " + std::to_string(dist[k]));
    }
    total += dist[k];
  }
  if (std::abs(total - 1.0) > tol) {
    throw std::invalid_argument("distribution sums to " +
                                std::to_string(total));
  }
}

/// Multinomial outcome counts for `shots` draws from `dist`.
///
/// Draws one binomial per outcome on the conditional remaining mass, so the
/// cost is O(|dist|) regardless of `shots`. Results are reproducible for a
/// fixed seed with a given standard library.
inline std::vector<std::uint64_t> sample_outcomes(std::span<const double> dist,
                                                  std::uint64_t shots,
                                                  std::uint64_t seed) {
  if (shots < 1) {
    throw std::invalid_argument("sample_outcomes: shots must be >= 1");
  }
  check_distribution(dist);
  std::mt19937_64 rng(seed);
  std::vector<std::uint64_t> counts(dist.size(), 0);
  std::size_t last = dist.size() - 1;
  while (last > 0 && dist[last] <= 0.0) --last;
  std::uint64_t left = shots;
  double mass_left = 1.0;
  for (std::size_t k = 0; k < last && left > 0; ++k) {
    const double p = std::max(0.0, dist[k]);
    double q = mass_left > 0.0 ? p / mass_left : 0.0;
    q = std::clamp(q, 0.0, 1.0);
    std::binomial_distribution<std::uint64_t> draw(left, q);
    counts[k] = draw(rng);
    left -= counts[k];
    mass_left -= p;
  }
  counts[last] += left;
  return counts;
}

/// Seed for the `index`-th independent stream derived from a base seed.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  // splitmix64 finalizer
  std::uint64_t z = base + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace qusense
