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
#include <complex>
#include <stdexcept>
#include <vector>

#include <unsupported/Eigen/FFT>

namespace qusense {

struct Spectrum {
  std::vector<double> frequency;  // Hz, 0 .. Nyquist
  std::vector<double> magnitude;  // |S(f)|
};

struct SpectralPeak {
  double frequency = 0.0;
  double magnitude = 0.0;
  double fwhm = 0.0;  // full width at half maximum of |S|^2, Hz
  std::size_t bin = 0;
};

/// Magnitude periodogram of a uniformly sampled series: mean removed,
/// rectangular window, zero-padded to `padded_length` samples when that
/// exceeds the series length. Bin spacing is 1 / (padded_length * dt).
inline Spectrum periodogram(const std::vector<double>& series, double dt,
                            std::size_t padded_length = 0) {
  if (series.size() < 2) throw std::invalid_argument("periodogram: need >= 2 samples");
  if (!(dt > 0.0)) throw std::invalid_argument("periodogram: dt must be > 0");
  const std::size_t m = std::max(padded_length, series.size());
  double mean = 0.0;
  for (double v : series) mean += v;
  mean /= static_cast<double>(series.size());
  std::vector<double> x(m, 0.0);
  for (std::size_t i = 0; i < series.size(); ++i) x[i] = series[i] - mean;

  Eigen::FFT<double> fft;
  std::vector<std::complex<double>> xf;
  fft.fwd(xf, x);

  Spectrum s;
  const std::size_t half = m / 2 + 1;
  s.frequency.resize(half);
  s.magnitude.resize(half);
  for (std::size_t k = 0; k < half; ++k) {
    s.frequency[k] = static_cast<double>(k) / (static_cast<double>(m) * dt);
    s.magnitude[k] = std::abs(xf[k]);
  }
  return s;
}

/// Largest non-DC bin and its half-power width (linear interpolation between
/// bins; bounded by the spectrum edges).
inline SpectralPeak find_peak(const Spectrum& s) {
  if (s.magnitude.size() < 2) throw std::invalid_argument("find_peak: empty spectrum");
  SpectralPeak p;
  p.bin = static_cast<std::size_t>(
      std::max_element(s.magnitude.begin() + 1, s.magnitude.end()) - s.magnitude.begin());
  p.frequency = s.frequency[p.bin];
  p.magnitude = s.magnitude[p.bin];
  const double half = 0.5 * p.magnitude * p.magnitude;
  auto power = [&](std::size_t k) { return s.magnitude[k] * s.magnitude[k]; };
  auto crossing = [&](std::size_t inside, std::size_t outside) {
    const double a = power(inside);
    const double b = power(outside);
    const double t = a == b ? 0.0 : (a - half) / (a - b);
    return s.frequency[inside] + t * (s.frequency[outside] - s.frequency[inside]);
  };
  double left = s.frequency.front();
  for (std::size_t k = p.bin; k > 0; --k) {
    if (power(k - 1) <= half) {
      left = crossing(k, k - 1);
      break;
    }
  }
  double right = s.frequency.back();
  for (std::size_t k = p.bin; k + 1 < s.magnitude.size(); ++k) {
    if (power(k + 1) <= half) {
      right = crossing(k, k + 1);
      break;
    }
  }
  p.fwhm = right - left;
  return p;
}

}  // namespace qusense
