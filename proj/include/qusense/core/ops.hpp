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
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "qusense/core/state.hpp"

namespace qusense {

namespace detail {

// Offsets of each sub-register basis state (targets in the given order, the
// first target most significant) and the list of base indices whose target
// digits are all zero.
struct LocalLayout {
  std::vector<std::size_t> offsets;
  std::vector<std::size_t> bases;
};

inline LocalLayout local_layout(const Dims& dims, std::span<const int> targets) {
  std::vector<bool> seen(dims.size(), false);
  std::size_t sub = 1;
  for (int t : targets) {
    if (t < 0 || static_cast<std::size_t>(t) >= dims.size()) {
      throw shape_error("target qudit " + std::to_string(t) +
                        " not in register " + dims.to_string());
    }
    if (seen[static_cast<std::size_t>(t)]) {
      throw shape_error("target qudit " + std::to_string(t) + " repeated");
    }
    seen[static_cast<std::size_t>(t)] = true;
    sub *= static_cast<std::size_t>(dims[static_cast<std::size_t>(t)]);
  }

  LocalLayout out;
  out.offsets.resize(sub);
  for (std::size_t s = 0; s < sub; ++s) {
    std::size_t rest = s;
    std::size_t off = 0;
    for (std::size_t i = targets.size(); i-- > 0;) {
      const auto q = static_cast<std::size_t>(targets[i]);
      const auto d = static_cast<std::size_t>(dims[q]);
      off += (rest % d) * dims.weight(q);
      rest /= d;
    }
    out.offsets[s] = off;
  }

  out.bases.reserve(dims.total() / sub);
  for (std::size_t k = 0; k < dims.total(); ++k) {
    bool zero = true;
    for (int t : targets) {
      if (digit_of(k, static_cast<std::size_t>(t), dims) != 0) {
        zero = false;
        break;
      }
    }
    if (zero) out.bases.push_back(k);
  }
  return out;
}

inline void check_local_shape(const Dims& dims, std::span<const int> targets,
                              const Matrix& u, const LocalLayout& layout) {
  const auto sub = static_cast<Eigen::Index>(layout.offsets.size());
  if (u.rows() != sub || u.cols() != sub) {
    std::string what = "local operator is " + std::to_string(u.rows()) + "x" +
                       std::to_string(u.cols()) + " but targets {";
    for (std::size_t i = 0; i < targets.size(); ++i) {
      if (i) what += ",";
      what += std::to_string(targets[i]);
    }
    throw shape_error(what + "} of " + dims.to_string() + " span dimension " +
                      std::to_string(sub));
  }
}

// Left-multiplies every column of `m` by `u` embedded on `targets`.
inline void apply_local_columns(Matrix& m, const Dims& dims,
                                std::span<const int> targets, const Matrix& u) {
  const LocalLayout layout = local_layout(dims, targets);
  check_local_shape(dims, targets, u, layout);
  const auto sub = static_cast<Eigen::Index>(layout.offsets.size());
  Vector in(sub);
  Vector out(sub);
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    for (std::size_t base : layout.bases) {
      for (Eigen::Index s = 0; s < sub; ++s) {
        in(s) = m(static_cast<Eigen::Index>(base + layout.offsets[s]), c);
      }
      out.noalias() = u * in;
      for (Eigen::Index s = 0; s < sub; ++s) {
        m(static_cast<Eigen::Index>(base + layout.offsets[s]), c) = out(s);
      }
    }
  }
}

}  // namespace detail

/// psi <- U psi with U acting on `targets` (first target most significant).
inline void apply_local(PureState& psi, std::span<const int> targets,
                        const Matrix& u) {
  Matrix col = psi.amplitudes();
  detail::apply_local_columns(col, psi.dims(), targets, u);
  psi.mutable_amplitudes() = col.col(0);
}

/// rho <- U rho U^dagger with U acting on `targets`.
inline void apply_local(MixedState& rho, std::span<const int> targets,
                        const Matrix& u) {
  Matrix& m = rho.mutable_rho();
  detail::apply_local_columns(m, rho.dims(), targets, u);
  m.adjointInPlace();
  detail::apply_local_columns(m, rho.dims(), targets, u);
  m.adjointInPlace();
}

/// Reduced state on `keep` (qudit labels; result ordered by label).
inline MixedState partial_trace(const MixedState& state,
                                std::vector<int> keep) {
  const Dims& dims = state.dims();
  if (keep.empty()) {
    throw std::invalid_argument("partial_trace: keep set is empty");
  }
  std::sort(keep.begin(), keep.end());
  if (std::adjacent_find(keep.begin(), keep.end()) != keep.end()) {
    throw std::invalid_argument("partial_trace: duplicate qudit in keep set");
  }
  std::vector<int> traced;
  std::vector<int> kept_dims;
  for (std::size_t q = 0, i = 0; q < dims.size(); ++q) {
    if (i < keep.size() && keep[i] == static_cast<int>(q)) {
      kept_dims.push_back(dims[q]);
      ++i;
    } else {
      traced.push_back(static_cast<int>(q));
    }
  }
  for (int q : keep) {
    if (q < 0 || static_cast<std::size_t>(q) >= dims.size()) {
      throw std::invalid_argument("partial_trace: qudit " + std::to_string(q) +
                                  " not in register " + dims.to_string());
    }
  }
  if (traced.empty()) return state;

  // Full index = kept offset + traced offset.
  const detail::LocalLayout kept = detail::local_layout(dims, keep);
  const detail::LocalLayout rest = detail::local_layout(dims, traced);
  const auto m = static_cast<Eigen::Index>(kept.offsets.size());
  Matrix reduced = Matrix::Zero(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) {
      cplx acc = 0.0;
      for (std::size_t t : rest.offsets) {
        acc += state(kept.offsets[static_cast<std::size_t>(i)] + t,
                     kept.offsets[static_cast<std::size_t>(j)] + t);
      }
      reduced(i, j) = acc;
    }
  }
  return MixedState(Dims(kept_dims), std::move(reduced));
}

/// Outcome probabilities in the computational basis.
inline std::vector<double> measure_distribution(const PureState& psi) {
  std::vector<double> p(psi.dims().total());
  for (std::size_t k = 0; k < p.size(); ++k) p[k] = std::norm(psi[k]);
  return p;
}

inline std::vector<double> measure_distribution(const MixedState& rho) {
  std::vector<double> p(rho.dims().total());
  // Diagonal entries of a valid state are >= -tol; clamp the roundoff.
  for (std::size_t k = 0; k < p.size(); ++k) {
    p[k] = std::max(0.0, rho(k, k).real());
  }
  return p;
}

/// Tr(rho^2).
inline double purity(const MixedState& rho) {
  return rho.rho().cwiseAbs2().sum();
}

inline double purity(const PureState& psi) {
  const double n2 = psi.amplitudes().squaredNorm();
  return n2 * n2;
}

}  // namespace qusense
