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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qusense/core/ops.hpp"

namespace qusense {

enum class GateKind {
  Hadamard,
  HadamardY,  // pi/2 rotation about y; the hardware stand-in for H
  HadamardYDagger,
  Chrestenson,
  ChrestensonDagger,
  PhaseRot,         // diag(e^{i theta t}) on one qudit
  ControlledPhase,  // e^{i theta c t}, or e^{i theta t} when c == control_value
  CROT,             // exp(-i theta X / 2) on a qubit target when c == value
  Custom,
};

inline std::string_view to_string(GateKind k) {
  switch (k) {
    case GateKind::Hadamard: return "hadamard";
    case GateKind::HadamardY: return "hadamard_y";
    case GateKind::HadamardYDagger: return "hadamard_y_dagger";
    case GateKind::Chrestenson: return "chrestenson";
    case GateKind::ChrestensonDagger: return "chrestenson_dagger";
    case GateKind::PhaseRot: return "phase";
    case GateKind::ControlledPhase: return "controlled_phase";
    case GateKind::CROT: return "crot";
    case GateKind::Custom: return "custom";
  }
  return "unknown";
}

inline std::optional<GateKind> gate_kind_from_string(std::string_view s) {
  for (GateKind k :
       {GateKind::Hadamard, GateKind::HadamardY, GateKind::HadamardYDagger,
        GateKind::Chrestenson, GateKind::ChrestensonDagger, GateKind::PhaseRot,
        GateKind::ControlledPhase, GateKind::CROT, GateKind::Custom}) {
    if (to_string(k) == s) return k;
  }
  return std::nullopt;
}

/// d-point DFT matrix, entries omega^{jk}/sqrt(d) with omega = e^{2 pi i/d}.
inline Matrix chrestenson(int d) {
  if (d < 2) {
    throw std::invalid_argument("chrestenson: dimension " + std::to_string(d) +
                                " < 2");
  }
  Matrix c(d, d);
  const double norm = 1.0 / std::sqrt(static_cast<double>(d));
  for (int j = 0; j < d; ++j) {
    for (int k = 0; k < d; ++k) {
      // Reduce jk mod d so large exponents stay exact.
      const double angle = 2.0 * std::numbers::pi * ((j * k) % d) / d;
      c(j, k) = std::polar(norm, angle);
    }
  }
  return c;
}

inline Matrix hadamard_matrix() { return chrestenson(2); }

inline Matrix hadamard_y_matrix() {
  const double s = 1.0 / std::numbers::sqrt2;
  Matrix m(2, 2);
  m << s, -s, s, s;
  return m;
}

inline bool is_unitary(const Matrix& u, double tol = kTolerance) {
  if (u.rows() != u.cols()) return false;
  const Matrix id = Matrix::Identity(u.rows(), u.cols());
  return (u.adjoint() * u - id).norm() <= tol;
}

/// One gate of a register circuit.
///
/// Targets are qudit labels. For controlled kinds, targets = {control, target}.
/// Angles are stored unreduced; `same_angle` compares them modulo 2 pi.
struct GateOp {
  GateKind kind = GateKind::Custom;
  std::vector<int> targets;
  double theta = 0.0;
  std::optional<int> control_value;
  Matrix custom;  // Custom only

  /// Local matrix over `targets` (first target most significant).
  Matrix matrix(const Dims& dims) const;

  /// Inverse gate (reversed phases, conjugated local transforms).
  GateOp adjoint() const;

  /// Throws shape_error if this op cannot act on `dims`.
  void validate(const Dims& dims) const;
};

inline bool same_angle(double a, double b, double tol = kTolerance) {
  const double two_pi = 2.0 * std::numbers::pi;
  double diff = std::fmod(a - b, two_pi);
  if (diff < 0) diff += two_pi;
  return diff <= tol || two_pi - diff <= tol;
}

namespace detail {

inline GateOp make_op(GateKind kind, std::vector<int> targets, double theta = 0.0,
                      std::optional<int> control_value = {}) {
  GateOp op;
  op.kind = kind;
  op.targets = std::move(targets);
  op.theta = theta;
  op.control_value = control_value;
  return op;
}

}  // namespace detail

inline GateOp hadamard(int q) { return detail::make_op(GateKind::Hadamard, {q}); }
inline GateOp hadamard_y(int q) { return detail::make_op(GateKind::HadamardY, {q}); }
inline GateOp chrestenson_gate(int q) { return detail::make_op(GateKind::Chrestenson, {q}); }
inline GateOp chrestenson_dagger_gate(int q) {
  return detail::make_op(GateKind::ChrestensonDagger, {q});
}
inline GateOp phase_rot(int q, double theta) {
  return detail::make_op(GateKind::PhaseRot, {q}, theta);
}
inline GateOp controlled_phase(int control, int target, double theta,
                               std::optional<int> control_value = {}) {
  return detail::make_op(GateKind::ControlledPhase, {control, target}, theta, control_value);
}
inline GateOp crot(int control, int target, int control_value = 1,
                   double theta = std::numbers::pi) {
  return detail::make_op(GateKind::CROT, {control, target}, theta, control_value);
}
inline GateOp custom_gate(std::vector<int> targets, Matrix u) {
  GateOp op = detail::make_op(GateKind::Custom, std::move(targets));
  op.custom = std::move(u);
  return op;
}

/// Controlled-NOT on qubits as a custom two-qudit gate.
inline GateOp cnot(int control, int target) {
  Matrix m = Matrix::Zero(4, 4);
  m(0, 0) = m(1, 1) = 1.0;
  m(2, 3) = m(3, 2) = 1.0;
  return custom_gate({control, target}, std::move(m));
}

inline void GateOp::validate(const Dims& dims) const {
  auto need_targets = [&](std::size_t n) {
    if (targets.size() != n) {
      throw shape_error(std::string(to_string(kind)) + " expects " +
                        std::to_string(n) + " target(s), got " +
                        std::to_string(targets.size()));
    }
  };
  for (int t : targets) {
    if (t < 0 || static_cast<std::size_t>(t) >= dims.size()) {
      throw shape_error(std::string(to_string(kind)) + ": qudit " +
                        std::to_string(t) + " not in register " +
                        dims.to_string());
    }
  }
  auto dim_of = [&](std::size_t i) {
    return dims[static_cast<std::size_t>(targets[i])];
  };
  switch (kind) {
    case GateKind::Hadamard:
    case GateKind::HadamardY:
    case GateKind::HadamardYDagger:
      need_targets(1);
      if (dim_of(0) != 2) {
        throw shape_error(std::string(to_string(kind)) +
                          " needs a qubit target, qudit " +
                          std::to_string(targets[0]) + " has dimension " +
                          std::to_string(dim_of(0)));
      }
      break;
    case GateKind::Chrestenson:
    case GateKind::ChrestensonDagger:
    case GateKind::PhaseRot:
      need_targets(1);
      break;
    case GateKind::ControlledPhase:
    case GateKind::CROT:
      need_targets(2);
      if (targets[0] == targets[1]) {
        throw shape_error("controlled gate: control and target coincide");
      }
      if (control_value &&
          (*control_value < 0 || *control_value >= dim_of(0))) {
        throw shape_error("controlled gate: control value " +
                          std::to_string(*control_value) +
                          " outside control dimension");
      }
      if (kind == GateKind::CROT) {
        if (dim_of(1) != 2) {
          throw shape_error("crot needs a qubit target");
        }
        if (!control_value) {
          throw shape_error("crot needs a control value");
        }
      }
      break;
    case GateKind::Custom: {
      if (targets.empty()) throw shape_error("custom gate without targets");
      Eigen::Index sub = 1;
      for (std::size_t i = 0; i < targets.size(); ++i) sub *= dim_of(i);
      if (custom.rows() != sub || custom.cols() != sub) {
        throw shape_error("custom gate matrix is " +
                          std::to_string(custom.rows()) + "x" +
                          std::to_string(custom.cols()) +
                          ", targets span dimension " + std::to_string(sub));
      }
      if (!is_unitary(custom)) {
        throw invariant_error("custom gate matrix is not unitary");
      }
      break;
    }
  }
}

inline Matrix GateOp::matrix(const Dims& dims) const {
  validate(dims);
  switch (kind) {
    case GateKind::Hadamard: return hadamard_matrix();
    case GateKind::HadamardY: return hadamard_y_matrix();
    case GateKind::HadamardYDagger: return hadamard_y_matrix().adjoint();
    case GateKind::Chrestenson:
      return chrestenson(dims[static_cast<std::size_t>(targets[0])]);
    case GateKind::ChrestensonDagger:
      return chrestenson(dims[static_cast<std::size_t>(targets[0])]).adjoint();
    case GateKind::PhaseRot: {
      const int d = dims[static_cast<std::size_t>(targets[0])];
      Matrix m = Matrix::Zero(d, d);
      for (int t = 0; t < d; ++t) m(t, t) = std::polar(1.0, theta * t);
      return m;
    }
    case GateKind::ControlledPhase: {
      const int dc = dims[static_cast<std::size_t>(targets[0])];
      const int dt = dims[static_cast<std::size_t>(targets[1])];
      Matrix m = Matrix::Zero(dc * dt, dc * dt);
      for (int c = 0; c < dc; ++c) {
        for (int t = 0; t < dt; ++t) {
          double angle = 0.0;
          if (control_value) {
            angle = c == *control_value ? theta * t : 0.0;
          } else {
            angle = theta * c * t;
          }
          m(c * dt + t, c * dt + t) = std::polar(1.0, angle);
        }
      }
      return m;
    }
    case GateKind::CROT: {
      const int dc = dims[static_cast<std::size_t>(targets[0])];
      Matrix m = Matrix::Identity(dc * 2, dc * 2);
      const int c = *control_value;
      const double ch = std::cos(theta / 2.0);
      const double sh = std::sin(theta / 2.0);
      m(2 * c, 2 * c) = ch;
      m(2 * c + 1, 2 * c + 1) = ch;
      m(2 * c, 2 * c + 1) = cplx(0.0, -sh);
      m(2 * c + 1, 2 * c) = cplx(0.0, -sh);
      return m;
    }
    case GateKind::Custom: return custom;
  }
  throw std::logic_error("GateOp::matrix: unhandled kind");
}

inline GateOp GateOp::adjoint() const {
  GateOp out = *this;
  switch (kind) {
    case GateKind::Hadamard: break;
    case GateKind::HadamardY: out.kind = GateKind::HadamardYDagger; break;
    case GateKind::HadamardYDagger: out.kind = GateKind::HadamardY; break;
    case GateKind::Chrestenson: out.kind = GateKind::ChrestensonDagger; break;
    case GateKind::ChrestensonDagger: out.kind = GateKind::Chrestenson; break;
    case GateKind::PhaseRot:
    case GateKind::ControlledPhase:
    case GateKind::CROT: out.theta = -theta; break;
    case GateKind::Custom: out.custom = custom.adjoint(); break;
  }
  return out;
}

inline void apply_gate(PureState& psi, const GateOp& gate) {
  apply_local(psi, gate.targets, gate.matrix(psi.dims()));
}

inline void apply_gate(MixedState& rho, const GateOp& gate) {
  apply_local(rho, gate.targets, gate.matrix(rho.dims()));
}

}  // namespace qusense
