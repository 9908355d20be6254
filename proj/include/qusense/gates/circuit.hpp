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

#include <vector>

#include "qusense/gates/gate.hpp"

namespace qusense {

/// Ordered gate list over a fixed register.
class Circuit {
 public:
  explicit Circuit(Dims dims) : dims_(std::move(dims)) {}

  Circuit& add(GateOp op) {
    op.validate(dims_);
    ops_.push_back(std::move(op));
    return *this;
  }

  const Dims& dims() const noexcept { return dims_; }
  const std::vector<GateOp>& ops() const noexcept { return ops_; }
  std::size_t size() const noexcept { return ops_.size(); }

  /// Reversed order, each gate inverted.
  Circuit adjoint() const {
    Circuit out(dims_);
    out.ops_.reserve(ops_.size());
    for (auto it = ops_.rbegin(); it != ops_.rend(); ++it) {
      out.ops_.push_back(it->adjoint());
    }
    return out;
  }

  template <class State>
  void apply(State& state) const {
    if (!(state.dims() == dims_)) {
      throw shape_error("circuit over " + dims_.to_string() +
                        " applied to state over " + state.dims().to_string());
    }
    for (const GateOp& op : ops_) apply_gate(state, op);
  }

 private:
  Dims dims_;
  std::vector<GateOp> ops_;
};

/// Full-space unitary of `c` (later gates multiply on the left).
inline Matrix circuit_unitary(const Circuit& c,
                              std::size_t cap = kDefaultDenseCap) {
  const std::size_t n = c.dims().total();
  if (n > cap) {
    throw capacity_error("circuit_unitary: dimension " + std::to_string(n) +
                         " exceeds cap " + std::to_string(cap));
  }
  const auto en = static_cast<Eigen::Index>(n);
  Matrix u = Matrix::Identity(en, en);
  for (const GateOp& op : c.ops()) {
    detail::apply_local_columns(u, c.dims(), op.targets, op.matrix(c.dims()));
  }
  return u;
}

}  // namespace qusense
