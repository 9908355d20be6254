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

#include <string>

#include <json.hpp>

#include "qusense/gates/circuit.hpp"

namespace qusense {

using ordered_json = nlohmann::ordered_json;

/// {dims, ops: [{kind, targets, theta?, control_value?, matrix?}]}.
/// Field order is fixed; angles are radians. Custom matrices are emitted as
/// rows of [re, im] pairs.
inline ordered_json circuit_to_json(const Circuit& c) {
  ordered_json out;
  out["dims"] = std::vector<int>(c.dims().begin(), c.dims().end());
  ordered_json ops = ordered_json::array();
  for (const GateOp& op : c.ops()) {
    ordered_json j;
    j["kind"] = std::string(to_string(op.kind));
    j["targets"] = op.targets;
    switch (op.kind) {
      case GateKind::PhaseRot:
      case GateKind::ControlledPhase:
      case GateKind::CROT:
        j["theta"] = op.theta;
        break;
      default:
        break;
    }
    if (op.control_value) j["control_value"] = *op.control_value;
    if (op.kind == GateKind::Custom) {
      ordered_json rows = ordered_json::array();
      for (Eigen::Index r = 0; r < op.custom.rows(); ++r) {
        ordered_json row = ordered_json::array();
        for (Eigen::Index col = 0; col < op.custom.cols(); ++col) {
          row.push_back({op.custom(r, col).real(), op.custom(r, col).imag()});
        }
        rows.push_back(std::move(row));
      }
      j["matrix"] = std::move(rows);
    }
    ops.push_back(std::move(j));
  }
  out["ops"] = std::move(ops);
  return out;
}

/// Inverse of circuit_to_json. Throws std::invalid_argument on schema errors.
inline Circuit circuit_from_json(const ordered_json& j) {
  try {
    Circuit c(Dims(j.at("dims").get<std::vector<int>>()));
    for (const auto& jo : j.at("ops")) {
      const auto name = jo.at("kind").get<std::string>();
      const auto kind = gate_kind_from_string(name);
      if (!kind) throw std::invalid_argument("unknown gate kind '" + name + "'");
      GateOp op{*kind, jo.at("targets").get<std::vector<int>>()};
      if (jo.contains("theta")) op.theta = jo.at("theta").get<double>();
      if (jo.contains("control_value")) {
        op.control_value = jo.at("control_value").get<int>();
      }
      if (*kind == GateKind::Custom) {
        const auto& rows = jo.at("matrix");
        const auto n = static_cast<Eigen::Index>(rows.size());
        op.custom = Matrix(n, n);
        for (Eigen::Index r = 0; r < n; ++r) {
          const auto& row = rows.at(static_cast<std::size_t>(r));
          if (static_cast<Eigen::Index>(row.size()) != n) {
            throw std::invalid_argument("custom matrix is not square");
          }
          for (Eigen::Index col = 0; col < n; ++col) {
            const auto& e = row.at(static_cast<std::size_t>(col));
            op.custom(r, col) = cplx(e.at(0).get<double>(), e.at(1).get<double>());
          }
        }
      }
      c.add(std::move(op));
    }
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("circuit json: ") + e.what());
  }
}

}  // namespace qusense
