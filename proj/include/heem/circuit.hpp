// Copyright 2026 The HEEM Authors
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

#include <Eigen/Dense>

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

namespace heem {

enum class GateKind { H, S, Sdg, U2, CNOT };

std::string_view gate_name(GateKind kind);
std::optional<GateKind> gate_from_name(std::string_view name);

/// S = diag(1, i); H = [[1,1],[1,-1]]/sqrt2;
/// U2(phi, lambda) = [[1, -e^{i lambda}], [e^{i phi}, e^{i(phi+lambda)}]]/sqrt2.
/// For CNOT, qubits[0] is the control and qubits[1] the target.
struct Gate {
  GateKind kind = GateKind::H;
  std::array<std::size_t, 2> qubits{};
  double phi = 0.0;
  double lambda = 0.0;

  [[nodiscard]] std::size_t arity() const { return kind == GateKind::CNOT ? 2 : 1; }

  friend bool operator==(const Gate&, const Gate&) = default;
};

inline Gate h_gate(std::size_t q) { return {GateKind::H, {q, q}}; }
inline Gate s_gate(std::size_t q) { return {GateKind::S, {q, q}}; }
inline Gate sdg_gate(std::size_t q) { return {GateKind::Sdg, {q, q}}; }
inline Gate u2_gate(std::size_t q, double phi, double lambda) {
  return {GateKind::U2, {q, q}, phi, lambda};
}
inline Gate cnot_gate(std::size_t control, std::size_t target) {
  return {GateKind::CNOT, {control, target}};
}

/// Gates in time order.
using Circuit = std::vector<Gate>;

std::size_t count_cnots(const Circuit& c);

/// 2x2 matrix of a single-qubit gate. Throws std::invalid_argument for CNOT.
Eigen::Matrix2cd gate_matrix(const Gate& g);

} // namespace heem
