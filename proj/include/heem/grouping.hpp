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

#include "heem/bases.hpp"
#include "heem/circuit.hpp"
#include "heem/pauli.hpp"
#include "heem/topology.hpp"

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace heem {

/// A basis applied to one qubit or to an ordered qubit pair. For pairs,
/// qubits[0] is the first letter of the measured 2-letter word and the more
/// significant outcome bit.
struct Block {
  std::array<std::size_t, 2> qubits{};
  Basis basis = Basis::Z1;

  static Block local(std::size_t q, Basis b) { return {{q, q}, b}; }
  static Block pair(std::size_t first, std::size_t second, Basis b) { return {{first, second}, b}; }

  [[nodiscard]] std::size_t arity() const { return heem::arity(basis); }
  [[nodiscard]] std::span<const std::size_t> span() const { return {qubits.data(), arity()}; }

  friend bool operator==(const Block&, const Block&) = default;
};

struct MeasurementAssignment {
  std::vector<Block> blocks;

  [[nodiscard]] bool covers(std::size_t q) const;
  [[nodiscard]] std::size_t entangled_blocks() const;

  friend bool operator==(const MeasurementAssignment&, const MeasurementAssignment&) = default;
};

struct Group {
  std::vector<std::size_t> terms;
  MeasurementAssignment assignment;

  friend bool operator==(const Group&, const Group&) = default;
};

enum class Method { TPB, EM, HEEM };

std::string_view method_name(Method m);
std::optional<Method> method_from_name(std::string_view name);

/// Loop orders of the greedy engines. Unset members take the defaults:
/// largest-degree-first terms, ascending qubits, kAllBases measurements.
struct GroupingOptions {
  std::optional<std::vector<std::size_t>> term_order;
  std::optional<std::vector<std::size_t>> qubit_order;
  std::optional<std::vector<Basis>> measurement_order;
};

struct GroupingResult {
  Method method = Method::TPB;
  std::vector<Group> groups;
  std::vector<std::size_t> term_order;
  std::vector<std::size_t> qubit_order;
  std::vector<Basis> measurement_order;
  /// Theoretical-to-physical map; identity for TPB and EM.
  EmbeddingMap embedding;
  /// Set for HEEM only. EM behaves as if the device were complete.
  std::optional<ConnectivityGraph> connectivity;
};

/// Greedy largest-degree-first coloring of the Pauli graph. Each color class
/// becomes a group measured qubit by qubit.
GroupingResult tpb_grouping(const Hamiltonian& h, const GroupingOptions& options = {});

/// Tries to extend `m` (consistent with `vi`) so that `vj` is measured
/// together with `vi`. Pairs of qubits are only considered when their images
/// under `tau` are coupled in `conn`; pass `conn == nullptr` for an unconstrained
/// device. Returns std::nullopt when no extension exists.
std::optional<MeasurementAssignment>
assign_measurement(const PauliString& vi, const PauliString& vj, const MeasurementAssignment& m,
                   std::span<const Basis> measurement_order,
                   std::span<const std::size_t> qubit_order, const ConnectivityGraph* conn,
                   std::span<const std::size_t> tau);

/// Greedy grouping with entangled measurements restricted to coupled qubits.
/// Throws std::invalid_argument on an invalid embedding or order.
GroupingResult heem_grouping(const Hamiltonian& h, const ConnectivityGraph& conn,
                             const EmbeddingMap& tau, const GroupingOptions& options = {});

/// Same engine on an all-to-all device.
GroupingResult em_grouping(const Hamiltonian& h, const GroupingOptions& options = {});

/// First violated invariant of `r` against `h`, if any.
std::optional<std::string> find_grouping_error(const Hamiltonian& h, const GroupingResult& r);
inline bool verify_grouping(const Hamiltonian& h, const GroupingResult& r) {
  return !find_grouping_error(h, r).has_value();
}

/// Basis-change circuit of a whole assignment on theoretical qubit indices.
Circuit group_circuit(const MeasurementAssignment& m);

} // namespace heem
