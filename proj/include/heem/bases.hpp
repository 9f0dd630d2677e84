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

#include "heem/circuit.hpp"
#include "heem/pauli.hpp"

#include <Eigen/Dense>

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace heem {

/// Measurement bases. Declaration order is the default scan order of the
/// grouping engines: entangled bases first.
enum class Basis : std::uint8_t { Bell, OmegaX, OmegaY, OmegaZ, Chi, ChiTilde, X1, Y1, Z1 };

inline constexpr std::array<Basis, 9> kAllBases = {
    Basis::Bell, Basis::OmegaX, Basis::OmegaY, Basis::OmegaZ, Basis::Chi,
    Basis::ChiTilde, Basis::X1, Basis::Y1, Basis::Z1};

inline constexpr std::array<Basis, 6> kEntangledBases = {
    Basis::Bell, Basis::OmegaX, Basis::OmegaY, Basis::OmegaZ, Basis::Chi, Basis::ChiTilde};

inline constexpr std::array<Basis, 3> kLocalBases = {Basis::X1, Basis::Y1, Basis::Z1};

constexpr std::size_t arity(Basis b) { return b >= Basis::X1 ? 1 : 2; }

std::string_view basis_name(Basis b);
std::optional<Basis> basis_from_name(std::string_view name);

/// Single-qubit basis that measures `p` (I maps to Z1).
Basis local_basis_for(Pauli p);

/// True iff `word` (length == arity(b)) is diagonal in basis `b`.
bool in_compatible_set(Basis b, std::span<const Pauli> word);
inline bool in_compatible_set(Basis b, const PauliString& word) {
  return in_compatible_set(b, word.letters());
}

/// Members of the basis's compatible set, identity word first.
std::vector<PauliString> compatible_set(Basis b);

/// Entangled bases whose compatible sets contain both 2-letter words. An empty
/// result means the pair is not jointly measurable by any two-qubit basis.
std::vector<Basis> entangled_options(const PauliString& a, const PauliString& b);

/// Basis-change circuit applied before a computational-basis readout.
///
/// Two-qubit circuits are written little-endian: local qubit 0 is the block's
/// second (less significant) qubit and local qubit 1 its first. Every
/// entangled circuit carries exactly one CNOT(0, 1).
Circuit basis_circuit(Basis b);

/// Unitary of `basis_circuit(b)` in the block's outcome ordering (index =
/// 2 * first + second for arity 2).
Eigen::MatrixXcd basis_unitary(Basis b);

/// Kronecker product of the letters' matrices, letter 0 most significant.
Eigen::MatrixXcd word_matrix(std::span<const Pauli> word);

/// Eigenvalue signs of `word` indexed by measurement outcome. Derived once
/// from the circuits by diagonalization. Throws std::invalid_argument when
/// the word is not in the basis's compatible set.
std::span<const int> weight_vector(Basis b, std::span<const Pauli> word);
inline std::span<const int> weight_vector(Basis b, const PauliString& word) {
  return weight_vector(b, word.letters());
}

} // namespace heem
