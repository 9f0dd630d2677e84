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
#include "heem/pauli.hpp"
#include "heem/topology.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace heem {

/// Symmetric N x N matrix of pair counts with a zero diagonal.
class CompatibilityMatrix {
public:
  CompatibilityMatrix() = default;
  explicit CompatibilityMatrix(std::size_t n) : n_(n), data_(n * n, 0) {}

  [[nodiscard]] std::size_t size() const { return n_; }
  [[nodiscard]] std::uint64_t operator()(std::size_t i, std::size_t j) const {
    return data_[i * n_ + j];
  }
  /// Writes both (i, j) and (j, i).
  void set(std::size_t i, std::size_t j, std::uint64_t value) {
    data_[i * n_ + j] = value;
    data_[j * n_ + i] = value;
  }
  /// Sum over unordered off-diagonal pairs.
  [[nodiscard]] std::uint64_t upper_sum() const;

  friend bool operator==(const CompatibilityMatrix&, const CompatibilityMatrix&) = default;

private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> data_;
};

/// binom(F_b(i, j), 2) for each entangled basis b (kEntangledBases order),
/// where F_b counts the terms whose (i, j) restriction is diagonal in b.
std::array<std::uint64_t, 6> pair_basis_counts(const Hamiltonian& h, std::size_t i, std::size_t j);

/// C[i][j] = number of term pairs jointly measurable by an entangled basis on
/// qubits (i, j), summed over the six bases.
CompatibilityMatrix compatibility_matrix(const Hamiltonian& h);

/// Compatibilities landing on device edges: sum of C[i][j] over unordered
/// pairs with (tau[i], tau[j]) coupled.
std::uint64_t omega(const EmbeddingMap& tau, const CompatibilityMatrix& c,
                    const ConnectivityGraph& conn);

enum class EmbeddingStrategy { Naive, Disconnected, Connected };

std::string_view strategy_name(EmbeddingStrategy s);
std::optional<EmbeddingStrategy> strategy_from_name(std::string_view name);

/// tau[i] = i. Throws std::invalid_argument when n_theoretical > n_physical.
EmbeddingMap embed_naive(std::size_t n_theoretical, std::size_t n_physical);

/// A map together with the sequence in which theoretical qubits were placed.
struct Placement {
  EmbeddingMap tau;
  std::vector<std::size_t> order;
};

/// Greedily seats the heaviest compatible pairs on coupled physical qubits,
/// without requiring the image to be connected.
Placement place_disconnected(const CompatibilityMatrix& c, const ConnectivityGraph& conn);
/// Like place_disconnected, but every new qubit lands next to an already
/// placed one, so the image stays connected. Throws std::runtime_error when
/// no component of the device can host all qubits.
Placement place_connected(const CompatibilityMatrix& c, const ConnectivityGraph& conn);

inline EmbeddingMap embed_disconnected(const CompatibilityMatrix& c, const ConnectivityGraph& conn) {
  return place_disconnected(c, conn).tau;
}
inline EmbeddingMap embed_connected(const CompatibilityMatrix& c, const ConnectivityGraph& conn) {
  return place_connected(c, conn).tau;
}

EmbeddingMap embed(EmbeddingStrategy s, const Hamiltonian& h, const ConnectivityGraph& conn);

struct TauCompatibility {
  /// C masked by device edges under tau.
  CompatibilityMatrix c_tau;
  /// Per-qubit compatibility totals, local bases included.
  std::vector<std::uint64_t> cq;
  /// Per-basis totals indexed by static_cast<size_t>(Basis).
  std::array<std::uint64_t, 9> cm{};

  [[nodiscard]] std::uint64_t count(Basis b) const { return cm[static_cast<std::size_t>(b)]; }
};

TauCompatibility tau_compatibility(const Hamiltonian& h, const EmbeddingMap& tau,
                                   const ConnectivityGraph& conn);

struct DerivedOrders {
  std::vector<std::size_t> qubits;
  std::vector<Basis> measurements;
};

/// Qubits by descending cq (ties ascending), bases by descending cm (ties in
/// kAllBases order).
DerivedOrders derive_orders(const TauCompatibility& tc);

} // namespace heem
