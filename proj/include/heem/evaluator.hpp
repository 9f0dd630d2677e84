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

#include "heem/grouping.hpp"
#include "heem/pauli.hpp"
#include "heem/topology.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace heem {

/// Counts of measured bitstrings for one group. Character p of a bitstring
/// is the readout of theoretical qubit p.
struct OutcomeHistogram {
  std::size_t group_id = 0;
  std::map<std::string, std::uint64_t> counts;
  std::uint64_t shots = 0;

  friend bool operator==(const OutcomeHistogram&, const OutcomeHistogram&) = default;
};

/// Diagonal of a group's weighted observable in its measurement basis.
///
/// Outcome index k reads qubit q from bit (N - 1 - q). For a pair block the
/// first qubit is the more significant bit of the block's local outcome, so
/// the weights of contiguous blocks multiply as a Kronecker product.
class GroupObservable {
public:
  /// Throws std::invalid_argument when a member is not diagonal in a block or
  /// has a non-identity letter on an unmeasured qubit.
  GroupObservable(const Group& group, const Hamiltonian& h);

  [[nodiscard]] std::size_t n_qubits() const { return n_qubits_; }
  /// sum_alpha h_alpha W_alpha[k].
  [[nodiscard]] double weight(std::uint64_t outcome) const;

private:
  struct Factor {
    std::array<std::size_t, 2> qubits;
    std::size_t arity;
    std::span<const int> signs;
  };
  struct WeightedTerm {
    double coefficient;
    std::vector<Factor> factors;
  };

  std::size_t n_qubits_;
  std::vector<WeightedTerm> terms_;
};

/// Full diagonal, length 2^N. Refuses N > 24.
std::vector<double> group_weight_vector(const Group& group, const Hamiltonian& h);

/// sum over groups of <weights, empirical frequencies>. Each group i needs a
/// histogram with group_id == i and non-zero shots.
double expected_value(const Hamiltonian& h, std::span<const Group> groups,
                      std::span<const OutcomeHistogram> histograms);

/// Same reconstruction from exact outcome probabilities (one vector of length
/// 2^N per group).
double expected_value_exact(const Hamiltonian& h, std::span<const Group> groups,
                            std::span<const std::vector<double>> distributions);

struct CostReport {
  Method method = Method::TPB;
  std::size_t groups = 0;
  std::size_t cnots = 0;
  std::size_t circuits = 0;

  friend bool operator==(const CostReport&, const CostReport&) = default;
};

/// CNOTs a plan needs on `conn` under `tau`. HEEM pays one per pair block. EM
/// pays 4 (D - 1) + 1 for a pair at device distance D: D - 1 SWAPs in and out
/// around the block's single CNOT. Throws std::runtime_error for a pair with
/// no path between its images.
CostReport count_cnots(const GroupingResult& r, const ConnectivityGraph& conn,
                       const EmbeddingMap& tau);

/// 4 (D - 1) + 1.
std::size_t em_pair_cost(std::size_t distance);

std::string outcome_bitstring(std::uint64_t outcome, std::size_t n_qubits);
/// Throws std::invalid_argument on characters other than '0'/'1' or a wrong length.
std::uint64_t parse_bitstring(std::string_view bits, std::size_t n_qubits);

} // namespace heem
