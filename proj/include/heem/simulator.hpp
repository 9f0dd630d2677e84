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
#include "heem/evaluator.hpp"
#include "heem/grouping.hpp"
#include "heem/pauli.hpp"
#include "heem/random.hpp"

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace heem {

inline constexpr std::size_t kMaxSimulatedQubits = 12;

/// Dense pure state. Amplitude index k stores qubit q in bit (N - 1 - q), so
/// qubit 0 is the leftmost character of a bitstring.
class StateVector {
public:
  /// Throws std::invalid_argument unless the length is 2^N with N <= 12 and
  /// the norm is 1 within 1e-10.
  explicit StateVector(std::vector<std::complex<double>> amplitudes);

  static StateVector zeros(std::size_t n_qubits);
  /// Haar-like random state from normally distributed amplitudes.
  static StateVector random(std::size_t n_qubits, Rng& rng);

  [[nodiscard]] std::size_t n_qubits() const { return n_qubits_; }
  [[nodiscard]] std::span<const std::complex<double>> amplitudes() const { return amps_; }
  [[nodiscard]] double norm() const;

  /// Throws std::out_of_range for qubit indices >= N.
  void apply(const Gate& g);
  void apply(const Circuit& c);

  /// |amplitude|^2 per computational outcome.
  [[nodiscard]] std::vector<double> probabilities() const;

private:
  std::size_t n_qubits_ = 0;
  std::vector<std::complex<double>> amps_;
};

/// Readout distribution after the group's basis-change circuit.
std::vector<double> outcome_distribution(const StateVector& psi, const Group& group);

/// Multinomial draw by inverse CDF on Rng(seed, group_id); deterministic in
/// both. Throws std::invalid_argument when shots == 0.
OutcomeHistogram sample_histogram(std::span<const double> dist, std::size_t n_qubits,
                                  std::uint64_t shots, std::uint64_t seed,
                                  std::size_t group_id = 0);

/// <psi|P|psi> from the action of P on basis states.
std::complex<double> pauli_expectation(const StateVector& psi, const PauliString& p);

/// <psi|H|psi>; the imaginary part is returned for diagnostics.
std::complex<double> dense_expectation_complex(const StateVector& psi, const Hamiltonian& h);
double dense_expectation(const StateVector& psi, const Hamiltonian& h);

} // namespace heem
