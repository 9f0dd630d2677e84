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

#include "heem/simulator.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace heem {

namespace {

std::size_t qubits_for_length(std::size_t len) {
  if (len == 0 || !std::has_single_bit(len)) {
    throw std::invalid_argument("state length must be a power of two");
  }
  const auto n = static_cast<std::size_t>(std::countr_zero(len));
  if (n > kMaxSimulatedQubits) {
    throw std::invalid_argument("state has " + std::to_string(n) + " qubits; the simulator caps at " +
                                std::to_string(kMaxSimulatedQubits));
  }
  return n;
}

} // namespace

StateVector::StateVector(std::vector<std::complex<double>> amplitudes)
    : n_qubits_(qubits_for_length(amplitudes.size())), amps_(std::move(amplitudes)) {
  if (std::abs(norm() - 1.0) > 1e-10) {
    throw std::invalid_argument("state is not normalized");
  }
}

StateVector StateVector::zeros(std::size_t n_qubits) {
  if (n_qubits > kMaxSimulatedQubits) {
    throw std::invalid_argument("too many qubits to simulate");
  }
  std::vector<std::complex<double>> amps(std::size_t{1} << n_qubits, 0.0);
  amps[0] = 1.0;
  return StateVector(std::move(amps));
}

StateVector StateVector::random(std::size_t n_qubits, Rng& rng) {
  if (n_qubits > kMaxSimulatedQubits) {
    throw std::invalid_argument("too many qubits to simulate");
  }
  std::vector<std::complex<double>> amps(std::size_t{1} << n_qubits);
  double norm2 = 0.0;
  for (auto& a : amps) {
    a = {rng.normal(), rng.normal()};
    norm2 += std::norm(a);
  }
  const double scale = 1.0 / std::sqrt(norm2);
  for (auto& a : amps) {
    a *= scale;
  }
  return StateVector(std::move(amps));
}

double StateVector::norm() const {
  double s = 0.0;
  for (const auto& a : amps_) {
    s += std::norm(a);
  }
  return std::sqrt(s);
}

void StateVector::apply(const Gate& g) {
  for (std::size_t k = 0; k < g.arity(); ++k) {
    if (g.qubits[k] >= n_qubits_) {
      throw std::out_of_range("gate on qubit " + std::to_string(g.qubits[k]) + " of a " +
                              std::to_string(n_qubits_) + "-qubit state");
    }
  }
  const std::size_t dim = amps_.size();
  auto mask_of = [&](std::size_t q) { return std::size_t{1} << (n_qubits_ - 1 - q); };

  if (g.kind == GateKind::CNOT) {
    if (g.qubits[0] == g.qubits[1]) {
      throw std::invalid_argument("CNOT control equals target");
    }
    const auto control = mask_of(g.qubits[0]);
    const auto target = mask_of(g.qubits[1]);
    for (std::size_t k = 0; k < dim; ++k) {
      if ((k & control) && !(k & target)) {
        std::swap(amps_[k], amps_[k | target]);
      }
    }
    return;
  }

  const auto m = gate_matrix(g);
  const auto stride = mask_of(g.qubits[0]);
  for (std::size_t k = 0; k < dim; ++k) {
    if (k & stride) {
      continue;
    }
    const auto a0 = amps_[k];
    const auto a1 = amps_[k | stride];
    amps_[k] = m(0, 0) * a0 + m(0, 1) * a1;
    amps_[k | stride] = m(1, 0) * a0 + m(1, 1) * a1;
  }
}

void StateVector::apply(const Circuit& c) {
  for (const auto& g : c) {
    apply(g);
  }
}

std::vector<double> StateVector::probabilities() const {
  std::vector<double> p(amps_.size());
  std::transform(amps_.begin(), amps_.end(), p.begin(), [](auto a) { return std::norm(a); });
  return p;
}

std::vector<double> outcome_distribution(const StateVector& psi, const Group& group) {
  StateVector rotated = psi;
  rotated.apply(group_circuit(group.assignment));
  return rotated.probabilities();
}

OutcomeHistogram sample_histogram(std::span<const double> dist, std::size_t n_qubits,
                                  std::uint64_t shots, std::uint64_t seed, std::size_t group_id) {
  if (shots == 0) {
    throw std::invalid_argument("sample_histogram: zero shots");
  }
  if (dist.size() != (std::size_t{1} << n_qubits)) {
    throw std::invalid_argument("sample_histogram: distribution length does not match qubit count");
  }
  std::vector<double> cdf(dist.size());
  double acc = 0.0;
  std::size_t last_nonzero = 0;
  for (std::size_t k = 0; k < dist.size(); ++k) {
    if (dist[k] < 0.0) {
      throw std::invalid_argument("sample_histogram: negative probability");
    }
    acc += dist[k];
    cdf[k] = acc;
    if (dist[k] > 0.0) {
      last_nonzero = k;
    }
  }
  if (acc <= 0.0) {
    throw std::invalid_argument("sample_histogram: distribution has no mass");
  }

  Rng rng(seed, group_id);
  std::vector<std::uint64_t> counts(dist.size(), 0);
  for (std::uint64_t s = 0; s < shots; ++s) {
    const double x = rng.uniform() * acc;
    auto k = static_cast<std::size_t>(std::upper_bound(cdf.begin(), cdf.end(), x) - cdf.begin());
    ++counts[std::min(k, last_nonzero)];
  }

  OutcomeHistogram h{group_id, {}, shots};
  for (std::size_t k = 0; k < counts.size(); ++k) {
    if (counts[k] != 0) {
      h.counts.emplace(outcome_bitstring(k, n_qubits), counts[k]);
    }
  }
  return h;
}

std::complex<double> pauli_expectation(const StateVector& psi, const PauliString& p) {
  const auto n = psi.n_qubits();
  if (p.size() != n) {
    throw std::invalid_argument("pauli_expectation: string length does not match state");
  }
  // P|k> = i^{#Y} (-1)^{popcount(k & (y|z))} |k ^ (x|y)>
  std::size_t flip = 0;
  std::size_t phase_mask = 0;
  std::size_t n_y = 0;
  for (std::size_t q = 0; q < n; ++q) {
    const auto bit = std::size_t{1} << (n - 1 - q);
    switch (p[q]) {
    case Pauli::I:
      break;
    case Pauli::X:
      flip |= bit;
      break;
    case Pauli::Y:
      flip |= bit;
      phase_mask |= bit;
      ++n_y;
      break;
    case Pauli::Z:
      phase_mask |= bit;
      break;
    }
  }
  static const std::complex<double> kIPowers[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const auto global = kIPowers[n_y % 4];
  const auto amps = psi.amplitudes();
  std::complex<double> sum = 0.0;
  for (std::size_t k = 0; k < amps.size(); ++k) {
    const double sign = (std::popcount(k & phase_mask) & 1) ? -1.0 : 1.0;
    sum += std::conj(amps[k ^ flip]) * sign * amps[k];
  }
  return global * sum;
}

std::complex<double> dense_expectation_complex(const StateVector& psi, const Hamiltonian& h) {
  if (h.n_qubits() != psi.n_qubits() && !h.empty()) {
    throw std::invalid_argument("dense_expectation: qubit count mismatch");
  }
  std::complex<double> total = 0.0;
  for (const auto& t : h.terms()) {
    total += t.coefficient * pauli_expectation(psi, t.string);
  }
  return total;
}

double dense_expectation(const StateVector& psi, const Hamiltonian& h) {
  return dense_expectation_complex(psi, h).real();
}

} // namespace heem
