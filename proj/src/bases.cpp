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

#include "heem/bases.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace heem {
namespace {

constexpr std::size_t word_index(Pauli a, Pauli b) {
  return 4 * static_cast<std::size_t>(a) + static_cast<std::size_t>(b);
}

constexpr std::uint16_t word_bit(Pauli a, Pauli b) {
  return static_cast<std::uint16_t>(1U << word_index(a, b));
}

// Bit k of a mask is set when the word with index k is in the set. Arity-1
// words use index = letter.
constexpr std::array<std::uint16_t, 9> kMembership = [] {
  using P = Pauli;
  std::array<std::uint16_t, 9> m{};
  auto set2 = [](P a0, P a1, P b0, P b1, P c0, P c1) {
    return static_cast<std::uint16_t>(word_bit(P::I, P::I) | word_bit(a0, a1) |
                                      word_bit(b0, b1) | word_bit(c0, c1));
  };
  m[static_cast<std::size_t>(Basis::Bell)] = set2(P::X, P::X, P::Y, P::Y, P::Z, P::Z);
  m[static_cast<std::size_t>(Basis::OmegaX)] = set2(P::X, P::X, P::Y, P::Z, P::Z, P::Y);
  m[static_cast<std::size_t>(Basis::OmegaY)] = set2(P::Y, P::Y, P::X, P::Z, P::Z, P::X);
  m[static_cast<std::size_t>(Basis::OmegaZ)] = set2(P::Z, P::Z, P::X, P::Y, P::Y, P::X);
  m[static_cast<std::size_t>(Basis::Chi)] = set2(P::X, P::Y, P::Y, P::Z, P::Z, P::X);
  m[static_cast<std::size_t>(Basis::ChiTilde)] = set2(P::Y, P::X, P::Z, P::Y, P::X, P::Z);
  m[static_cast<std::size_t>(Basis::X1)] = 0b0011;
  m[static_cast<std::size_t>(Basis::Y1)] = 0b0101;
  m[static_cast<std::size_t>(Basis::Z1)] = 0b1001;
  return m;
}();

std::size_t index_of(std::span<const Pauli> word) {
  return word.size() == 1 ? static_cast<std::size_t>(word[0]) : word_index(word[0], word[1]);
}

Eigen::Matrix2cd pauli_matrix(Pauli p) {
  using C = std::complex<double>;
  Eigen::Matrix2cd m;
  switch (p) {
  case Pauli::I:
    m << 1.0, 0.0, 0.0, 1.0;
    break;
  case Pauli::X:
    m << 0.0, 1.0, 1.0, 0.0;
    break;
  case Pauli::Y:
    m << 0.0, C(0.0, -1.0), C(0.0, 1.0), 0.0;
    break;
  case Pauli::Z:
    m << 1.0, 0.0, 0.0, -1.0;
    break;
  }
  return m;
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

// Local qubit q of an n-qubit block is bit q of the outcome index
// (little-endian, matching the circuit convention).
Eigen::MatrixXcd embed_gate(const Gate& g, std::size_t n) {
  const auto dim = static_cast<Eigen::Index>(1U << n);
  if (g.kind == GateKind::CNOT) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    for (Eigen::Index k = 0; k < dim; ++k) {
      auto image = static_cast<std::size_t>(k);
      if (image >> g.qubits[0] & 1U) {
        image ^= std::size_t{1} << g.qubits[1];
      }
      m(static_cast<Eigen::Index>(image), k) = 1.0;
    }
    return m;
  }
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
  for (std::size_t q = n; q-- > 0;) {
    Eigen::MatrixXcd factor =
        q == g.qubits[0] ? Eigen::MatrixXcd(gate_matrix(g)) : Eigen::MatrixXcd::Identity(2, 2);
    out = kron(out, factor);
  }
  return out;
}

struct WeightTable {
  // [basis][word index][outcome]
  std::array<std::array<std::array<int, 4>, 16>, 9> signs{};
};

const WeightTable& weight_table() {
  static const WeightTable table = [] {
    WeightTable t;
    for (auto b : kAllBases) {
      const auto bi = static_cast<std::size_t>(b);
      const Eigen::MatrixXcd u = basis_unitary(b);
      for (const auto& w : compatible_set(b)) {
        const Eigen::MatrixXcd d = u * word_matrix(w.letters()) * u.adjoint();
        auto& signs = t.signs[bi][index_of(w.letters())];
        for (Eigen::Index r = 0; r < d.rows(); ++r) {
          for (Eigen::Index c = 0; c < d.cols(); ++c) {
            if (r != c && std::abs(d(r, c)) > 1e-12) {
              throw std::logic_error("basis circuit " + std::string(basis_name(b)) +
                                     " does not diagonalize " + w.to_string());
            }
          }
          const double re = d(r, r).real();
          if (std::abs(std::abs(re) - 1.0) > 1e-12 || std::abs(d(r, r).imag()) > 1e-12) {
            throw std::logic_error("non-unit eigenvalue for " + w.to_string());
          }
          signs[static_cast<std::size_t>(r)] = re > 0 ? 1 : -1;
        }
      }
    }
    return t;
  }();
  return table;
}

} // namespace

std::string_view basis_name(Basis b) {
  static constexpr std::array<std::string_view, 9> kNames = {
      "Bell", "OmegaX", "OmegaY", "OmegaZ", "Chi", "ChiTilde", "X1", "Y1", "Z1"};
  return kNames[static_cast<std::size_t>(b)];
}

std::optional<Basis> basis_from_name(std::string_view name) {
  for (auto b : kAllBases) {
    if (basis_name(b) == name) {
      return b;
    }
  }
  return std::nullopt;
}

Basis local_basis_for(Pauli p) {
  switch (p) {
  case Pauli::X:
    return Basis::X1;
  case Pauli::Y:
    return Basis::Y1;
  default:
    return Basis::Z1;
  }
}

bool in_compatible_set(Basis b, std::span<const Pauli> word) {
  if (word.size() != arity(b)) {
    return false;
  }
  return (kMembership[static_cast<std::size_t>(b)] >> index_of(word) & 1U) != 0;
}

std::vector<PauliString> compatible_set(Basis b) {
  std::vector<PauliString> out;
  const auto mask = kMembership[static_cast<std::size_t>(b)];
  const std::size_t n_words = arity(b) == 1 ? 4 : 16;
  for (std::size_t k = 0; k < n_words; ++k) {
    if ((mask >> k & 1U) == 0) {
      continue;
    }
    if (arity(b) == 1) {
      out.emplace_back(std::vector<Pauli>{static_cast<Pauli>(k)});
    } else {
      out.emplace_back(std::vector<Pauli>{static_cast<Pauli>(k / 4), static_cast<Pauli>(k % 4)});
    }
  }
  return out;
}

std::vector<Basis> entangled_options(const PauliString& a, const PauliString& b) {
  if (a.size() != 2 || b.size() != 2) {
    throw std::invalid_argument("entangled_options: words must have length 2");
  }
  std::vector<Basis> out;
  for (auto basis : kEntangledBases) {
    if (in_compatible_set(basis, a) && in_compatible_set(basis, b)) {
      out.push_back(basis);
    }
  }
  return out;
}

Circuit basis_circuit(Basis b) {
  constexpr double pi = std::numbers::pi;
  switch (b) {
  case Basis::Bell:
    return {cnot_gate(0, 1), h_gate(0)};
  case Basis::OmegaX:
    return {s_gate(0), s_gate(1), h_gate(0), cnot_gate(0, 1), h_gate(0)};
  case Basis::OmegaY:
    return {h_gate(0), cnot_gate(0, 1), h_gate(0)};
  case Basis::OmegaZ:
    return {s_gate(0), cnot_gate(0, 1), h_gate(0)};
  case Basis::Chi:
    return {u2_gate(0, pi / 2, pi), cnot_gate(0, 1), h_gate(0)};
  case Basis::ChiTilde:
    return {u2_gate(0, 0.0, pi / 2), cnot_gate(0, 1), h_gate(0)};
  case Basis::X1:
    return {h_gate(0)};
  case Basis::Y1:
    return {sdg_gate(0), h_gate(0)};
  case Basis::Z1:
    return {};
  }
  return {};
}

Eigen::MatrixXcd basis_unitary(Basis b) {
  const std::size_t n = arity(b);
  const auto dim = static_cast<Eigen::Index>(1U << n);
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(dim, dim);
  for (const auto& g : basis_circuit(b)) {
    u = embed_gate(g, n) * u;
  }
  return u;
}

Eigen::MatrixXcd word_matrix(std::span<const Pauli> word) {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
  for (auto p : word) {
    out = kron(out, Eigen::MatrixXcd(pauli_matrix(p)));
  }
  return out;
}

std::span<const int> weight_vector(Basis b, std::span<const Pauli> word) {
  if (!in_compatible_set(b, word)) {
    std::string text;
    for (auto p : word) {
      text.push_back(to_char(p));
    }
    throw std::invalid_argument("weight_vector: '" + text + "' is not diagonal in basis " +
                                std::string(basis_name(b)));
  }
  const auto& signs = weight_table().signs[static_cast<std::size_t>(b)][index_of(word)];
  return std::span<const int>(signs.data(), std::size_t{1} << arity(b));
}

} // namespace heem
