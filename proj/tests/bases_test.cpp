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

#include "oracles.hpp"

#include "gtest/gtest.h"

#include <map>
#include <set>
#include <string>

namespace heem {
namespace {

PauliString word(const char* s) { return PauliString::from_string(s); }

std::vector<int> signs(Basis b, const char* w) {
  const auto v = weight_vector(b, word(w));
  return {v.begin(), v.end()};
}

TEST(Bases, ArityAndNames) {
  for (auto b : kAllBases) {
    EXPECT_EQ(basis_from_name(basis_name(b)), b);
  }
  EXPECT_EQ(arity(Basis::Bell), 2U);
  EXPECT_EQ(arity(Basis::Z1), 1U);
  EXPECT_FALSE(basis_from_name("Omega").has_value());
}

TEST(Bases, CompatibleSetsAsListed) {
  auto members = [](Basis b) {
    std::set<std::string> out;
    for (const auto& w : compatible_set(b)) {
      out.insert(w.to_string());
    }
    return out;
  };
  using S = std::set<std::string>;
  EXPECT_EQ(members(Basis::Bell), (S{"II", "XX", "YY", "ZZ"}));
  EXPECT_EQ(members(Basis::OmegaX), (S{"II", "XX", "YZ", "ZY"}));
  EXPECT_EQ(members(Basis::OmegaY), (S{"II", "YY", "XZ", "ZX"}));
  EXPECT_EQ(members(Basis::OmegaZ), (S{"II", "ZZ", "XY", "YX"}));
  EXPECT_EQ(members(Basis::Chi), (S{"II", "XY", "YZ", "ZX"}));
  EXPECT_EQ(members(Basis::ChiTilde), (S{"II", "YX", "ZY", "XZ"}));
  EXPECT_EQ(members(Basis::X1), (S{"I", "X"}));
  EXPECT_EQ(members(Basis::Y1), (S{"I", "Y"}));
  EXPECT_EQ(members(Basis::Z1), (S{"I", "Z"}));
}

TEST(Bases, EveryTwoLetterWordInTwoSetsOrNone) {
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      const PauliString w({static_cast<Pauli>(a), static_cast<Pauli>(b)});
      std::size_t count = 0;
      for (auto basis : kEntangledBases) {
        count += in_compatible_set(basis, w) ? 1 : 0;
      }
      if (a == 0 && b == 0) {
        EXPECT_EQ(count, 6U);
      } else if (a == 0 || b == 0) {
        EXPECT_EQ(count, 0U) << w.to_string();
      } else {
        EXPECT_EQ(count, 2U) << w.to_string();
      }
    }
  }
}

TEST(Bases, EntangledOptionsExamples) {
  EXPECT_EQ(entangled_options(word("XX"), word("YY")), std::vector<Basis>{Basis::Bell});
  EXPECT_TRUE(entangled_options(word("YY"), word("YZ")).empty());
  EXPECT_EQ(entangled_options(word("II"), word("XX")),
            (std::vector<Basis>{Basis::Bell, Basis::OmegaX}));
  EXPECT_THROW(entangled_options(word("X"), word("XX")), std::invalid_argument);
}

TEST(Bases, EntangledOptionsSymmetricAndMatchCommutation) {
  // Named cells commute as matrices; every other pair of distinct words
  // anticommutes (two Paulis either commute or anticommute).
  for (int i = 1; i < 16; ++i) {
    for (int j = 1; j < 16; ++j) {
      const PauliString a({static_cast<Pauli>(i / 4), static_cast<Pauli>(i % 4)});
      const PauliString b({static_cast<Pauli>(j / 4), static_cast<Pauli>(j % 4)});
      const auto ab = entangled_options(a, b);
      EXPECT_EQ(ab, entangled_options(b, a));
      if (i / 4 == 0 || i % 4 == 0 || j / 4 == 0 || j % 4 == 0 || i == j) {
        continue;
      }
      const auto ma = oracle::pauli_matrix(a);
      const auto mb = oracle::pauli_matrix(b);
      const bool commute = (ma * mb - mb * ma).norm() < 1e-12;
      EXPECT_EQ(!ab.empty(), commute) << a.to_string() << " " << b.to_string();
    }
  }
}

TEST(Bases, CircuitsAsListed) {
  using G = std::vector<Gate>;
  const double pi = std::numbers::pi;
  EXPECT_EQ(basis_circuit(Basis::Bell), (G{cnot_gate(0, 1), h_gate(0)}));
  EXPECT_EQ(basis_circuit(Basis::OmegaX),
            (G{s_gate(0), s_gate(1), h_gate(0), cnot_gate(0, 1), h_gate(0)}));
  EXPECT_EQ(basis_circuit(Basis::OmegaY), (G{h_gate(0), cnot_gate(0, 1), h_gate(0)}));
  EXPECT_EQ(basis_circuit(Basis::OmegaZ), (G{s_gate(0), cnot_gate(0, 1), h_gate(0)}));
  EXPECT_EQ(basis_circuit(Basis::Chi), (G{u2_gate(0, pi / 2, pi), cnot_gate(0, 1), h_gate(0)}));
  EXPECT_EQ(basis_circuit(Basis::ChiTilde), (G{u2_gate(0, 0, pi / 2), cnot_gate(0, 1), h_gate(0)}));
  EXPECT_EQ(basis_circuit(Basis::X1), (G{h_gate(0)}));
  EXPECT_EQ(basis_circuit(Basis::Y1), (G{sdg_gate(0), h_gate(0)}));
  EXPECT_TRUE(basis_circuit(Basis::Z1).empty());
  for (auto b : kEntangledBases) {
    EXPECT_EQ(count_cnots(basis_circuit(b)), 1U);
  }
}

TEST(Bases, GateMatricesMatchConventions) {
  for (const auto& g : {h_gate(0), s_gate(0), sdg_gate(0), u2_gate(0, 0.3, -1.1),
                        u2_gate(0, std::numbers::pi / 2, std::numbers::pi)}) {
    EXPECT_LT((gate_matrix(g) - oracle::gate_2x2(g)).norm(), 1e-14);
  }
  EXPECT_THROW(gate_matrix(cnot_gate(0, 1)), std::invalid_argument);
}

TEST(Bases, UnitaryMatchesOracle) {
  for (auto b : kAllBases) {
    const auto n = arity(b);
    const auto u = oracle::local_unitary(basis_circuit(b), n);
    EXPECT_LT((basis_unitary(b) - u).norm(), 1e-12) << basis_name(b);
    const auto dim = static_cast<Eigen::Index>(1) << n;
    EXPECT_LT((u.adjoint() * u - Eigen::MatrixXcd::Identity(dim, dim)).norm(), 1e-12);
  }
}

TEST(Bases, CircuitsDiagonalizeTheirSets) {
  for (auto b : kAllBases) {
    const auto u = oracle::local_unitary(basis_circuit(b), arity(b));
    for (const auto& w : compatible_set(b)) {
      const Eigen::MatrixXcd d = u * oracle::pauli_matrix(w) * u.adjoint();
      Eigen::MatrixXcd off = d;
      off.diagonal().setZero();
      EXPECT_LT(off.norm(), 1e-12) << basis_name(b) << " " << w.to_string();
      const auto v = weight_vector(b, w);
      for (Eigen::Index k = 0; k < d.rows(); ++k) {
        EXPECT_NEAR(d(k, k).real(), v[static_cast<std::size_t>(k)], 1e-12);
        EXPECT_NEAR(d(k, k).imag(), 0.0, 1e-12);
      }
    }
  }
}

TEST(Bases, PrintedSignPatterns) {
  // The "Commuting pairs" columns of the jointly-diagonalizable-pairs listing.
  using V = std::vector<int>;
  EXPECT_EQ(signs(Basis::Bell, "XX"), (V{+1, -1, +1, -1}));
  EXPECT_EQ(signs(Basis::Bell, "YY"), (V{-1, +1, +1, -1}));
  EXPECT_EQ(signs(Basis::Bell, "ZZ"), (V{+1, +1, -1, -1}));
  EXPECT_EQ(signs(Basis::OmegaX, "YZ"), (V{-1, +1, -1, +1}));
  EXPECT_EQ(signs(Basis::OmegaX, "XX"), (V{+1, -1, -1, +1}));
  EXPECT_EQ(signs(Basis::OmegaX, "ZY"), (V{-1, -1, +1, +1}));
  EXPECT_EQ(signs(Basis::OmegaY, "XZ"), (V{+1, -1, +1, -1}));
  EXPECT_EQ(signs(Basis::OmegaY, "YY"), (V{+1, -1, -1, +1}));
  EXPECT_EQ(signs(Basis::OmegaY, "ZX"), (V{+1, +1, -1, -1}));
  EXPECT_EQ(signs(Basis::OmegaZ, "XY"), (V{-1, +1, -1, +1}));
  EXPECT_EQ(signs(Basis::OmegaZ, "YX"), (V{-1, +1, +1, -1}));
  EXPECT_EQ(signs(Basis::OmegaZ, "ZZ"), (V{+1, +1, -1, -1}));
  EXPECT_EQ(signs(Basis::Chi, "XY"), (V{+1, -1, +1, -1}));
  EXPECT_EQ(signs(Basis::Chi, "YZ"), (V{-1, +1, +1, -1}));
  EXPECT_EQ(signs(Basis::Chi, "ZX"), (V{+1, +1, -1, -1}));
  EXPECT_EQ(signs(Basis::ChiTilde, "YX"), (V{-1, +1, +1, -1}));
  EXPECT_EQ(signs(Basis::ChiTilde, "ZY"), (V{+1, +1, -1, -1}));
  EXPECT_EQ(signs(Basis::ChiTilde, "XZ"), (V{+1, -1, +1, -1}));
}

TEST(Bases, WeightVectorInvariants) {
  for (auto b : kAllBases) {
    for (const auto& w : compatible_set(b)) {
      const auto v = weight_vector(b, w);
      ASSERT_EQ(v.size(), std::size_t{1} << arity(b));
      int sum = 0;
      for (int s : v) {
        EXPECT_TRUE(s == 1 || s == -1);
        sum += s;
      }
      if (w.is_identity()) {
        EXPECT_EQ(sum, static_cast<int>(v.size()));
      } else {
        EXPECT_EQ(sum, 0);
      }
    }
  }
  EXPECT_THROW(weight_vector(Basis::Bell, word("XY")), std::invalid_argument);
  EXPECT_THROW(weight_vector(Basis::X1, word("Z")), std::invalid_argument);
}

TEST(Bases, EigenstatesReadBackTheirEigenvalue) {
  // Prepare each eigenvector of a member word, run the basis circuit, and
  // check that every outcome with non-zero probability carries the sign of
  // that eigenvalue.
  for (auto b : kEntangledBases) {
    const auto u = oracle::local_unitary(basis_circuit(b), 2);
    for (const auto& w : compatible_set(b)) {
      if (w.is_identity()) {
        continue;
      }
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(oracle::pauli_matrix(w));
      const auto v = weight_vector(b, w);
      for (int e = 0; e < 4; ++e) {
        const Eigen::VectorXcd out = u * es.eigenvectors().col(e);
        for (int k = 0; k < 4; ++k) {
          if (std::norm(out(k)) > 1e-9) {
            EXPECT_NEAR(v[static_cast<std::size_t>(k)], es.eigenvalues()(e), 1e-9);
          }
        }
      }
    }
  }
}

TEST(Bases, LocalBasisFor) {
  EXPECT_EQ(local_basis_for(Pauli::X), Basis::X1);
  EXPECT_EQ(local_basis_for(Pauli::Y), Basis::Y1);
  EXPECT_EQ(local_basis_for(Pauli::Z), Basis::Z1);
  EXPECT_EQ(local_basis_for(Pauli::I), Basis::Z1);
}

} // namespace
} // namespace heem
