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

#include "heem/pauli.hpp"
#include "heem/random.hpp"

#include "gtest/gtest.h"

#include <Eigen/Dense>

namespace heem {
namespace {

// Dense single-qubit Paulis for the commutation oracle.
Eigen::Matrix2cd dense(Pauli p) {
  using C = std::complex<double>;
  Eigen::Matrix2cd m;
  switch (p) {
  case Pauli::I:
    m << 1, 0, 0, 1;
    break;
  case Pauli::X:
    m << 0, 1, 1, 0;
    break;
  case Pauli::Y:
    m << 0, C(0, -1), C(0, 1), 0;
    break;
  case Pauli::Z:
    m << 1, 0, 0, -1;
    break;
  }
  return m;
}

TEST(PauliString, ParsesAndPrints) {
  const auto s = PauliString::from_string("IXYZ");
  ASSERT_EQ(s.size(), 4U);
  EXPECT_EQ(s[0], Pauli::I);
  EXPECT_EQ(s[3], Pauli::Z);
  EXPECT_EQ(s.to_string(), "IXYZ");
  EXPECT_FALSE(s.is_identity());
  EXPECT_TRUE(PauliString::from_string("III").is_identity());
  EXPECT_THROW(PauliString::from_string("XQ"), std::invalid_argument);
}

TEST(PauliString, Restrict) {
  const auto s = PauliString::from_string("XYZI");
  const std::size_t qs[] = {2, 0};
  EXPECT_EQ(s.restrict(qs).to_string(), "ZX");
}

TEST(Hamiltonian, ParsesCommentsAndSigns) {
  const auto h = parse_hamiltonian("# toy\n2 IZY\n+4.0 ZXZ\n\n-0.5e-1 XXX  # tail\n");
  ASSERT_EQ(h.size(), 3U);
  EXPECT_EQ(h.n_qubits(), 3U);
  EXPECT_DOUBLE_EQ(h[0].coefficient, 2.0);
  EXPECT_DOUBLE_EQ(h[1].coefficient, 4.0);
  EXPECT_DOUBLE_EQ(h[2].coefficient, -0.05);
  EXPECT_EQ(h[2].string.to_string(), "XXX");
}

TEST(Hamiltonian, MergesDuplicatesAndDropsZeros) {
  const auto h = parse_hamiltonian("1 XZ\n2 ZZ\n0.5 XZ\n-2 ZZ\n3 YY\n");
  ASSERT_EQ(h.size(), 2U);
  EXPECT_EQ(h[0].string.to_string(), "XZ");
  EXPECT_DOUBLE_EQ(h[0].coefficient, 1.5);
  EXPECT_EQ(h[1].string.to_string(), "YY");
}

TEST(Hamiltonian, ParseErrorsCarryKindAndLine) {
  auto kind_of = [](std::string_view text) {
    try {
      parse_hamiltonian(text);
    } catch (const ParseError& e) {
      return std::make_pair(e.kind(), e.line());
    }
    return std::make_pair(ParseErrorKind::EmptyInput, std::size_t{999});
  };
  EXPECT_EQ(kind_of("# only a comment\n"), std::make_pair(ParseErrorKind::EmptyInput, std::size_t{0}));
  EXPECT_EQ(kind_of("1 XX\n2 XXX\n").first, ParseErrorKind::InconsistentLength);
  EXPECT_EQ(kind_of("1 XX\n2 XXX\n").second, 2U);
  EXPECT_EQ(kind_of("1 XA\n").first, ParseErrorKind::IllegalLetter);
  EXPECT_EQ(kind_of("one XX\n").first, ParseErrorKind::MalformedCoefficient);
  EXPECT_EQ(kind_of("1 XX ZZ\n").first, ParseErrorKind::MalformedLine);
  EXPECT_EQ(kind_of("nan XX\n").first, ParseErrorKind::MalformedCoefficient);
}

TEST(Hamiltonian, SerializeRoundTrips) {
  Rng rng(7);
  for (int rep = 0; rep < 20; ++rep) {
    const std::size_t n = 1 + rep % 6;
    const auto h = random_hamiltonian(n, std::min<std::size_t>(1 + rep, std::size_t{1} << (2 * n)), rng);
    EXPECT_EQ(parse_hamiltonian(serialize_hamiltonian(h)), h);
  }
}

TEST(Compatibility, QubitwiseMatchesDenseCommutation) {
  // Qubit-wise commutation means every single-qubit factor pair commutes.
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      const auto pa = static_cast<Pauli>(a);
      const auto pb = static_cast<Pauli>(b);
      const Eigen::Matrix2cd comm = dense(pa) * dense(pb) - dense(pb) * dense(pa);
      const PauliString sa({pa});
      const PauliString sb({pb});
      EXPECT_EQ(qubitwise_compatible(sa, sb), comm.norm() < 1e-12) << a << b;
    }
  }
  EXPECT_TRUE(qubitwise_compatible(PauliString::from_string("XIZ"), PauliString::from_string("XYZ")));
  EXPECT_FALSE(qubitwise_compatible(PauliString::from_string("XX"), PauliString::from_string("YY")));
  EXPECT_THROW(qubitwise_compatible(PauliString::from_string("X"), PauliString::from_string("XX")),
               std::invalid_argument);
}

TEST(PauliGraph, EdgesAreIncompatiblePairs) {
  Rng rng(11);
  const auto h = random_hamiltonian(4, 25, rng);
  const auto g = build_pauli_graph(h);
  for (std::size_t i = 0; i < h.size(); ++i) {
    for (std::size_t j = 0; j < h.size(); ++j) {
      if (i != j) {
        EXPECT_EQ(g.has_edge(i, j), !qubitwise_compatible(h[i].string, h[j].string));
      }
    }
    EXPECT_FALSE(g.has_edge(i, i));
  }
}

TEST(PauliGraph, LargestDegreeFirstIsStableDescending) {
  Rng rng(3);
  const auto h = random_hamiltonian(3, 20, rng);
  const auto g = build_pauli_graph(h);
  const auto order = largest_degree_first_order(g);
  ASSERT_EQ(order.size(), h.size());
  for (std::size_t k = 1; k < order.size(); ++k) {
    const auto d0 = g.degree(order[k - 1]);
    const auto d1 = g.degree(order[k]);
    EXPECT_GE(d0, d1);
    if (d0 == d1) {
      EXPECT_LT(order[k - 1], order[k]);
    }
  }
}

} // namespace
} // namespace heem
