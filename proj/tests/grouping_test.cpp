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

#include "heem/grouping.hpp"
#include "heem/random.hpp"

#include "oracles.hpp"

#include "gtest/gtest.h"

namespace heem {
namespace {

Hamiltonian ham(std::initializer_list<const char*> words) {
  std::vector<Term> terms;
  for (const auto* w : words) {
    terms.push_back({1.0, PauliString::from_string(w)});
  }
  return Hamiltonian(terms.front().string.size(), terms);
}

ConnectivityGraph path3() {
  const Edge e[] = {{0, 1}, {1, 2}};
  return ConnectivityGraph(3, e);
}

// Oracle: each member must be diagonal after the group's circuit, checked on
// dense matrices.
void expect_members_diagonal(const Hamiltonian& h, const GroupingResult& r) {
  const auto n = h.n_qubits();
  for (const auto& g : r.groups) {
    const auto u = oracle::register_unitary(group_circuit(g.assignment), n);
    for (auto t : g.terms) {
      Eigen::MatrixXcd d = u * oracle::pauli_matrix(h[t].string) * u.adjoint();
      d.diagonal().setZero();
      EXPECT_LT(d.norm(), 1e-10) << h[t].string.to_string();
    }
  }
}

std::vector<std::size_t> sorted_terms(const GroupingResult& r) {
  std::vector<std::size_t> all;
  for (const auto& g : r.groups) {
    all.insert(all.end(), g.terms.begin(), g.terms.end());
  }
  std::sort(all.begin(), all.end());
  return all;
}

TEST(Tpb, CompatiblePairFormsOneGroup) {
  const auto h = ham({"XIZ", "XYZ"});
  const auto r = tpb_grouping(h);
  ASSERT_EQ(r.groups.size(), 1U);
  EXPECT_EQ(r.groups[0].assignment.blocks,
            (std::vector<Block>{Block::local(0, Basis::X1), Block::local(1, Basis::Y1),
                                Block::local(2, Basis::Z1)}));
}

TEST(Tpb, PairwiseIncompatibleStrings) {
  EXPECT_EQ(tpb_grouping(ham({"XX", "YY", "ZZ"})).groups.size(), 3U);
  EXPECT_EQ(tpb_grouping(ham({"XI", "IX", "XX", "II"})).groups.size(), 1U);
}

TEST(Tpb, IdentityQubitsGetZ) {
  const auto r = tpb_grouping(ham({"IXI"}));
  ASSERT_EQ(r.groups.size(), 1U);
  EXPECT_EQ(r.groups[0].assignment.blocks[0].basis, Basis::Z1);
  EXPECT_EQ(r.groups[0].assignment.blocks[1].basis, Basis::X1);
}

TEST(AssignMeasurement, EmbeddingDecidesThePathExample) {
  const auto vi = PauliString::from_string("XXZ");
  const auto vj = PauliString::from_string("ZXX");
  const auto conn = path3();
  const std::vector<Basis> order(kAllBases.begin(), kAllBases.end());
  const std::vector<std::size_t> qubits{0, 1, 2};

  const std::vector<std::size_t> swapped{1, 0, 2};
  const auto ok = assign_measurement(vi, vj, {}, order, qubits, &conn, swapped);
  ASSERT_TRUE(ok.has_value());
  EXPECT_EQ(ok->blocks, std::vector<Block>{Block::pair(0, 2, Basis::OmegaY)});

  const std::vector<std::size_t> identity{0, 1, 2};
  EXPECT_FALSE(assign_measurement(vi, vj, {}, order, qubits, &conn, identity).has_value());
}

TEST(AssignMeasurement, EqualStringsLeaveAssignmentUnchanged) {
  const auto v = PauliString::from_string("XYZ");
  const MeasurementAssignment m{{Block::local(1, Basis::Y1)}};
  const std::vector<Basis> order(kAllBases.begin(), kAllBases.end());
  const std::vector<std::size_t> qubits{0, 1, 2};
  const auto r = assign_measurement(v, v, m, order, qubits, nullptr, identity_map(3));
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(*r, m);
}

TEST(AssignMeasurement, FailsFastOnExistingBlock) {
  const auto vi = PauliString::from_string("XX");
  const auto vj = PauliString::from_string("XY");
  const MeasurementAssignment m{{Block::pair(0, 1, Basis::Bell)}};
  const std::vector<Basis> order(kAllBases.begin(), kAllBases.end());
  const std::vector<std::size_t> qubits{0, 1};
  EXPECT_FALSE(assign_measurement(vi, vj, m, order, qubits, nullptr, identity_map(2)).has_value());
}

TEST(AssignMeasurement, BothOrientationsAreTried) {
  // Read as (0,1) the words are YZ and XY, both in Chi. Read as (1,0) they
  // are ZY and YX, both in ChiTilde.
  const auto vi = PauliString::from_string("YZ");
  const auto vj = PauliString::from_string("XY");
  const std::vector<std::size_t> qubits{0, 1};
  const std::vector<Basis> chi_first{Basis::Chi, Basis::ChiTilde};
  const auto r = assign_measurement(vi, vj, {}, chi_first, qubits, nullptr, identity_map(2));
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->blocks, std::vector<Block>{Block::pair(0, 1, Basis::Chi)});
  const std::vector<Basis> tilde_first{Basis::ChiTilde, Basis::Chi};
  const auto r2 = assign_measurement(vi, vj, {}, tilde_first, qubits, nullptr, identity_map(2));
  ASSERT_TRUE(r2.has_value());
  EXPECT_EQ(r2->blocks, std::vector<Block>{Block::pair(1, 0, Basis::ChiTilde)});
}

TEST(Heem, PathExample) {
  const auto h = ham({"XXZ", "ZXX"});
  const auto conn = path3();
  const auto good = heem_grouping(h, conn, {1, 0, 2});
  ASSERT_EQ(good.groups.size(), 1U);
  EXPECT_EQ(good.groups[0].assignment.blocks,
            (std::vector<Block>{Block::pair(0, 2, Basis::OmegaY), Block::local(1, Basis::X1)}));
  EXPECT_EQ(heem_grouping(h, conn, identity_map(3)).groups.size(), 2U);
}

TEST(Heem, SingleEdgeTriangle) {
  const auto h = ham({"XXZ", "YYZ", "YZZ"});
  const Edge e[] = {{0, 1}};
  const ConnectivityGraph conn(3, e);
  const auto r = heem_grouping(h, conn, identity_map(3));
  ASSERT_EQ(r.groups.size(), 2U);
  EXPECT_EQ(r.groups[0].terms, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(r.groups[0].assignment.blocks,
            (std::vector<Block>{Block::pair(0, 1, Basis::Bell), Block::local(2, Basis::Z1)}));
  EXPECT_EQ(r.groups[1].terms, (std::vector<std::size_t>{2}));
  EXPECT_TRUE(verify_grouping(h, r));
}

TEST(Heem, RejectsBadEmbedding) {
  const auto h = ham({"XX", "YY"});
  const auto conn = path3();
  EXPECT_THROW(heem_grouping(h, conn, {0, 0}), std::invalid_argument);
  EXPECT_THROW(heem_grouping(h, conn, {0, 3}), std::invalid_argument);
  EXPECT_THROW(heem_grouping(h, conn, {0}), std::invalid_argument);
}

TEST(Em, Examples) {
  const auto bell = em_grouping(ham({"XX", "YY", "ZZ"}));
  ASSERT_EQ(bell.groups.size(), 1U);
  EXPECT_EQ(bell.groups[0].assignment.blocks,
            std::vector<Block>{Block::pair(0, 1, Basis::Bell)});
  EXPECT_EQ(em_grouping(ham({"XXZ", "ZXX"})).groups.size(), 1U);
  EXPECT_EQ(em_grouping(ham({"XYZ"})).groups.size(), 1U);
}

TEST(Verify, RejectsBrokenPlans) {
  const auto h = ham({"XX", "YY"});
  GroupingResult r;
  r.method = Method::TPB;
  r.groups = {Group{{0, 1}, {{Block::local(0, Basis::X1), Block::local(1, Basis::X1)}}}};
  EXPECT_FALSE(verify_grouping(h, r));

  auto good = em_grouping(h);
  ASSERT_TRUE(verify_grouping(h, good));
  auto dup = good;
  dup.groups.push_back(dup.groups[0]);
  EXPECT_FALSE(verify_grouping(h, dup));
  auto missing = good;
  missing.groups[0].terms = {0};
  EXPECT_FALSE(verify_grouping(h, missing));
  auto overlap = good;
  overlap.groups[0].assignment.blocks.push_back(Block::local(1, Basis::Z1));
  EXPECT_FALSE(verify_grouping(h, overlap));
}

TEST(Verify, HeemBlocksMustSitOnEdges) {
  const auto h = ham({"XXZ", "ZXX"});
  const auto conn = path3();
  auto r = heem_grouping(h, conn, {1, 0, 2});
  ASSERT_TRUE(verify_grouping(h, r));
  r.embedding = identity_map(3);
  EXPECT_FALSE(verify_grouping(h, r));
}

TEST(Grouping, NoMergeWhenEveryPairConflicts) {
  const auto h = ham({"XI", "YI", "ZI"});
  EXPECT_EQ(tpb_grouping(h).groups.size(), 3U);
  EXPECT_EQ(em_grouping(h).groups.size(), 3U);
}

class GroupingFuzz : public ::testing::TestWithParam<int> {};

TEST_P(GroupingFuzz, EnginesAreSoundAndDegenerateCorrectly) {
  Rng rng(1000 + static_cast<std::uint64_t>(GetParam()));
  const std::size_t n = 1 + rng.below(8);
  const std::size_t max_terms = n < 4 ? (std::size_t{1} << (2 * n)) - 1 : 60;
  const std::size_t terms = 1 + rng.below(std::min<std::size_t>(max_terms, 60));
  const auto h = random_hamiltonian(n, terms, rng);

  Rng topo(2000 + static_cast<std::uint64_t>(GetParam()));
  ConnectivityGraph conn(n + topo.below(3));
  for (std::size_t a = 0; a < conn.n_physical(); ++a) {
    for (std::size_t b = a + 1; b < conn.n_physical(); ++b) {
      if (topo.uniform() < 0.4) {
        conn.add_edge(a, b);
      }
    }
  }
  auto tau = random_permutation(conn.n_physical(), topo);
  tau.resize(n);

  const auto tpb = tpb_grouping(h);
  const auto em = em_grouping(h);
  const auto heem = heem_grouping(h, conn, tau);

  std::vector<std::size_t> all(h.size());
  std::iota(all.begin(), all.end(), 0);
  for (const auto* r : {&tpb, &em, &heem}) {
    EXPECT_EQ(find_grouping_error(h, *r), std::nullopt);
    EXPECT_EQ(sorted_terms(*r), all);
    EXPECT_LE(r->groups.size(), h.size());
    for (const auto& g : r->groups) {
      for (auto t : g.terms) {
        for (std::size_t q = 0; q < n; ++q) {
          if (h[t].string[q] != Pauli::I) {
            EXPECT_TRUE(g.assignment.covers(q));
          }
        }
      }
    }
  }
  if (n <= 5) {
    expect_members_diagonal(h, tpb);
    expect_members_diagonal(h, em);
    expect_members_diagonal(h, heem);
  }

  // Determinism.
  EXPECT_EQ(heem_grouping(h, conn, tau).groups, heem.groups);

  // Complete graph reduces to EM; edgeless reduces to qubit-wise grouping.
  const auto complete = heem_grouping(h, ConnectivityGraph::complete(n), identity_map(n));
  EXPECT_EQ(complete.groups, em.groups);
  const auto edgeless = heem_grouping(h, ConnectivityGraph(n), identity_map(n));
  EXPECT_EQ(edgeless.groups, tpb.groups);
  for (const auto& g : edgeless.groups) {
    EXPECT_EQ(g.assignment.entangled_blocks(), 0U);
  }

  // Both engines walk the terms in LDFC order by default.
  EXPECT_EQ(heem.term_order, tpb.term_order);
}

INSTANTIATE_TEST_SUITE_P(Corpus, GroupingFuzz, ::testing::Range(0, 120));

TEST(Grouping, CustomOrdersAreRecorded) {
  const auto h = ham({"XX", "YY", "ZZ", "XY"});
  GroupingOptions opt;
  opt.term_order = std::vector<std::size_t>{3, 2, 1, 0};
  opt.measurement_order = std::vector<Basis>{Basis::Z1, Basis::OmegaZ, Basis::Bell};
  const auto r = em_grouping(h, opt);
  EXPECT_EQ(r.term_order, *opt.term_order);
  EXPECT_EQ(r.measurement_order, *opt.measurement_order);
  EXPECT_TRUE(verify_grouping(h, r));
  EXPECT_EQ(r.groups[0].terms.front(), 3U);
}

TEST(GroupCircuit, PairMapsFirstQubitToLocalOne) {
  const MeasurementAssignment m{{Block::pair(4, 2, Basis::Bell), Block::local(0, Basis::X1)}};
  const auto c = group_circuit(m);
  EXPECT_EQ(c, (Circuit{cnot_gate(2, 4), h_gate(2), h_gate(0)}));
}

} // namespace
} // namespace heem
