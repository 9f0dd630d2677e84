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

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace heem {

bool MeasurementAssignment::covers(std::size_t q) const {
  return std::any_of(blocks.begin(), blocks.end(), [q](const Block& b) {
    auto s = b.span();
    return std::find(s.begin(), s.end(), q) != s.end();
  });
}

std::size_t MeasurementAssignment::entangled_blocks() const {
  return static_cast<std::size_t>(
      std::count_if(blocks.begin(), blocks.end(), [](const Block& b) { return b.arity() == 2; }));
}

std::string_view method_name(Method m) {
  switch (m) {
  case Method::TPB:
    return "tpb";
  case Method::EM:
    return "em";
  case Method::HEEM:
    return "heem";
  }
  return "?";
}

std::optional<Method> method_from_name(std::string_view name) {
  for (auto m : {Method::TPB, Method::EM, Method::HEEM}) {
    if (method_name(m) == name) {
      return m;
    }
  }
  return std::nullopt;
}

namespace {

void require_permutation(std::span<const std::size_t> order, std::size_t n, const char* what) {
  if (order.size() != n) {
    throw std::invalid_argument(std::string(what) + " has " + std::to_string(order.size()) +
                                " entries, expected " + std::to_string(n));
  }
  std::vector<char> seen(n, 0);
  for (auto v : order) {
    if (v >= n || seen[v]) {
      throw std::invalid_argument(std::string(what) + " is not a permutation");
    }
    seen[v] = 1;
  }
}

struct ResolvedOrders {
  std::vector<std::size_t> terms;
  std::vector<std::size_t> qubits;
  std::vector<Basis> measurements;
};

ResolvedOrders resolve(const Hamiltonian& h, const GroupingOptions& options) {
  ResolvedOrders r;
  if (options.term_order) {
    require_permutation(*options.term_order, h.size(), "term order");
    r.terms = *options.term_order;
  } else {
    r.terms = largest_degree_first_order(build_pauli_graph(h));
  }
  if (options.qubit_order) {
    require_permutation(*options.qubit_order, h.n_qubits(), "qubit order");
    r.qubits = *options.qubit_order;
  } else {
    r.qubits = identity_map(h.n_qubits());
  }
  if (options.measurement_order) {
    r.measurements = *options.measurement_order;
    auto sorted = r.measurements;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw std::invalid_argument("measurement order repeats a basis");
    }
  } else {
    r.measurements.assign(kAllBases.begin(), kAllBases.end());
  }
  return r;
}

bool word_in(Basis b, Pauli first, Pauli second) {
  const std::array<Pauli, 2> w{first, second};
  return in_compatible_set(b, w);
}

bool letter_in(Basis b, Pauli p) {
  const std::array<Pauli, 1> w{p};
  return in_compatible_set(b, w);
}

bool compatible_with_blocks(const PauliString& v, const MeasurementAssignment& m) {
  return std::all_of(m.blocks.begin(), m.blocks.end(), [&](const Block& b) {
    return b.arity() == 1 ? letter_in(b.basis, v[b.qubits[0]])
                          : word_in(b.basis, v[b.qubits[0]], v[b.qubits[1]]);
  });
}

// Qubits left uncovered carry the seed's letter in every member.
void finalize(MeasurementAssignment& m, const PauliString& seed) {
  for (std::size_t q = 0; q < seed.size(); ++q) {
    if (!m.covers(q)) {
      m.blocks.push_back(Block::local(q, local_basis_for(seed[q])));
    }
  }
  std::stable_sort(m.blocks.begin(), m.blocks.end(), [](const Block& a, const Block& b) {
    return std::min(a.qubits[0], a.qubits[1]) < std::min(b.qubits[0], b.qubits[1]);
  });
}

GroupingResult greedy_grouping(const Hamiltonian& h, Method method, const ConnectivityGraph* conn,
                               const EmbeddingMap& tau, const GroupingOptions& options) {
  if (h.empty()) {
    throw std::invalid_argument("grouping: empty Hamiltonian");
  }
  auto orders = resolve(h, options);
  GroupingResult result;
  result.method = method;
  result.embedding = tau;

  std::vector<char> grouped(h.size(), 0);
  for (std::size_t a = 0; a < orders.terms.size(); ++a) {
    const auto i = orders.terms[a];
    if (grouped[i]) {
      continue;
    }
    grouped[i] = 1;
    Group group{{i}, {}};
    const auto& vi = h[i].string;
    for (std::size_t b = a + 1; b < orders.terms.size(); ++b) {
      const auto j = orders.terms[b];
      if (grouped[j]) {
        continue;
      }
      auto extended = assign_measurement(vi, h[j].string, group.assignment, orders.measurements,
                                         orders.qubits, conn, tau);
      if (extended) {
        group.assignment = std::move(*extended);
        group.terms.push_back(j);
        grouped[j] = 1;
      }
    }
    finalize(group.assignment, vi);
    result.groups.push_back(std::move(group));
  }

  result.term_order = std::move(orders.terms);
  result.qubit_order = std::move(orders.qubits);
  result.measurement_order = std::move(orders.measurements);
  return result;
}

} // namespace

std::optional<MeasurementAssignment>
assign_measurement(const PauliString& vi, const PauliString& vj, const MeasurementAssignment& m,
                   std::span<const Basis> measurement_order,
                   std::span<const std::size_t> qubit_order, const ConnectivityGraph* conn,
                   std::span<const std::size_t> tau) {
  if (vi.size() != vj.size()) {
    throw std::invalid_argument("assign_measurement: length mismatch");
  }
  if (!compatible_with_blocks(vj, m)) {
    return std::nullopt;
  }

  std::vector<std::size_t> open;
  for (auto q : qubit_order) {
    if (!m.covers(q) && vi[q] != vj[q]) {
      open.push_back(q);
    }
  }

  MeasurementAssignment out = m;
  auto take = [&open](std::size_t q) { open.erase(std::find(open.begin(), open.end(), q)); };

  while (!open.empty()) {
    bool placed = false;
    for (auto basis : measurement_order) {
      if (arity(basis) == 1) {
        for (auto q : open) {
          if (letter_in(basis, vi[q]) && letter_in(basis, vj[q])) {
            out.blocks.push_back(Block::local(q, basis));
            take(q);
            placed = true;
            break;
          }
        }
      } else {
        for (std::size_t x = 0; x < open.size() && !placed; ++x) {
          for (std::size_t y = 0; y < open.size(); ++y) {
            const auto first = open[x];
            const auto second = open[y];
            if (first == second) {
              continue;
            }
            if (conn != nullptr && !conn->has_edge(tau[first], tau[second])) {
              continue;
            }
            if (word_in(basis, vi[first], vi[second]) && word_in(basis, vj[first], vj[second])) {
              out.blocks.push_back(Block::pair(first, second, basis));
              take(first);
              take(second);
              placed = true;
              break;
            }
          }
        }
      }
      if (placed) {
        break;
      }
    }
    if (!placed) {
      return std::nullopt;
    }
  }
  return out;
}

GroupingResult tpb_grouping(const Hamiltonian& h, const GroupingOptions& options) {
  if (h.empty()) {
    throw std::invalid_argument("tpb_grouping: empty Hamiltonian");
  }
  const auto graph = build_pauli_graph(h);
  std::vector<std::size_t> order;
  if (options.term_order) {
    require_permutation(*options.term_order, h.size(), "term order");
    order = *options.term_order;
  } else {
    order = largest_degree_first_order(graph);
  }

  constexpr auto kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> color(h.size(), kNone);
  std::vector<Group> groups;
  std::vector<char> taken;
  for (auto v : order) {
    taken.assign(groups.size() + 1, 0);
    for (auto w : graph.neighbors(v)) {
      if (color[w] != kNone) {
        taken[color[w]] = 1;
      }
    }
    const auto c = static_cast<std::size_t>(std::find(taken.begin(), taken.end(), 0) - taken.begin());
    color[v] = c;
    if (c == groups.size()) {
      groups.emplace_back();
    }
    groups[c].terms.push_back(v);
  }

  for (auto& g : groups) {
    for (std::size_t q = 0; q < h.n_qubits(); ++q) {
      Pauli letter = Pauli::I;
      for (auto t : g.terms) {
        if (h[t].string[q] != Pauli::I) {
          letter = h[t].string[q];
        }
      }
      g.assignment.blocks.push_back(Block::local(q, local_basis_for(letter)));
    }
  }

  GroupingResult result;
  result.method = Method::TPB;
  result.groups = std::move(groups);
  result.term_order = std::move(order);
  result.qubit_order = identity_map(h.n_qubits());
  result.measurement_order.assign(kLocalBases.begin(), kLocalBases.end());
  result.embedding = identity_map(h.n_qubits());
  return result;
}

GroupingResult heem_grouping(const Hamiltonian& h, const ConnectivityGraph& conn,
                             const EmbeddingMap& tau, const GroupingOptions& options) {
  validate_embedding(tau, h.n_qubits(), conn.n_physical());
  auto result = greedy_grouping(h, Method::HEEM, &conn, tau, options);
  result.connectivity = conn;
  return result;
}

GroupingResult em_grouping(const Hamiltonian& h, const GroupingOptions& options) {
  return greedy_grouping(h, Method::EM, nullptr, identity_map(h.n_qubits()), options);
}

std::optional<std::string> find_grouping_error(const Hamiltonian& h, const GroupingResult& r) {
  const auto n_qubits = h.n_qubits();
  std::vector<std::size_t> owner_count(h.size(), 0);

  if (r.connectivity) {
    try {
      validate_embedding(r.embedding, n_qubits, r.connectivity->n_physical());
    } catch (const std::invalid_argument& e) {
      return std::string(e.what());
    }
  }

  for (std::size_t g = 0; g < r.groups.size(); ++g) {
    const auto& group = r.groups[g];
    const auto where = "group " + std::to_string(g) + ": ";
    if (group.terms.empty()) {
      return where + "empty group";
    }
    for (auto t : group.terms) {
      if (t >= h.size()) {
        return where + "term index " + std::to_string(t) + " out of range";
      }
      ++owner_count[t];
    }

    std::vector<char> used(n_qubits, 0);
    for (const auto& block : group.assignment.blocks) {
      for (auto q : block.span()) {
        if (q >= n_qubits) {
          return where + "block qubit " + std::to_string(q) + " out of range";
        }
        if (used[q]) {
          return where + "qubit " + std::to_string(q) + " covered by two blocks";
        }
        used[q] = 1;
      }
      if (block.arity() == 2 && r.connectivity &&
          !r.connectivity->has_edge(r.embedding[block.qubits[0]], r.embedding[block.qubits[1]])) {
        return where + std::string(basis_name(block.basis)) + " block on (" +
               std::to_string(block.qubits[0]) + ", " + std::to_string(block.qubits[1]) +
               ") is not a device edge";
      }
      for (auto t : group.terms) {
        if (!in_compatible_set(block.basis, h[t].string.restrict(block.span()))) {
          return where + "term " + h[t].string.to_string() + " is not diagonal in " +
                 std::string(basis_name(block.basis)) + " block";
        }
      }
    }
    for (auto t : group.terms) {
      for (std::size_t q = 0; q < n_qubits; ++q) {
        if (!used[q] && h[t].string[q] != Pauli::I) {
          return where + "qubit " + std::to_string(q) + " of " + h[t].string.to_string() +
                 " is not measured";
        }
      }
    }
  }

  for (std::size_t t = 0; t < owner_count.size(); ++t) {
    if (owner_count[t] != 1) {
      return "term " + std::to_string(t) + " appears in " + std::to_string(owner_count[t]) +
             " groups";
    }
  }
  return std::nullopt;
}

Circuit group_circuit(const MeasurementAssignment& m) {
  Circuit out;
  for (const auto& block : m.blocks) {
    // Local qubit 0 is the block's second (least significant) qubit.
    const std::array<std::size_t, 2> local_to_global =
        block.arity() == 1 ? std::array<std::size_t, 2>{block.qubits[0], block.qubits[0]}
                           : std::array<std::size_t, 2>{block.qubits[1], block.qubits[0]};
    for (auto g : basis_circuit(block.basis)) {
      g.qubits[0] = local_to_global[g.qubits[0]];
      if (g.kind == GateKind::CNOT) {
        g.qubits[1] = local_to_global[g.qubits[1]];
      } else {
        g.qubits[1] = g.qubits[0];
      }
      out.push_back(g);
    }
  }
  return out;
}

} // namespace heem
