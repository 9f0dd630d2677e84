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

#include "heem/evaluator.hpp"

#include <stdexcept>

namespace heem {

GroupObservable::GroupObservable(const Group& group, const Hamiltonian& h)
    : n_qubits_(h.n_qubits()) {
  std::vector<char> measured(n_qubits_, 0);
  for (const auto& block : group.assignment.blocks) {
    for (auto q : block.span()) {
      if (q >= n_qubits_) {
        throw std::invalid_argument("group block touches qubit " + std::to_string(q) +
                                    " outside the Hamiltonian");
      }
      measured[q] = 1;
    }
  }
  for (auto t : group.terms) {
    if (t >= h.size()) {
      throw std::invalid_argument("group references term " + std::to_string(t) +
                                  " outside the Hamiltonian");
    }
    const auto& s = h[t].string;
    for (std::size_t q = 0; q < n_qubits_; ++q) {
      if (!measured[q] && s[q] != Pauli::I) {
        throw std::invalid_argument("term " + s.to_string() + " has unmeasured qubit " +
                                    std::to_string(q));
      }
    }
    WeightedTerm wt{h[t].coefficient, {}};
    for (const auto& block : group.assignment.blocks) {
      auto word = s.restrict(block.span());
      if (word.is_identity()) {
        continue;
      }
      wt.factors.push_back({block.qubits, block.arity(), weight_vector(block.basis, word)});
    }
    terms_.push_back(std::move(wt));
  }
}

double GroupObservable::weight(std::uint64_t outcome) const {
  auto bit = [&](std::size_t q) {
    return static_cast<std::size_t>(outcome >> (n_qubits_ - 1 - q) & 1U);
  };
  double total = 0.0;
  for (const auto& t : terms_) {
    int sign = 1;
    for (const auto& f : t.factors) {
      const auto local = f.arity == 1 ? bit(f.qubits[0]) : 2 * bit(f.qubits[0]) + bit(f.qubits[1]);
      sign *= f.signs[local];
    }
    total += t.coefficient * sign;
  }
  return total;
}

std::vector<double> group_weight_vector(const Group& group, const Hamiltonian& h) {
  if (h.n_qubits() > 24) {
    throw std::invalid_argument("group_weight_vector: too many qubits for a dense vector");
  }
  const GroupObservable obs(group, h);
  std::vector<double> w(std::size_t{1} << h.n_qubits());
  for (std::size_t k = 0; k < w.size(); ++k) {
    w[k] = obs.weight(k);
  }
  return w;
}

std::string outcome_bitstring(std::uint64_t outcome, std::size_t n_qubits) {
  std::string s(n_qubits, '0');
  for (std::size_t q = 0; q < n_qubits; ++q) {
    if (outcome >> (n_qubits - 1 - q) & 1U) {
      s[q] = '1';
    }
  }
  return s;
}

std::uint64_t parse_bitstring(std::string_view bits, std::size_t n_qubits) {
  if (bits.size() != n_qubits || n_qubits > 64) {
    throw std::invalid_argument("bitstring '" + std::string(bits) + "' does not have " +
                                std::to_string(n_qubits) + " bits");
  }
  std::uint64_t k = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("bitstring '" + std::string(bits) + "' has non-binary characters");
    }
    k = (k << 1) | static_cast<std::uint64_t>(c == '1');
  }
  return k;
}

double expected_value(const Hamiltonian& h, std::span<const Group> groups,
                      std::span<const OutcomeHistogram> histograms) {
  std::vector<const OutcomeHistogram*> by_group(groups.size(), nullptr);
  for (const auto& hist : histograms) {
    if (hist.group_id >= groups.size()) {
      throw std::invalid_argument("histogram for unknown group " + std::to_string(hist.group_id));
    }
    if (by_group[hist.group_id] != nullptr) {
      throw std::invalid_argument("two histograms for group " + std::to_string(hist.group_id));
    }
    by_group[hist.group_id] = &hist;
  }

  double total = 0.0;
  for (std::size_t g = 0; g < groups.size(); ++g) {
    const auto* hist = by_group[g];
    if (hist == nullptr) {
      throw std::invalid_argument("missing histogram for group " + std::to_string(g));
    }
    if (hist->shots == 0) {
      throw std::invalid_argument("histogram for group " + std::to_string(g) + " has zero shots");
    }
    const GroupObservable obs(groups[g], h);
    std::uint64_t seen = 0;
    double group_sum = 0.0;
    for (const auto& [bits, count] : hist->counts) {
      group_sum += obs.weight(parse_bitstring(bits, h.n_qubits())) * static_cast<double>(count);
      seen += count;
    }
    if (seen != hist->shots) {
      throw std::invalid_argument("histogram for group " + std::to_string(g) + " sums to " +
                                  std::to_string(seen) + " counts but declares " +
                                  std::to_string(hist->shots) + " shots");
    }
    total += group_sum / static_cast<double>(hist->shots);
  }
  return total;
}

double expected_value_exact(const Hamiltonian& h, std::span<const Group> groups,
                            std::span<const std::vector<double>> distributions) {
  if (distributions.size() != groups.size()) {
    throw std::invalid_argument("expected one distribution per group");
  }
  double total = 0.0;
  for (std::size_t g = 0; g < groups.size(); ++g) {
    const auto w = group_weight_vector(groups[g], h);
    if (distributions[g].size() != w.size()) {
      throw std::invalid_argument("distribution " + std::to_string(g) + " has wrong length");
    }
    double group_sum = 0.0;
    for (std::size_t k = 0; k < w.size(); ++k) {
      group_sum += w[k] * distributions[g][k];
    }
    total += group_sum;
  }
  return total;
}

std::size_t em_pair_cost(std::size_t distance) { return 4 * (distance - 1) + 1; }

CostReport count_cnots(const GroupingResult& r, const ConnectivityGraph& conn,
                       const EmbeddingMap& tau) {
  CostReport report{r.method, r.groups.size(), 0, r.groups.size()};
  if (r.method == Method::TPB) {
    return report;
  }
  for (const auto& g : r.groups) {
    if (r.method == Method::HEEM) {
      report.cnots += g.assignment.entangled_blocks();
      continue;
    }
    for (const auto& block : g.assignment.blocks) {
      if (block.arity() != 2) {
        continue;
      }
      const auto a = tau.at(block.qubits[0]);
      const auto b = tau.at(block.qubits[1]);
      const auto d = conn.distances_from(a).at(b);
      if (d == ConnectivityGraph::kUnreachable) {
        throw std::runtime_error("count_cnots: physical qubits " + std::to_string(a) + " and " +
                                 std::to_string(b) + " are disconnected");
      }
      report.cnots += em_pair_cost(d);
    }
  }
  return report;
}

} // namespace heem
