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

#include "heem/embedding.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace heem {

std::uint64_t CompatibilityMatrix::upper_sum() const {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      total += (*this)(i, j);
    }
  }
  return total;
}

namespace {

constexpr std::uint64_t pairs_of(std::uint64_t n) { return n * (n - (n > 0 ? 1 : 0)) / 2; }

// Histogram of the 16 two-letter words appearing at (i, j).
std::array<std::uint64_t, 16> word_histogram(const Hamiltonian& h, std::size_t i, std::size_t j) {
  std::array<std::uint64_t, 16> hist{};
  for (const auto& t : h.terms()) {
    ++hist[4 * static_cast<std::size_t>(t.string[i]) + static_cast<std::size_t>(t.string[j])];
  }
  return hist;
}

std::array<std::uint64_t, 6> basis_counts_from(const std::array<std::uint64_t, 16>& hist) {
  std::array<std::uint64_t, 6> out{};
  for (std::size_t b = 0; b < kEntangledBases.size(); ++b) {
    std::uint64_t f = 0;
    for (std::size_t w = 0; w < 16; ++w) {
      const std::array<Pauli, 2> word{static_cast<Pauli>(w / 4), static_cast<Pauli>(w % 4)};
      if (in_compatible_set(kEntangledBases[b], word)) {
        f += hist[w];
      }
    }
    out[b] = pairs_of(f);
  }
  return out;
}

std::uint64_t sum(const std::array<std::uint64_t, 6>& a) {
  return std::accumulate(a.begin(), a.end(), std::uint64_t{0});
}

constexpr std::size_t kFree = static_cast<std::size_t>(-1);

// Shared bookkeeping of the greedy placements. Spent entries of C are
// tracked in a retired mask.
class PlacementState {
public:
  PlacementState(const CompatibilityMatrix& c, const ConnectivityGraph& conn)
      : n_(c.size()), c_(c), conn_(conn), retired_(n_ * n_, 0), tau_(n_, kFree),
        owner_(conn.n_physical(), kFree), residual_(conn.n_physical()) {
    if (n_ > conn.n_physical()) {
      throw std::invalid_argument("embedding: " + std::to_string(n_) +
                                  " theoretical qubits do not fit on " +
                                  std::to_string(conn.n_physical()) + " physical qubits");
    }
    for (std::size_t v = 0; v < conn.n_physical(); ++v) {
      auto nb = conn.neighbors(v);
      residual_[v].assign(nb.begin(), nb.end());
    }
  }

  [[nodiscard]] std::size_t n() const { return n_; }
  [[nodiscard]] bool assigned(std::size_t i) const { return tau_[i] != kFree; }
  [[nodiscard]] bool complete() const { return order_.size() == n_; }
  [[nodiscard]] bool retired(std::size_t i, std::size_t j) const { return retired_[i * n_ + j] != 0; }

  void retire(std::size_t i, std::size_t j) {
    retired_[i * n_ + j] = 1;
    retired_[j * n_ + i] = 1;
  }
  void retire_row(std::size_t i) {
    for (std::size_t j = 0; j < n_; ++j) {
      retire(i, j);
    }
  }

  // Heaviest unretired pair (i < j) passing `allowed`; ties go to the
  // lexicographically smallest pair.
  template <typename Pred>
  std::optional<std::pair<std::size_t, std::size_t>> best_pair(Pred allowed) const {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    std::uint64_t best_value = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i + 1; j < n_; ++j) {
        if (retired(i, j) || !allowed(i, j)) {
          continue;
        }
        if (!best || c_(i, j) > best_value) {
          best = {i, j};
          best_value = c_(i, j);
        }
      }
    }
    return best;
  }

  [[nodiscard]] std::optional<std::size_t> free_neighbor(std::size_t phys) const {
    for (auto s : residual_[phys]) {
      if (owner_[s] == kFree) {
        return s;
      }
    }
    return std::nullopt;
  }

  [[nodiscard]] std::optional<Edge> free_edge() const {
    for (std::size_t a = 0; a < residual_.size(); ++a) {
      if (owner_[a] != kFree) {
        continue;
      }
      for (auto b : residual_[a]) {
        if (a < b && owner_[b] == kFree) {
          return Edge{a, b};
        }
      }
    }
    return std::nullopt;
  }

  // Seats theoretical qubits on physical ones, then drops device edges between
  // assigned qubits and retires rows whose physical qubit has no free neighbor.
  void place(std::span<const std::pair<std::size_t, std::size_t>> seats) {
    for (const auto& [theo, phys] : seats) {
      tau_[theo] = phys;
      owner_[phys] = theo;
      order_.push_back(theo);
    }
    for (const auto& [theo, phys] : seats) {
      auto neighbors = residual_[phys];
      for (auto s : neighbors) {
        if (owner_[s] == kFree) {
          continue;
        }
        drop_edge(s, phys);
        if (residual_[s].empty()) {
          retire_row(owner_[s]);
        }
      }
    }
    for (const auto& [theo, phys] : seats) {
      if (residual_[phys].empty()) {
        retire_row(theo);
      }
    }
  }

  void place_one(std::size_t theo, std::size_t phys) {
    const std::array<std::pair<std::size_t, std::size_t>, 1> seat{{{theo, phys}}};
    place(seat);
  }

  [[nodiscard]] bool physical_free(std::size_t phys) const { return owner_[phys] == kFree; }
  [[nodiscard]] std::size_t image(std::size_t theo) const { return tau_[theo]; }
  [[nodiscard]] const ConnectivityGraph& device() const { return conn_; }

  Placement finish() && { return {std::move(tau_), std::move(order_)}; }

private:
  void drop_edge(std::size_t a, std::size_t b) {
    std::erase(residual_[a], b);
    std::erase(residual_[b], a);
  }

  std::size_t n_;
  const CompatibilityMatrix& c_;
  const ConnectivityGraph& conn_;
  std::vector<char> retired_;
  std::vector<std::size_t> tau_;
  std::vector<std::size_t> owner_;
  std::vector<std::vector<std::size_t>> residual_;
  std::vector<std::size_t> order_;
};

// Extends a pair whose one endpoint is seated. Returns false when the seated
// endpoint has no free neighbor left (its row is retired then).
bool attach(PlacementState& st, std::size_t seated, std::size_t other) {
  auto spot = st.free_neighbor(st.image(seated));
  if (!spot) {
    st.retire_row(seated);
    return false;
  }
  st.retire(seated, other);
  st.place_one(other, *spot);
  return true;
}

} // namespace

std::array<std::uint64_t, 6> pair_basis_counts(const Hamiltonian& h, std::size_t i, std::size_t j) {
  return basis_counts_from(word_histogram(h, i, j));
}

CompatibilityMatrix compatibility_matrix(const Hamiltonian& h) {
  if (h.empty()) {
    throw std::invalid_argument("compatibility_matrix: empty Hamiltonian");
  }
  const auto n = h.n_qubits();
  CompatibilityMatrix c(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      c.set(i, j, sum(pair_basis_counts(h, i, j)));
    }
  }
  return c;
}

std::uint64_t omega(const EmbeddingMap& tau, const CompatibilityMatrix& c,
                    const ConnectivityGraph& conn) {
  validate_embedding(tau, c.size(), conn.n_physical());
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      if (conn.has_edge(tau[i], tau[j])) {
        total += c(i, j);
      }
    }
  }
  return total;
}

std::string_view strategy_name(EmbeddingStrategy s) {
  switch (s) {
  case EmbeddingStrategy::Naive:
    return "naive";
  case EmbeddingStrategy::Disconnected:
    return "disconnected";
  case EmbeddingStrategy::Connected:
    return "connected";
  }
  return "?";
}

std::optional<EmbeddingStrategy> strategy_from_name(std::string_view name) {
  for (auto s : {EmbeddingStrategy::Naive, EmbeddingStrategy::Disconnected,
                 EmbeddingStrategy::Connected}) {
    if (strategy_name(s) == name) {
      return s;
    }
  }
  return std::nullopt;
}

EmbeddingMap embed_naive(std::size_t n_theoretical, std::size_t n_physical) {
  if (n_theoretical > n_physical) {
    throw std::invalid_argument("embedding: " + std::to_string(n_theoretical) +
                                " theoretical qubits do not fit on " + std::to_string(n_physical) +
                                " physical qubits");
  }
  return identity_map(n_theoretical);
}

Placement place_disconnected(const CompatibilityMatrix& c, const ConnectivityGraph& conn) {
  PlacementState st(c, conn);
  while (!st.complete()) {
    auto pick = st.best_pair([](std::size_t, std::size_t) { return true; });
    if (!pick) {
      break;
    }
    const auto [i, j] = *pick;
    if (st.assigned(i) && st.assigned(j)) {
      st.retire(i, j);
    } else if (st.assigned(i) || st.assigned(j)) {
      const auto seated = st.assigned(i) ? i : j;
      attach(st, seated, seated == i ? j : i);
    } else if (auto edge = st.free_edge()) {
      st.retire(i, j);
      const std::array<std::pair<std::size_t, std::size_t>, 2> seats{{{i, edge->first},
                                                                       {j, edge->second}}};
      st.place(seats);
    } else {
      st.retire(i, j);
    }
  }

  // Every pair got retired before all qubits were seated: put the rest next
  // to the current image when possible, otherwise on any free qubit.
  for (std::size_t theo = 0; theo < st.n() && !st.complete(); ++theo) {
    if (st.assigned(theo)) {
      continue;
    }
    std::optional<std::size_t> spot;
    std::optional<std::size_t> any_free;
    for (std::size_t p = 0; p < conn.n_physical(); ++p) {
      if (!st.physical_free(p)) {
        continue;
      }
      if (!any_free) {
        any_free = p;
      }
      auto nb = conn.neighbors(p);
      if (std::any_of(nb.begin(), nb.end(), [&](std::size_t s) { return !st.physical_free(s); })) {
        spot = p;
        break;
      }
    }
    st.place_one(theo, spot ? *spot : *any_free);
  }
  return std::move(st).finish();
}

Placement place_connected(const CompatibilityMatrix& c, const ConnectivityGraph& conn) {
  PlacementState st(c, conn);
  const auto n = st.n();
  if (n == 0) {
    return std::move(st).finish();
  }
  auto no_room = [&] {
    return std::runtime_error("embedding: no connected region of the device hosts " +
                              std::to_string(n) + " qubits");
  };
  if (n == 1) {
    st.place_one(0, 0);
    return std::move(st).finish();
  }

  // Seed edge: the smallest edge inside a component large enough for all qubits.
  std::optional<Edge> seed;
  for (const auto& e : conn.edges()) {
    if (conn.component_size(e.first) >= n) {
      seed = e;
      break;
    }
  }
  if (!seed) {
    throw no_room();
  }
  const auto [i0, j0] = *st.best_pair([](std::size_t, std::size_t) { return true; });
  st.retire(i0, j0);
  const std::array<std::pair<std::size_t, std::size_t>, 2> seats{{{i0, seed->first},
                                                                   {j0, seed->second}}};
  st.place(seats);

  while (!st.complete()) {
    auto pick = st.best_pair([&](std::size_t i, std::size_t j) { return st.assigned(i) || st.assigned(j); });
    if (!pick) {
      throw no_room();
    }
    const auto [i, j] = *pick;
    if (st.assigned(i) && st.assigned(j)) {
      st.retire(i, j);
    } else {
      const auto seated = st.assigned(i) ? i : j;
      attach(st, seated, seated == i ? j : i);
    }
  }
  return std::move(st).finish();
}

EmbeddingMap embed(EmbeddingStrategy s, const Hamiltonian& h, const ConnectivityGraph& conn) {
  switch (s) {
  case EmbeddingStrategy::Naive:
    return embed_naive(h.n_qubits(), conn.n_physical());
  case EmbeddingStrategy::Disconnected:
    return embed_disconnected(compatibility_matrix(h), conn);
  case EmbeddingStrategy::Connected:
    return embed_connected(compatibility_matrix(h), conn);
  }
  throw std::invalid_argument("embed: unknown strategy");
}

TauCompatibility tau_compatibility(const Hamiltonian& h, const EmbeddingMap& tau,
                                   const ConnectivityGraph& conn) {
  const auto n = h.n_qubits();
  validate_embedding(tau, n, conn.n_physical());
  TauCompatibility tc{CompatibilityMatrix(n), std::vector<std::uint64_t>(n, 0), {}};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!conn.has_edge(tau[i], tau[j])) {
        continue;
      }
      const auto counts = pair_basis_counts(h, i, j);
      for (std::size_t b = 0; b < counts.size(); ++b) {
        tc.cm[static_cast<std::size_t>(kEntangledBases[b])] += counts[b];
      }
      const auto total = sum(counts);
      tc.c_tau.set(i, j, total);
      tc.cq[i] += total;
      tc.cq[j] += total;
    }
    std::array<std::uint64_t, 4> letters{};
    for (const auto& t : h.terms()) {
      ++letters[static_cast<std::size_t>(t.string[i])];
    }
    // Identity letters are counted for every local basis.
    for (auto b : kLocalBases) {
      const auto p = b == Basis::X1 ? Pauli::X : b == Basis::Y1 ? Pauli::Y : Pauli::Z;
      const auto local = pairs_of(letters[0] + letters[static_cast<std::size_t>(p)]);
      tc.cq[i] += local;
      tc.cm[static_cast<std::size_t>(b)] += local;
    }
  }
  return tc;
}

DerivedOrders derive_orders(const TauCompatibility& tc) {
  DerivedOrders d;
  d.qubits = identity_map(tc.cq.size());
  std::stable_sort(d.qubits.begin(), d.qubits.end(),
                   [&](std::size_t a, std::size_t b) { return tc.cq[a] > tc.cq[b]; });
  d.measurements.assign(kAllBases.begin(), kAllBases.end());
  std::stable_sort(d.measurements.begin(), d.measurements.end(),
                   [&](Basis a, Basis b) { return tc.count(a) > tc.count(b); });
  return d;
}

} // namespace heem
