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

#include <cstddef>
#include <istream>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace heem {

using Edge = std::pair<std::size_t, std::size_t>;

/// Undirected coupling graph of a device with `n_physical` qubits.
class ConnectivityGraph {
public:
  ConnectivityGraph() = default;
  explicit ConnectivityGraph(std::size_t n_physical);
  /// Throws std::invalid_argument on self-loops or out-of-range endpoints.
  ConnectivityGraph(std::size_t n_physical, std::span<const Edge> edges);

  static ConnectivityGraph complete(std::size_t n);
  static ConnectivityGraph path(std::size_t n);
  static ConnectivityGraph grid(std::size_t rows, std::size_t cols);

  void add_edge(std::size_t a, std::size_t b);

  [[nodiscard]] std::size_t n_physical() const { return n_; }
  [[nodiscard]] bool has_edge(std::size_t a, std::size_t b) const;
  [[nodiscard]] std::span<const std::size_t> neighbors(std::size_t v) const {
    return adjacency_[v];
  }
  [[nodiscard]] std::size_t degree(std::size_t v) const { return adjacency_[v].size(); }
  [[nodiscard]] std::size_t n_edges() const;
  /// Sorted (a < b) edge list.
  [[nodiscard]] std::vector<Edge> edges() const;

  static constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();
  /// BFS hop counts from `source`; unreachable vertices get kUnreachable.
  [[nodiscard]] std::vector<std::size_t> distances_from(std::size_t source) const;
  /// Vertices reachable from `source`, including itself.
  [[nodiscard]] std::size_t component_size(std::size_t source) const;
  /// True iff the subgraph induced by `vertices` is connected (empty is connected).
  [[nodiscard]] bool induced_connected(std::span<const std::size_t> vertices) const;

  /// FNV-1a 64 over the canonical "n;a-b;..." edge text, as 16 hex digits.
  [[nodiscard]] std::string digest() const;

  friend bool operator==(const ConnectivityGraph& a, const ConnectivityGraph& b) {
    return a.n_ == b.n_ && a.edges() == b.edges();
  }

private:
  std::size_t n_ = 0;
  std::vector<std::vector<std::size_t>> adjacency_;
};

/// Reads one "i j" pair per line ('#' comments allowed). The device size is
/// max(largest index + 1, min_physical). Errors are std::runtime_error with
/// the line number.
ConnectivityGraph parse_connectivity(std::istream& in, std::size_t min_physical = 0);
ConnectivityGraph parse_connectivity(std::string_view text, std::size_t min_physical = 0);

/// tau[i] is the physical qubit hosting theoretical qubit i.
using EmbeddingMap = std::vector<std::size_t>;

EmbeddingMap identity_map(std::size_t n);

/// Throws std::invalid_argument unless `tau` has `n_theoretical` entries, is
/// injective and every image is below `n_physical`.
void validate_embedding(std::span<const std::size_t> tau, std::size_t n_theoretical,
                        std::size_t n_physical);

} // namespace heem
