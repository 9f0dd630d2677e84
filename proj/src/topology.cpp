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

#include "heem/topology.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <deque>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace heem {

ConnectivityGraph::ConnectivityGraph(std::size_t n_physical)
    : n_(n_physical), adjacency_(n_physical) {}

ConnectivityGraph::ConnectivityGraph(std::size_t n_physical, std::span<const Edge> edges)
    : ConnectivityGraph(n_physical) {
  for (const auto& [a, b] : edges) {
    add_edge(a, b);
  }
}

ConnectivityGraph ConnectivityGraph::complete(std::size_t n) {
  ConnectivityGraph g(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      g.add_edge(a, b);
    }
  }
  return g;
}

ConnectivityGraph ConnectivityGraph::path(std::size_t n) {
  ConnectivityGraph g(n);
  for (std::size_t a = 0; a + 1 < n; ++a) {
    g.add_edge(a, a + 1);
  }
  return g;
}

ConnectivityGraph ConnectivityGraph::grid(std::size_t rows, std::size_t cols) {
  ConnectivityGraph g(rows * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      const auto v = r * cols + c;
      if (c + 1 < cols) {
        g.add_edge(v, v + 1);
      }
      if (r + 1 < rows) {
        g.add_edge(v, v + cols);
      }
    }
  }
  return g;
}

void ConnectivityGraph::add_edge(std::size_t a, std::size_t b) {
  if (a == b) {
    throw std::invalid_argument("connectivity: self-loop on qubit " + std::to_string(a));
  }
  if (a >= n_ || b >= n_) {
    throw std::invalid_argument("connectivity: edge (" + std::to_string(a) + ", " +
                                std::to_string(b) + ") out of range for " + std::to_string(n_) +
                                " qubits");
  }
  if (has_edge(a, b)) {
    return;
  }
  adjacency_[a].push_back(b);
  adjacency_[b].push_back(a);
  std::sort(adjacency_[a].begin(), adjacency_[a].end());
  std::sort(adjacency_[b].begin(), adjacency_[b].end());
}

bool ConnectivityGraph::has_edge(std::size_t a, std::size_t b) const {
  if (a >= n_ || b >= n_) {
    return false;
  }
  return std::binary_search(adjacency_[a].begin(), adjacency_[a].end(), b);
}

std::size_t ConnectivityGraph::n_edges() const {
  std::size_t total = 0;
  for (const auto& nb : adjacency_) {
    total += nb.size();
  }
  return total / 2;
}

std::vector<Edge> ConnectivityGraph::edges() const {
  std::vector<Edge> out;
  for (std::size_t a = 0; a < n_; ++a) {
    for (auto b : adjacency_[a]) {
      if (a < b) {
        out.emplace_back(a, b);
      }
    }
  }
  return out;
}

std::vector<std::size_t> ConnectivityGraph::distances_from(std::size_t source) const {
  std::vector<std::size_t> dist(n_, kUnreachable);
  std::deque<std::size_t> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    auto v = queue.front();
    queue.pop_front();
    for (auto w : adjacency_[v]) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::size_t ConnectivityGraph::component_size(std::size_t source) const {
  auto dist = distances_from(source);
  return static_cast<std::size_t>(
      std::count_if(dist.begin(), dist.end(), [](auto d) { return d != kUnreachable; }));
}

bool ConnectivityGraph::induced_connected(std::span<const std::size_t> vertices) const {
  if (vertices.empty()) {
    return true;
  }
  std::vector<char> inside(n_, 0);
  for (auto v : vertices) {
    inside[v] = 1;
  }
  std::vector<char> seen(n_, 0);
  std::vector<std::size_t> stack{vertices.front()};
  seen[vertices.front()] = 1;
  std::size_t reached = 0;
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    ++reached;
    for (auto w : adjacency_[v]) {
      if (inside[w] && !seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  return reached == vertices.size();
}

std::string ConnectivityGraph::digest() const {
  std::string canonical = std::to_string(n_);
  for (const auto& [a, b] : edges()) {
    canonical += ';' + std::to_string(a) + '-' + std::to_string(b);
  }
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : canonical) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = kHex[h & 0xF];
    h >>= 4;
  }
  return out;
}

namespace {

bool parse_index(std::string_view tok, std::size_t& out) {
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && ptr == tok.data() + tok.size();
}

} // namespace

ConnectivityGraph parse_connectivity(std::istream& in, std::size_t min_physical) {
  std::vector<Edge> edges;
  std::size_t n = min_physical;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) {
      raw.resize(hash);
    }
    std::istringstream fields(raw);
    std::vector<std::string> tokens;
    for (std::string tok; fields >> tok;) {
      tokens.push_back(tok);
    }
    if (tokens.empty()) {
      continue;
    }
    std::size_t a = 0;
    std::size_t b = 0;
    if (tokens.size() != 2 || !parse_index(tokens[0], a) || !parse_index(tokens[1], b)) {
      throw std::runtime_error("line " + std::to_string(line_no) +
                               ": expected two non-negative qubit indices");
    }
    if (a == b) {
      throw std::runtime_error("line " + std::to_string(line_no) + ": self-loop on qubit " +
                               std::to_string(a));
    }
    edges.emplace_back(a, b);
    n = std::max({n, a + 1, b + 1});
  }
  return ConnectivityGraph(n, edges);
}

ConnectivityGraph parse_connectivity(std::string_view text, std::size_t min_physical) {
  std::istringstream in{std::string(text)};
  return parse_connectivity(in, min_physical);
}

EmbeddingMap identity_map(std::size_t n) {
  EmbeddingMap tau(n);
  std::iota(tau.begin(), tau.end(), 0);
  return tau;
}

void validate_embedding(std::span<const std::size_t> tau, std::size_t n_theoretical,
                        std::size_t n_physical) {
  if (tau.size() != n_theoretical) {
    throw std::invalid_argument("embedding has " + std::to_string(tau.size()) +
                                " entries, expected " + std::to_string(n_theoretical));
  }
  std::vector<char> used(n_physical, 0);
  for (std::size_t i = 0; i < tau.size(); ++i) {
    if (tau[i] >= n_physical) {
      throw std::invalid_argument("embedding maps qubit " + std::to_string(i) +
                                  " out of range to " + std::to_string(tau[i]));
    }
    if (used[tau[i]]) {
      throw std::invalid_argument("embedding is not injective: physical qubit " +
                                  std::to_string(tau[i]) + " used twice");
    }
    used[tau[i]] = 1;
  }
}

} // namespace heem
