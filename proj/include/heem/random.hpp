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

#include "heem/pauli.hpp"

#include <cstdint>
#include <random>
#include <string_view>
#include <utility>
#include <vector>

namespace heem {

/// std::mt19937_64 with the derived draws written out, since the standard
/// distributions differ between library implementations. Identical seeds
/// give identical streams everywhere.
///
///   uniform(): (next() >> 11) * 2^-53
///   below(n):  next() % n, rejecting draws >= the largest multiple of n
///   normal():  Box-Muller on two uniform() draws, cosine branch
///   shuffle:   Fisher-Yates from the back, swapping i with below(i + 1)
class Rng {
public:
  static constexpr std::string_view kAlgorithm = "mt19937_64";

  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// Independent stream `stream` of `seed`, seeded through std::seed_seq over
  /// the four 32-bit halves.
  Rng(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next() { return engine_(); }
  double uniform();
  std::uint64_t below(std::uint64_t n);
  double normal();

  template <typename T> void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i-- > 1;) {
      std::swap(v[i], v[static_cast<std::size_t>(below(i + 1))]);
    }
  }

private:
  std::mt19937_64 engine_;
};

std::vector<std::size_t> random_permutation(std::size_t n, Rng& rng);

/// `n_terms` distinct strings drawn uniformly from {I,X,Y,Z}^n_qubits with
/// coefficients uniform in [-1, 1). Throws std::invalid_argument when more
/// terms are requested than distinct strings exist.
Hamiltonian random_hamiltonian(std::size_t n_qubits, std::size_t n_terms, Rng& rng);

} // namespace heem
