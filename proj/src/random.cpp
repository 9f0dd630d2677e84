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

#include "heem/random.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <set>
#include <stdexcept>

namespace heem {

namespace {

std::mt19937_64 seeded(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return std::mt19937_64(seq);
}

} // namespace

Rng::Rng(std::uint64_t seed, std::uint64_t stream) : engine_(seeded(seed, stream)) {}

double Rng::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) {
    throw std::invalid_argument("Rng::below: empty range");
  }
  const auto limit = std::numeric_limits<std::uint64_t>::max() -
                     std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x = 0;
  do {
    x = next();
  } while (x >= limit);
  return x % n;
}

double Rng::normal() {
  const double u1 = 1.0 - uniform(); // (0, 1]
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::vector<std::size_t> random_permutation(std::size_t n, Rng& rng) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  rng.shuffle(p);
  return p;
}

Hamiltonian random_hamiltonian(std::size_t n_qubits, std::size_t n_terms, Rng& rng) {
  if (n_qubits == 0) {
    throw std::invalid_argument("random_hamiltonian: need at least one qubit");
  }
  if (n_qubits < 32 && n_terms > (std::size_t{1} << (2 * n_qubits))) {
    throw std::invalid_argument("random_hamiltonian: more terms than distinct strings");
  }
  std::set<PauliString> seen;
  std::vector<Term> terms;
  while (terms.size() < n_terms) {
    std::vector<Pauli> letters(n_qubits);
    for (auto& p : letters) {
      p = static_cast<Pauli>(rng.below(4));
    }
    PauliString s(std::move(letters));
    double c = 0.0;
    while (c == 0.0) {
      c = 2.0 * rng.uniform() - 1.0;
    }
    if (seen.insert(s).second) {
      terms.push_back({c, std::move(s)});
    }
  }
  return Hamiltonian(n_qubits, std::move(terms));
}

} // namespace heem
