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

#include "heem/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace heem {

std::string_view gate_name(GateKind kind) {
  switch (kind) {
  case GateKind::H:
    return "h";
  case GateKind::S:
    return "s";
  case GateKind::Sdg:
    return "sdg";
  case GateKind::U2:
    return "u2";
  case GateKind::CNOT:
    return "cx";
  }
  return "?";
}

std::optional<GateKind> gate_from_name(std::string_view name) {
  for (auto k : {GateKind::H, GateKind::S, GateKind::Sdg, GateKind::U2, GateKind::CNOT}) {
    if (gate_name(k) == name) {
      return k;
    }
  }
  return std::nullopt;
}

std::size_t count_cnots(const Circuit& c) {
  return static_cast<std::size_t>(
      std::count_if(c.begin(), c.end(), [](const Gate& g) { return g.kind == GateKind::CNOT; }));
}

Eigen::Matrix2cd gate_matrix(const Gate& g) {
  using C = std::complex<double>;
  const double r = 1.0 / std::sqrt(2.0);
  Eigen::Matrix2cd m;
  switch (g.kind) {
  case GateKind::H:
    m << r, r, r, -r;
    return m;
  case GateKind::S:
    m << 1.0, 0.0, 0.0, C(0.0, 1.0);
    return m;
  case GateKind::Sdg:
    m << 1.0, 0.0, 0.0, C(0.0, -1.0);
    return m;
  case GateKind::U2:
    m << r, -r * std::polar(1.0, g.lambda), r * std::polar(1.0, g.phi),
        r * std::polar(1.0, g.phi + g.lambda);
    return m;
  case GateKind::CNOT:
    break;
  }
  throw std::invalid_argument("gate_matrix: not a single-qubit gate");
}

} // namespace heem
