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

#include "heem/embedding.hpp"
#include "heem/evaluator.hpp"
#include "heem/grouping.hpp"
#include "heem/pauli.hpp"
#include "heem/topology.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace heem {

inline constexpr int kPlanSchemaVersion = 1;

/// Everything needed to dispatch a measurement plan and rebuild <H> from its
/// outcomes. `connectivity` is the device used for embedding and costing; it
/// is absent for plans built without one.
struct PlanDocument {
  Hamiltonian hamiltonian;
  GroupingResult result;
  std::optional<EmbeddingStrategy> embedding;
  std::optional<ConnectivityGraph> connectivity;
  std::uint64_t seed = 0;
  std::string rng{"mt19937_64"};
  CostReport cost;
};

/// Malformed plan or histogram document.
class PlanFormatError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

std::string serialize_plan(const PlanDocument& plan);
/// Throws PlanFormatError on schema mismatches, unknown names, gate lists that
/// disagree with the blocks, or a connectivity digest that does not match the
/// stored edges. Does not run verify_grouping.
PlanDocument parse_plan(std::string_view text);

std::string serialize_histograms(const std::vector<OutcomeHistogram>& histograms);
/// JSON object mapping group id to {bitstring: count}. Shots are the count sums.
std::vector<OutcomeHistogram> parse_histograms(std::string_view text);

} // namespace heem
