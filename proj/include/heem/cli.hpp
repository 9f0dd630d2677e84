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
#include "heem/grouping.hpp"
#include "heem/plan_io.hpp"
#include "heem/topology.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace heem {

enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitVerify = 2 };

/// The device qubit count is raised to the Hamiltonian's when the edge list
/// names fewer qubits. HEEM requires `conn`; EM groups without it and charges
/// its CNOTs on `conn` under the identity layout (on a complete graph when
/// absent). TPB ignores both `conn` and `strategy`.
PlanDocument build_plan(const Hamiltonian& h, const std::optional<ConnectivityGraph>& conn,
                        Method method, EmbeddingStrategy strategy, std::uint64_t seed);

/// Recomputes the cost of a loaded plan and checks the grouping. Returns a
/// diagnostic on the first problem found.
std::optional<std::string> find_plan_error(const PlanDocument& plan);

/// Trial `trial` of the ordering study: qubit q is relabelled perm[q] and
/// the term list is shuffled, both drawn from Rng(seed, trial).
Hamiltonian montecarlo_instance(const Hamiltonian& h, std::uint64_t seed, std::uint64_t trial);

struct MonteCarloRow {
  std::uint64_t trial = 0;
  std::string method;
  std::size_t groups = 0;
  double elapsed_ms = 0.0;
};

/// Methods are embedding names (naive, disconnected, connected: HEEM under
/// that layout) or tpb / em. Rows come back sorted by (trial, method
/// position) whatever the thread count.
std::vector<MonteCarloRow> run_montecarlo(const Hamiltonian& h, const ConnectivityGraph& conn,
                                          std::uint64_t trials, std::uint64_t seed,
                                          const std::vector<std::string>& methods,
                                          unsigned threads = 0);

/// Group count of one method on one (already permuted) instance.
std::size_t montecarlo_groups(const Hamiltonian& h, const ConnectivityGraph& conn,
                              const std::string& method);

struct MethodSummary {
  double mean = 0.0;
  std::size_t min = 0;
  double std = 0.0;
};
MethodSummary summarize(const std::vector<MonteCarloRow>& rows, const std::string& method);

std::string montecarlo_csv(const std::vector<MonteCarloRow>& rows,
                           const std::vector<std::string>& methods, bool timings);

/// Row and column labels of the printed compatibility table.
inline constexpr std::array<const char*, 9> kCompatTableWords = {"XX", "YZ", "ZY", "YY", "XZ",
                                                                 "ZX", "ZZ", "XY", "YX"};
/// cells[r][c] for c > r: basis names joined by '/', or "✗". The diagonal
/// is "---" and the lower triangle is empty.
std::vector<std::vector<std::string>> compat_table_cells();
std::string format_compat_table();

/// Shortest round-trip decimal form.
std::string format_double(double v);

/// Entry point behind the `heem` binary. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace heem
