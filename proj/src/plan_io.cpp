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

#include "heem/plan_io.hpp"

#include "json.hpp"

#include <algorithm>
#include <charconv>

namespace heem {

using nlohmann::json;

namespace {

json gate_to_json(const Gate& g) {
  json j{{"name", gate_name(g.kind)}};
  if (g.arity() == 1) {
    j["qubits"] = {g.qubits[0]};
  } else {
    j["qubits"] = {g.qubits[0], g.qubits[1]};
  }
  if (g.kind == GateKind::U2) {
    j["phi"] = g.phi;
    j["lambda"] = g.lambda;
  }
  return j;
}

Gate gate_from_json(const json& j) {
  const auto name = j.at("name").get<std::string>();
  const auto kind = gate_from_name(name);
  if (!kind) {
    throw PlanFormatError("unknown gate '" + name + "'");
  }
  const auto qs = j.at("qubits").get<std::vector<std::size_t>>();
  Gate g{*kind, {}, 0.0, 0.0};
  if (qs.size() != g.arity()) {
    throw PlanFormatError("gate '" + name + "' has the wrong number of qubits");
  }
  g.qubits = {qs[0], qs.back()};
  if (g.kind == GateKind::U2) {
    g.phi = j.at("phi").get<double>();
    g.lambda = j.at("lambda").get<double>();
  }
  return g;
}

json block_to_json(const Block& b) {
  json j{{"basis", basis_name(b.basis)}};
  if (b.arity() == 1) {
    j["qubits"] = {b.qubits[0]};
  } else {
    j["qubits"] = {b.qubits[0], b.qubits[1]};
  }
  return j;
}

Block block_from_json(const json& j) {
  const auto name = j.at("basis").get<std::string>();
  const auto basis = basis_from_name(name);
  if (!basis) {
    throw PlanFormatError("unknown basis '" + name + "'");
  }
  const auto qs = j.at("qubits").get<std::vector<std::size_t>>();
  if (qs.size() != arity(*basis)) {
    throw PlanFormatError("block with basis " + name + " has the wrong number of qubits");
  }
  return arity(*basis) == 1 ? Block::local(qs[0], *basis) : Block::pair(qs[0], qs[1], *basis);
}

json graph_to_json(const ConnectivityGraph& g) {
  json edges = json::array();
  for (const auto& [a, b] : g.edges()) {
    edges.push_back({a, b});
  }
  return {{"n_physical", g.n_physical()}, {"edges", edges}, {"digest", g.digest()}};
}

ConnectivityGraph graph_from_json(const json& j) {
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges")) {
    const auto pair = e.get<std::vector<std::size_t>>();
    if (pair.size() != 2) {
      throw PlanFormatError("connectivity edge must have two endpoints");
    }
    edges.emplace_back(pair[0], pair[1]);
  }
  ConnectivityGraph g;
  try {
    g = ConnectivityGraph(j.at("n_physical").get<std::size_t>(), edges);
  } catch (const std::invalid_argument& e) {
    throw PlanFormatError(std::string("connectivity: ") + e.what());
  }
  if (j.at("digest").get<std::string>() != g.digest()) {
    throw PlanFormatError("connectivity digest does not match its edges");
  }
  return g;
}

std::vector<std::string> basis_names(const std::vector<Basis>& order) {
  std::vector<std::string> out;
  for (auto b : order) {
    out.emplace_back(basis_name(b));
  }
  return out;
}

std::vector<Basis> bases_from_names(const std::vector<std::string>& names) {
  std::vector<Basis> out;
  for (const auto& n : names) {
    const auto b = basis_from_name(n);
    if (!b) {
      throw PlanFormatError("unknown basis '" + n + "'");
    }
    out.push_back(*b);
  }
  return out;
}

PlanDocument plan_from_json(const json& doc) {
  if (doc.at("schema_version").get<int>() != kPlanSchemaVersion) {
    throw PlanFormatError("unsupported schema_version " + doc.at("schema_version").dump());
  }
  PlanDocument plan;
  const auto& meta = doc.at("metadata");

  const auto method = meta.at("method").get<std::string>();
  if (auto m = method_from_name(method)) {
    plan.result.method = *m;
  } else {
    throw PlanFormatError("unknown method '" + method + "'");
  }
  if (!meta.at("embedding").is_null()) {
    const auto name = meta.at("embedding").get<std::string>();
    plan.embedding = strategy_from_name(name);
    if (!plan.embedding) {
      throw PlanFormatError("unknown embedding '" + name + "'");
    }
  }
  plan.seed = meta.at("seed").get<std::uint64_t>();
  plan.rng = meta.at("rng").get<std::string>();
  plan.result.term_order = meta.at("term_order").get<std::vector<std::size_t>>();
  plan.result.qubit_order = meta.at("qubit_order").get<std::vector<std::size_t>>();
  plan.result.measurement_order =
      bases_from_names(meta.at("measurement_order").get<std::vector<std::string>>());
  plan.result.embedding = meta.at("tau").get<std::vector<std::size_t>>();
  if (!meta.at("connectivity").is_null()) {
    plan.connectivity = graph_from_json(meta.at("connectivity"));
  }
  if (plan.result.method == Method::HEEM) {
    if (!plan.connectivity) {
      throw PlanFormatError("HEEM plan without connectivity");
    }
    plan.result.connectivity = plan.connectivity;
  }

  const auto& ham = doc.at("hamiltonian");
  const auto n = ham.at("n_qubits").get<std::size_t>();
  std::vector<Term> terms;
  for (const auto& t : ham.at("terms")) {
    try {
      terms.push_back(
          {t.at("coefficient").get<double>(), PauliString::from_string(t.at("pauli").get<std::string>())});
    } catch (const std::invalid_argument& e) {
      throw PlanFormatError(std::string("hamiltonian: ") + e.what());
    }
  }
  try {
    plan.hamiltonian = Hamiltonian(n, terms);
  } catch (const std::invalid_argument& e) {
    throw PlanFormatError(std::string("hamiltonian: ") + e.what());
  }
  if (plan.hamiltonian.size() != terms.size()) {
    throw PlanFormatError("hamiltonian has duplicate or zero terms");
  }
  if (meta.at("n_qubits").get<std::size_t>() != n) {
    throw PlanFormatError("metadata n_qubits disagrees with the hamiltonian");
  }

  const auto& groups = doc.at("groups");
  for (std::size_t g = 0; g < groups.size(); ++g) {
    const auto& jg = groups[g];
    if (jg.at("id").get<std::size_t>() != g) {
      throw PlanFormatError("group ids must be 0, 1, 2, ... in order");
    }
    Group group;
    group.terms = jg.at("terms").get<std::vector<std::size_t>>();
    for (const auto& b : jg.at("blocks")) {
      group.assignment.blocks.push_back(block_from_json(b));
    }
    Circuit gates;
    for (const auto& gj : jg.at("gates")) {
      gates.push_back(gate_from_json(gj));
    }
    if (gates != group_circuit(group.assignment)) {
      throw PlanFormatError("group " + std::to_string(g) + ": gate list does not match its blocks");
    }
    plan.result.groups.push_back(std::move(group));
  }

  const auto& cost = doc.at("cost");
  plan.cost.method = plan.result.method;
  plan.cost.groups = cost.at("groups").get<std::size_t>();
  plan.cost.cnots = cost.at("cnots").get<std::size_t>();
  plan.cost.circuits = cost.at("circuits").get<std::size_t>();
  return plan;
}

} // namespace

std::string serialize_plan(const PlanDocument& plan) {
  const auto& r = plan.result;
  json meta{
      {"method", method_name(r.method)},
      {"embedding", plan.embedding ? json(strategy_name(*plan.embedding)) : json(nullptr)},
      {"seed", plan.seed},
      {"rng", plan.rng},
      {"n_qubits", plan.hamiltonian.n_qubits()},
      {"n_physical", plan.connectivity ? plan.connectivity->n_physical() : plan.hamiltonian.n_qubits()},
      {"term_order", r.term_order},
      {"qubit_order", r.qubit_order},
      {"measurement_order", basis_names(r.measurement_order)},
      {"tau", r.embedding},
      {"connectivity", plan.connectivity ? graph_to_json(*plan.connectivity) : json(nullptr)},
  };

  json terms = json::array();
  for (const auto& t : plan.hamiltonian.terms()) {
    terms.push_back({{"coefficient", t.coefficient}, {"pauli", t.string.to_string()}});
  }

  json groups = json::array();
  for (std::size_t g = 0; g < r.groups.size(); ++g) {
    json blocks = json::array();
    for (const auto& b : r.groups[g].assignment.blocks) {
      blocks.push_back(block_to_json(b));
    }
    json gates = json::array();
    for (const auto& gate : group_circuit(r.groups[g].assignment)) {
      gates.push_back(gate_to_json(gate));
    }
    groups.push_back({{"id", g}, {"terms", r.groups[g].terms}, {"blocks", blocks}, {"gates", gates}});
  }

  json doc{
      {"schema_version", kPlanSchemaVersion},
      {"metadata", meta},
      {"hamiltonian", {{"n_qubits", plan.hamiltonian.n_qubits()}, {"terms", terms}}},
      {"groups", groups},
      {"cost",
       {{"groups", plan.cost.groups}, {"cnots", plan.cost.cnots}, {"circuits", plan.cost.circuits}}},
  };
  return doc.dump(2) + "\n";
}

PlanDocument parse_plan(std::string_view text) {
  try {
    return plan_from_json(json::parse(text));
  } catch (const json::exception& e) {
    throw PlanFormatError(std::string("plan: ") + e.what());
  }
}

std::string serialize_histograms(const std::vector<OutcomeHistogram>& histograms) {
  json doc = json::object();
  for (const auto& h : histograms) {
    doc[std::to_string(h.group_id)] = h.counts;
  }
  return doc.dump(2) + "\n";
}

std::vector<OutcomeHistogram> parse_histograms(std::string_view text) {
  std::vector<OutcomeHistogram> out;
  try {
    const auto doc = json::parse(text);
    if (!doc.is_object()) {
      throw PlanFormatError("histograms: expected an object keyed by group id");
    }
    for (const auto& [key, counts] : doc.items()) {
      OutcomeHistogram h;
      const auto* end = key.data() + key.size();
      const auto [ptr, ec] = std::from_chars(key.data(), end, h.group_id);
      if (ec != std::errc{} || ptr != end) {
        throw PlanFormatError("histograms: group id '" + key + "' is not a number");
      }
      h.counts = counts.get<std::map<std::string, std::uint64_t>>();
      for (const auto& [bits, c] : h.counts) {
        h.shots += c;
      }
      out.push_back(std::move(h));
    }
  } catch (const json::exception& e) {
    throw PlanFormatError(std::string("histograms: ") + e.what());
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.group_id < b.group_id; });
  return out;
}

} // namespace heem
