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

#include "heem/cli.hpp"

#include "heem/evaluator.hpp"
#include "heem/random.hpp"
#include "heem/simulator.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

namespace heem {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot read '" + path + "'");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << content)) {
    throw std::runtime_error("cannot write '" + path + "'");
  }
}

ConnectivityGraph widen(const ConnectivityGraph& g, std::size_t n) {
  if (g.n_physical() >= n) {
    return g;
  }
  const auto edges = g.edges();
  return ConnectivityGraph(n, edges);
}

GroupingResult heem_with(const Hamiltonian& h, const ConnectivityGraph& device,
                         EmbeddingStrategy strategy) {
  const auto tau = embed(strategy, h, device);
  const auto orders = derive_orders(tau_compatibility(h, tau, device));
  GroupingOptions options;
  options.qubit_order = orders.qubits;
  options.measurement_order = orders.measurements;
  return heem_grouping(h, device, tau, options);
}

std::uint64_t parse_seed_env() {
  const char* env = std::getenv("HEEM_SEED");
  if (env == nullptr || *env == '\0') {
    return 0;
  }
  std::uint64_t seed = 0;
  const std::string_view s(env);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), seed);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw std::invalid_argument("HEEM_SEED is not an unsigned integer: '" + std::string(s) + "'");
  }
  return seed;
}

StateVector load_state(const std::string& path) {
  const auto doc = nlohmann::json::parse(read_file(path));
  std::vector<std::complex<double>> amps;
  for (const auto& a : doc) {
    const auto pair = a.get<std::vector<double>>();
    if (pair.size() != 2) {
      throw std::invalid_argument("state amplitudes must be [re, im] pairs");
    }
    amps.emplace_back(pair[0], pair[1]);
  }
  return StateVector(std::move(amps));
}

std::size_t display_width(const std::string& s) {
  return static_cast<std::size_t>(
      std::count_if(s.begin(), s.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
}

} // namespace

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return {buf, res.ptr};
}

PlanDocument build_plan(const Hamiltonian& h, const std::optional<ConnectivityGraph>& conn,
                        Method method, EmbeddingStrategy strategy, std::uint64_t seed) {
  if (h.empty()) {
    throw std::invalid_argument("cannot plan an empty Hamiltonian");
  }
  const auto n = h.n_qubits();
  PlanDocument plan;
  plan.hamiltonian = h;
  plan.seed = seed;
  if (conn) {
    plan.connectivity = widen(*conn, n);
  }
  const auto device = plan.connectivity ? *plan.connectivity : ConnectivityGraph::complete(n);

  switch (method) {
  case Method::TPB:
    plan.result = tpb_grouping(h);
    break;
  case Method::EM:
    plan.result = em_grouping(h);
    break;
  case Method::HEEM:
    if (!conn) {
      throw std::invalid_argument("heem grouping needs a connectivity graph");
    }
    plan.embedding = strategy;
    plan.result = heem_with(h, device, strategy);
    break;
  }
  if (plan.result.embedding.empty()) {
    plan.result.embedding = identity_map(n);
  }
  plan.cost = count_cnots(plan.result, device, plan.result.embedding);
  return plan;
}

std::optional<std::string> find_plan_error(const PlanDocument& plan) {
  if (auto e = find_grouping_error(plan.hamiltonian, plan.result)) {
    return e;
  }
  const auto n = plan.hamiltonian.n_qubits();
  const auto device = plan.connectivity ? *plan.connectivity : ConnectivityGraph::complete(n);
  try {
    validate_embedding(plan.result.embedding, n, device.n_physical());
    const auto cost = count_cnots(plan.result, device, plan.result.embedding);
    if (cost != plan.cost) {
      return "cost report says " + std::to_string(plan.cost.groups) + " groups / " +
             std::to_string(plan.cost.cnots) + " CNOTs but the plan has " +
             std::to_string(cost.groups) + " / " + std::to_string(cost.cnots);
    }
  } catch (const std::exception& e) {
    return std::string(e.what());
  }
  return std::nullopt;
}

Hamiltonian montecarlo_instance(const Hamiltonian& h, std::uint64_t seed, std::uint64_t trial) {
  Rng rng(seed, trial);
  const auto n = h.n_qubits();
  const auto relabel = random_permutation(n, rng);
  const auto order = random_permutation(h.size(), rng);
  std::vector<Term> terms;
  terms.reserve(h.size());
  for (auto t : order) {
    std::vector<Pauli> letters(n);
    for (std::size_t q = 0; q < n; ++q) {
      letters[relabel[q]] = h[t].string[q];
    }
    terms.push_back({h[t].coefficient, PauliString(std::move(letters))});
  }
  return Hamiltonian(n, std::move(terms));
}

std::size_t montecarlo_groups(const Hamiltonian& h, const ConnectivityGraph& conn,
                              const std::string& method) {
  if (auto s = strategy_from_name(method)) {
    return heem_with(h, widen(conn, h.n_qubits()), *s).groups.size();
  }
  if (method == "tpb") {
    return tpb_grouping(h).groups.size();
  }
  if (method == "em") {
    return em_grouping(h).groups.size();
  }
  throw std::invalid_argument("unknown Monte Carlo method '" + method + "'");
}

std::vector<MonteCarloRow> run_montecarlo(const Hamiltonian& h, const ConnectivityGraph& conn,
                                          std::uint64_t trials, std::uint64_t seed,
                                          const std::vector<std::string>& methods,
                                          unsigned threads) {
  if (trials == 0) {
    throw std::invalid_argument("need at least one trial");
  }
  for (const auto& m : methods) {
    if (!strategy_from_name(m) && m != "tpb" && m != "em") {
      throw std::invalid_argument("unknown Monte Carlo method '" + m + "'");
    }
  }
  const auto device = widen(conn, h.n_qubits());
  if (threads == 0) {
    threads = std::max(1U, std::thread::hardware_concurrency());
  }
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, trials));

  std::vector<std::vector<MonteCarloRow>> per_trial(trials);
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (auto t = next++; t < trials; t = next++) {
      try {
        const auto instance = montecarlo_instance(h, seed, t);
        for (const auto& m : methods) {
          const auto start = std::chrono::steady_clock::now();
          const auto groups = montecarlo_groups(instance, device, m);
          const std::chrono::duration<double, std::milli> elapsed =
              std::chrono::steady_clock::now() - start;
          per_trial[t].push_back({t, m, groups, elapsed.count()});
        }
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) {
          failure = std::current_exception();
        }
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < threads; ++i) {
    pool.emplace_back(worker);
  }
  worker();
  for (auto& th : pool) {
    th.join();
  }
  if (failure) {
    std::rethrow_exception(failure);
  }

  std::vector<MonteCarloRow> rows;
  for (auto& v : per_trial) {
    std::move(v.begin(), v.end(), std::back_inserter(rows));
  }
  return rows;
}

MethodSummary summarize(const std::vector<MonteCarloRow>& rows, const std::string& method) {
  MethodSummary s;
  std::vector<double> xs;
  for (const auto& r : rows) {
    if (r.method == method) {
      xs.push_back(static_cast<double>(r.groups));
    }
  }
  if (xs.empty()) {
    return s;
  }
  double sum = 0.0;
  for (double x : xs) {
    sum += x;
  }
  s.mean = sum / static_cast<double>(xs.size());
  double var = 0.0;
  for (double x : xs) {
    var += (x - s.mean) * (x - s.mean);
  }
  s.std = std::sqrt(var / static_cast<double>(xs.size()));
  s.min = static_cast<std::size_t>(*std::min_element(xs.begin(), xs.end()));
  return s;
}

std::string montecarlo_csv(const std::vector<MonteCarloRow>& rows,
                           const std::vector<std::string>& methods, bool timings) {
  std::ostringstream out;
  out << "trial,method,groups" << (timings ? ",elapsed_ms" : "") << "\n";
  for (const auto& r : rows) {
    out << r.trial << ',' << r.method << ',' << r.groups;
    if (timings) {
      out << ',' << format_double(r.elapsed_ms);
    }
    out << "\n";
  }
  const char* pad = timings ? "," : "";
  for (const auto& m : methods) {
    const auto s = summarize(rows, m);
    out << "mean," << m << ',' << format_double(s.mean) << pad << "\n";
    out << "min," << m << ',' << s.min << pad << "\n";
    out << "std," << m << ',' << format_double(s.std) << pad << "\n";
  }
  return out.str();
}

std::vector<std::vector<std::string>> compat_table_cells() {
  const auto n = kCompatTableWords.size();
  std::vector<std::vector<std::string>> cells(n, std::vector<std::string>(n));
  for (std::size_t r = 0; r < n; ++r) {
    cells[r][r] = "---";
    const auto a = PauliString::from_string(kCompatTableWords[r]);
    for (std::size_t c = r + 1; c < n; ++c) {
      const auto options = entangled_options(a, PauliString::from_string(kCompatTableWords[c]));
      std::string cell;
      for (auto b : options) {
        cell += (cell.empty() ? "" : "/") + std::string(basis_name(b));
      }
      cells[r][c] = cell.empty() ? "✗" : cell;
    }
  }
  return cells;
}

std::string format_compat_table() {
  const auto cells = compat_table_cells();
  const auto n = kCompatTableWords.size();
  std::vector<std::size_t> width(n, 2);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t r = 0; r < n; ++r) {
      width[c] = std::max(width[c], display_width(cells[r][c]));
    }
  }
  auto pad = [](const std::string& s, std::size_t w) {
    return s + std::string(w - display_width(s), ' ');
  };
  std::ostringstream out;
  std::string header = "  ";
  for (std::size_t c = 0; c < n; ++c) {
    header += "  " + pad(kCompatTableWords[c], width[c]);
  }
  header.erase(header.find_last_not_of(' ') + 1);
  out << header << "\n";
  for (std::size_t r = 0; r < n; ++r) {
    std::string line = kCompatTableWords[r];
    for (std::size_t c = 0; c < n; ++c) {
      line += "  " + pad(cells[r][c], width[c]);
    }
    line.erase(line.find_last_not_of(' ') + 1);
    out << line << "\n";
  }
  return out.str();
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::uint64_t default_seed = 0;
  try {
    default_seed = parse_seed_env();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  CLI::App app{"Pauli grouping with hardware-efficient entangled measurements"};
  app.name("heem");
  app.require_subcommand(1);

  const std::vector<std::string> method_names{"tpb", "em", "heem"};
  const std::vector<std::string> strategy_names{"naive", "disconnected", "connected"};

  std::string ham_path;
  std::string conn_path;
  std::string out_path;
  std::string method = "heem";
  std::string strategy = "connected";
  std::uint64_t seed = default_seed;

  auto* group = app.add_subcommand("group", "Group a Hamiltonian and write a measurement plan");
  group->add_option("--hamiltonian", ham_path, "Hamiltonian file")->required();
  group->add_option("--connectivity", conn_path, "Device edge list");
  group->add_option("--method", method)->check(CLI::IsMember(method_names))->capture_default_str();
  group->add_option("--embedding", strategy)->check(CLI::IsMember(strategy_names))->capture_default_str();
  group->add_option("--seed", seed, "Recorded in the plan (default $HEEM_SEED or 0)");
  group->add_option("--out", out_path, "Plan file (default stdout)");

  std::string plan_path;
  std::string hist_path;
  std::string state = "zeros";
  std::string save_hist_path;
  std::uint64_t shots = 16384;
  bool simulate = false;
  bool exact = false;
  auto* evaluate = app.add_subcommand("evaluate", "Reconstruct <H> from a plan and outcomes");
  evaluate->add_option("--plan", plan_path)->required();
  auto* hist_opt = evaluate->add_option("--histograms", hist_path, "Outcome counts per group");
  auto* sim_opt = evaluate->add_flag("--simulate", simulate, "Sample outcomes from a simulated state");
  hist_opt->excludes(sim_opt);
  evaluate->add_option("--state", state, "'zeros' or a JSON file of [re, im] amplitudes")->capture_default_str();
  evaluate->add_option("--shots", shots, "Total shots, split evenly across groups")->capture_default_str();
  evaluate->add_option("--seed", seed);
  evaluate->add_flag("--exact", exact, "Use exact outcome probabilities instead of sampling");
  evaluate->add_option("--save-histograms", save_hist_path, "Write the sampled counts here");

  std::uint64_t trials = 100;
  std::vector<std::string> mc_methods{"naive", "disconnected", "connected"};
  bool timings = false;
  unsigned threads = 0;
  auto* montecarlo = app.add_subcommand("montecarlo", "Group counts over random qubit and term orders");
  montecarlo->add_option("--hamiltonian", ham_path)->required();
  montecarlo->add_option("--connectivity", conn_path)->required();
  montecarlo->add_option("--trials", trials)->check(CLI::PositiveNumber)->capture_default_str();
  montecarlo->add_option("--seed", seed);
  montecarlo->add_option("--methods", mc_methods)
      ->delimiter(',')
      ->check(CLI::IsMember({"naive", "disconnected", "connected", "tpb", "em"}));
  montecarlo->add_option("--out", out_path, "CSV file (default stdout)");
  montecarlo->add_flag("--timings", timings, "Add an elapsed_ms column");
  montecarlo->add_option("--threads", threads, "Worker threads (default: all cores)");

  auto* compat = app.add_subcommand("compat-table", "Print the two-qubit compatibility table");

  auto* verify = app.add_subcommand("verify", "Check a plan file");
  verify->add_option("--plan", plan_path)->required();

  auto* embed_cmd = app.add_subcommand("embed", "Map theoretical qubits onto a device");
  embed_cmd->add_option("--hamiltonian", ham_path)->required();
  embed_cmd->add_option("--connectivity", conn_path)->required();
  embed_cmd->add_option("--embedding", strategy)->check(CLI::IsMember(strategy_names))->capture_default_str();

  std::size_t n_qubits = 0;
  std::size_t n_terms = 0;
  auto* random_cmd = app.add_subcommand("random-hamiltonian", "Write a random Hamiltonian");
  random_cmd->add_option("--qubits", n_qubits)->required()->check(CLI::PositiveNumber);
  random_cmd->add_option("--terms", n_terms)->required();
  random_cmd->add_option("--seed", seed);
  random_cmd->add_option("--out", out_path);

  std::vector<const char*> argv{"heem"};
  for (const auto& a : args) {
    argv.push_back(a.c_str());
  }
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  auto emit = [&](const std::string& text) {
    if (out_path.empty()) {
      out << text;
    } else {
      write_file(out_path, text);
    }
  };

  try {
    if (group->parsed()) {
      const auto h = parse_hamiltonian(read_file(ham_path));
      std::optional<ConnectivityGraph> conn;
      if (!conn_path.empty()) {
        conn = parse_connectivity(read_file(conn_path), h.n_qubits());
      }
      const auto plan =
          build_plan(h, conn, *method_from_name(method), *strategy_from_name(strategy), seed);
      const auto text = serialize_plan(plan);
      if (auto e = find_plan_error(parse_plan(text))) {
        err << "verification failed: " << *e << "\n";
        return kExitVerify;
      }
      emit(text);
      (out_path.empty() ? err : out) << "method " << method << " groups " << plan.cost.groups
                                     << " cnots " << plan.cost.cnots << "\n";
      return kExitOk;
    }

    if (evaluate->parsed()) {
      const auto plan = parse_plan(read_file(plan_path));
      if (auto e = find_plan_error(plan)) {
        err << "verification failed: " << *e << "\n";
        return kExitVerify;
      }
      const auto& h = plan.hamiltonian;
      const auto& groups = plan.result.groups;
      out << "groups " << groups.size() << "\n";
      if (!hist_path.empty()) {
        const auto hists = parse_histograms(read_file(hist_path));
        out << "estimate " << format_double(expected_value(h, groups, hists)) << "\n";
        return kExitOk;
      }
      if (!simulate) {
        err << "error: evaluate needs --histograms or --simulate\n";
        return kExitUsage;
      }
      const auto psi = state == "zeros" ? StateVector::zeros(h.n_qubits()) : load_state(state);
      if (psi.n_qubits() != h.n_qubits()) {
        throw std::invalid_argument("state has " + std::to_string(psi.n_qubits()) +
                                    " qubits but the plan has " + std::to_string(h.n_qubits()));
      }
      std::vector<std::vector<double>> dists;
      for (const auto& g : groups) {
        dists.push_back(outcome_distribution(psi, g));
      }
      double estimate = 0.0;
      if (exact) {
        estimate = expected_value_exact(h, groups, dists);
      } else {
        if (shots < groups.size()) {
          throw std::invalid_argument("--shots " + std::to_string(shots) + " leaves some of the " +
                                      std::to_string(groups.size()) + " groups without shots");
        }
        std::vector<OutcomeHistogram> hists;
        for (std::size_t g = 0; g < groups.size(); ++g) {
          const auto share = shots / groups.size() + (g < shots % groups.size() ? 1 : 0);
          hists.push_back(sample_histogram(dists[g], h.n_qubits(), share, seed, g));
        }
        if (!save_hist_path.empty()) {
          write_file(save_hist_path, serialize_histograms(hists));
        }
        estimate = expected_value(h, groups, hists);
        out << "shots " << shots << "\n";
      }
      out << "estimate " << format_double(estimate) << "\n";
      out << "reference " << format_double(dense_expectation(psi, h)) << "\n";
      return kExitOk;
    }

    if (montecarlo->parsed()) {
      const auto h = parse_hamiltonian(read_file(ham_path));
      const auto conn = parse_connectivity(read_file(conn_path), h.n_qubits());
      const auto rows = run_montecarlo(h, conn, trials, seed, mc_methods, threads);
      emit(montecarlo_csv(rows, mc_methods, timings));
      return kExitOk;
    }

    if (compat->parsed()) {
      out << format_compat_table();
      return kExitOk;
    }

    if (verify->parsed()) {
      const auto plan = parse_plan(read_file(plan_path));
      if (auto e = find_plan_error(plan)) {
        err << "verification failed: " << *e << "\n";
        return kExitVerify;
      }
      out << "ok " << plan.result.groups.size() << " groups " << plan.cost.cnots << " cnots\n";
      return kExitOk;
    }

    if (embed_cmd->parsed()) {
      const auto h = parse_hamiltonian(read_file(ham_path));
      const auto conn = parse_connectivity(read_file(conn_path), h.n_qubits());
      const auto s = *strategy_from_name(strategy);
      const auto tau = embed(s, h, conn);
      const nlohmann::json doc{{"embedding", strategy_name(s)},
                               {"tau", tau},
                               {"omega", omega(tau, compatibility_matrix(h), conn)},
                               {"connectivity_digest", conn.digest()}};
      out << doc.dump(2) << "\n";
      return kExitOk;
    }

    if (random_cmd->parsed()) {
      Rng rng(seed);
      emit(serialize_hamiltonian(random_hamiltonian(n_qubits, n_terms, rng)));
      return kExitOk;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

} // namespace heem
