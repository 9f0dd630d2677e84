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

#include "heem/pauli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

namespace heem {

char to_char(Pauli p) {
  static constexpr char kLetters[] = {'I', 'X', 'Y', 'Z'};
  return kLetters[static_cast<std::size_t>(p)];
}

std::optional<Pauli> pauli_from_char(char c) {
  switch (c) {
  case 'I':
    return Pauli::I;
  case 'X':
    return Pauli::X;
  case 'Y':
    return Pauli::Y;
  case 'Z':
    return Pauli::Z;
  default:
    return std::nullopt;
  }
}

PauliString PauliString::from_string(std::string_view text) {
  std::vector<Pauli> letters;
  letters.reserve(text.size());
  for (char c : text) {
    auto p = pauli_from_char(c);
    if (!p) {
      throw std::invalid_argument("illegal Pauli letter '" + std::string(1, c) + "'");
    }
    letters.push_back(*p);
  }
  return PauliString(std::move(letters));
}

PauliString PauliString::restrict(std::span<const std::size_t> qubits) const {
  std::vector<Pauli> out;
  out.reserve(qubits.size());
  for (auto q : qubits) {
    out.push_back(letters_.at(q));
  }
  return PauliString(std::move(out));
}

bool PauliString::is_identity() const {
  return std::all_of(letters_.begin(), letters_.end(), [](Pauli p) { return p == Pauli::I; });
}

std::string PauliString::to_string() const {
  std::string s;
  s.reserve(letters_.size());
  for (auto p : letters_) {
    s.push_back(to_char(p));
  }
  return s;
}

Hamiltonian::Hamiltonian(std::size_t n_qubits, std::vector<Term> terms) : n_qubits_(n_qubits) {
  std::map<PauliString, std::size_t> seen;
  for (auto& t : terms) {
    if (t.string.size() != n_qubits) {
      throw std::invalid_argument("term " + t.string.to_string() + " has length " +
                                  std::to_string(t.string.size()) + ", expected " +
                                  std::to_string(n_qubits));
    }
    if (!std::isfinite(t.coefficient)) {
      throw std::invalid_argument("non-finite coefficient for " + t.string.to_string());
    }
    auto [it, inserted] = seen.try_emplace(t.string, terms_.size());
    if (inserted) {
      terms_.push_back(std::move(t));
    } else {
      terms_[it->second].coefficient += t.coefficient;
    }
  }
  std::erase_if(terms_, [](const Term& t) { return t.coefficient == 0.0; });
}

ParseError::ParseError(ParseErrorKind kind, std::size_t line, const std::string& what)
    : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
      kind_(kind), line_(line) {}

namespace {

std::string_view trim(std::string_view s) {
  const auto* ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) {
    return {};
  }
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

} // namespace

Hamiltonian parse_hamiltonian(std::istream& in) {
  std::vector<Term> terms;
  std::optional<std::size_t> width;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) {
      continue;
    }
    auto split = line.find_first_of(" \t");
    if (split == std::string_view::npos) {
      throw ParseError(ParseErrorKind::MalformedLine, line_no,
                       "expected '<coefficient> <pauli word>'");
    }
    auto coeff_text = line.substr(0, split);
    auto word = trim(line.substr(split));
    if (word.find_first_of(" \t") != std::string_view::npos) {
      throw ParseError(ParseErrorKind::MalformedLine, line_no,
                       "trailing tokens after pauli word");
    }

    // from_chars rejects a leading '+', which is common in exported files.
    if (coeff_text.size() > 1 && coeff_text.front() == '+') {
      coeff_text.remove_prefix(1);
    }
    double coeff = 0.0;
    auto [ptr, ec] = std::from_chars(coeff_text.data(), coeff_text.data() + coeff_text.size(), coeff);
    if (ec != std::errc() || ptr != coeff_text.data() + coeff_text.size() || !std::isfinite(coeff)) {
      throw ParseError(ParseErrorKind::MalformedCoefficient, line_no,
                       "malformed coefficient '" + std::string(coeff_text) + "'");
    }

    std::vector<Pauli> letters;
    letters.reserve(word.size());
    for (char c : word) {
      auto p = pauli_from_char(c);
      if (!p) {
        throw ParseError(ParseErrorKind::IllegalLetter, line_no,
                         "illegal letter '" + std::string(1, c) + "' in '" + std::string(word) + "'");
      }
      letters.push_back(*p);
    }
    if (width && *width != letters.size()) {
      throw ParseError(ParseErrorKind::InconsistentLength, line_no,
                       "word '" + std::string(word) + "' has length " + std::to_string(letters.size()) +
                           ", expected " + std::to_string(*width));
    }
    width = letters.size();
    terms.push_back({coeff, PauliString(std::move(letters))});
  }
  if (!width) {
    throw ParseError(ParseErrorKind::EmptyInput, 0, "empty input: no terms");
  }
  return Hamiltonian(*width, std::move(terms));
}

Hamiltonian parse_hamiltonian(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_hamiltonian(in);
}

std::string serialize_hamiltonian(const Hamiltonian& h) {
  std::string out;
  char buf[64];
  for (const auto& t : h.terms()) {
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), t.coefficient);
    out.append(buf, ptr);
    out.push_back(' ');
    out += t.string.to_string();
    out.push_back('\n');
  }
  return out;
}

bool qubitwise_compatible(const PauliString& a, const PauliString& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("qubitwise_compatible: length mismatch");
  }
  for (std::size_t q = 0; q < a.size(); ++q) {
    if (a[q] != b[q] && a[q] != Pauli::I && b[q] != Pauli::I) {
      return false;
    }
  }
  return true;
}

void PauliGraph::add_edge(std::size_t a, std::size_t b) {
  adjacency_[a].push_back(b);
  adjacency_[b].push_back(a);
}

std::size_t PauliGraph::n_edges() const {
  std::size_t total = 0;
  for (const auto& nb : adjacency_) {
    total += nb.size();
  }
  return total / 2;
}

bool PauliGraph::has_edge(std::size_t a, std::size_t b) const {
  const auto& nb = adjacency_[a];
  return std::find(nb.begin(), nb.end(), b) != nb.end();
}

PauliGraph build_pauli_graph(const Hamiltonian& h) {
  if (h.empty()) {
    throw std::invalid_argument("build_pauli_graph: empty Hamiltonian");
  }
  PauliGraph g(h.size());
  for (std::size_t i = 0; i < h.size(); ++i) {
    for (std::size_t j = i + 1; j < h.size(); ++j) {
      if (!qubitwise_compatible(h[i].string, h[j].string)) {
        g.add_edge(i, j);
      }
    }
  }
  return g;
}

std::vector<std::size_t> largest_degree_first_order(const PauliGraph& g) {
  std::vector<std::size_t> order(g.n_vertices());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return g.degree(a) > g.degree(b); });
  return order;
}

} // namespace heem
