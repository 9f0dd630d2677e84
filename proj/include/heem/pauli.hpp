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
#include <cstdint>
#include <istream>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace heem {

enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char to_char(Pauli p);
std::optional<Pauli> pauli_from_char(char c);

/// A word over {I, X, Y, Z}. Letter 0 (leftmost in text) acts on qubit 0.
class PauliString {
public:
  PauliString() = default;
  explicit PauliString(std::vector<Pauli> letters) : letters_(std::move(letters)) {}

  /// Throws std::invalid_argument on any letter outside "IXYZ".
  static PauliString from_string(std::string_view text);

  [[nodiscard]] std::size_t size() const { return letters_.size(); }
  [[nodiscard]] Pauli operator[](std::size_t q) const { return letters_[q]; }
  [[nodiscard]] std::span<const Pauli> letters() const { return letters_; }

  /// Letters at `qubits`, in the given order.
  [[nodiscard]] PauliString restrict(std::span<const std::size_t> qubits) const;

  [[nodiscard]] bool is_identity() const;
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const PauliString&, const PauliString&) = default;
  friend auto operator<=>(const PauliString&, const PauliString&) = default;

private:
  std::vector<Pauli> letters_;
};

struct Term {
  double coefficient = 0.0;
  PauliString string;

  friend bool operator==(const Term&, const Term&) = default;
};

class Hamiltonian {
public:
  Hamiltonian() = default;

  /// Validates lengths and finiteness; merges duplicate strings by summing
  /// coefficients (first occurrence keeps its position, exact zeros are dropped).
  Hamiltonian(std::size_t n_qubits, std::vector<Term> terms);

  [[nodiscard]] std::size_t n_qubits() const { return n_qubits_; }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }
  [[nodiscard]] bool empty() const { return terms_.empty(); }
  [[nodiscard]] std::span<const Term> terms() const { return terms_; }
  [[nodiscard]] const Term& operator[](std::size_t i) const { return terms_[i]; }

  friend bool operator==(const Hamiltonian&, const Hamiltonian&) = default;

private:
  std::size_t n_qubits_ = 0;
  std::vector<Term> terms_;
};

enum class ParseErrorKind {
  EmptyInput,
  MalformedLine,
  MalformedCoefficient,
  IllegalLetter,
  InconsistentLength,
};

class ParseError : public std::runtime_error {
public:
  ParseError(ParseErrorKind kind, std::size_t line, const std::string& what);

  [[nodiscard]] ParseErrorKind kind() const { return kind_; }
  /// 1-based; 0 when the error is not tied to a line.
  [[nodiscard]] std::size_t line() const { return line_; }

private:
  ParseErrorKind kind_;
  std::size_t line_;
};

/// Reads "<real> <pauli word>" lines. '#' starts a comment; blank lines are
/// skipped.
Hamiltonian parse_hamiltonian(std::istream& in);
Hamiltonian parse_hamiltonian(std::string_view text);

/// Canonical text form: one "<coefficient> <word>" line per term, with the
/// shortest round-tripping decimal for each coefficient.
std::string serialize_hamiltonian(const Hamiltonian& h);

/// True iff at every index the letters are equal or one of them is I.
/// Throws std::invalid_argument on length mismatch.
bool qubitwise_compatible(const PauliString& a, const PauliString& b);

/// Incompatibility graph over Hamiltonian terms: an edge joins two terms that
/// cannot share a tensor-product basis.
class PauliGraph {
public:
  explicit PauliGraph(std::size_t n_vertices) : adjacency_(n_vertices) {}

  void add_edge(std::size_t a, std::size_t b);

  [[nodiscard]] std::size_t n_vertices() const { return adjacency_.size(); }
  [[nodiscard]] std::size_t n_edges() const;
  [[nodiscard]] std::size_t degree(std::size_t v) const { return adjacency_[v].size(); }
  [[nodiscard]] std::span<const std::size_t> neighbors(std::size_t v) const {
    return adjacency_[v];
  }
  [[nodiscard]] bool has_edge(std::size_t a, std::size_t b) const;

private:
  std::vector<std::vector<std::size_t>> adjacency_;
};

/// Throws std::invalid_argument for an empty Hamiltonian.
PauliGraph build_pauli_graph(const Hamiltonian& h);

/// Vertices by descending degree, ties by ascending index.
std::vector<std::size_t> largest_degree_first_order(const PauliGraph& g);

} // namespace heem
