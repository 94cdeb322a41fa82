// Copyright 2026 The paulistar authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace paulistar {

/**
 * One tensor factor of a Pauli string.
 *
 * Qubit 1 is the leftmost (most significant) factor throughout: the string
 * written "XZI" acts with X on qubit 1, Z on qubit 2, I on qubit 3, and a
 * basis state |b1 b2 ... bn> has index sum_j 2^(n-j) b_j.
 */
enum class PauliLetter : std::uint8_t { I, X, Y, Z };

char to_char(PauliLetter p);
PauliLetter letter_from_char(char c);

/**
 * An n-qubit Pauli string sigma_1 (x) sigma_2 (x) ... (x) sigma_n.
 *
 * Strings over {I, X} ("IX-type") are in bijection with basis indices: the
 * string with X exactly at positions j where b_j = 1 has index
 * b = sum_j 2^(n-j) b_j.  That index is what ix_index() returns and what
 * from_ix_index() inverts.
 */
class PauliString {
 public:
  explicit PauliString(std::vector<PauliLetter> letters);

  // Parses a word over {I, X, Y, Z}; rejects empty or unknown characters.
  static PauliString parse(std::string_view word);

  // Builds the IX-type string of index b on n qubits, 0 <= b < 2^n.
  static PauliString from_ix_index(int n, std::uint64_t b);

  int size() const { return static_cast<int>(letters_.size()); }

  // 1-based qubit position.
  PauliLetter letter(int qubit) const;

  const std::vector<PauliLetter>& letters() const { return letters_; }

  bool is_identity() const;
  // True when every letter is I or X.
  bool is_ix_type() const;
  // True when every letter is I or Z.
  bool is_diagonal() const;

  // Number of non-identity letters equal to p.
  int count(PauliLetter p) const;

  // Basis index of an IX-type string; throws std::invalid_argument otherwise.
  std::uint64_t ix_index() const;

  std::string str() const;

  bool operator==(const PauliString&) const = default;

 private:
  std::vector<PauliLetter> letters_;
};

}  // namespace paulistar
