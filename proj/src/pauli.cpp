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

#include "paulistar/pauli.hpp"

#include <stdexcept>

namespace paulistar {

char to_char(PauliLetter p) {
  switch (p) {
    case PauliLetter::I: return 'I';
    case PauliLetter::X: return 'X';
    case PauliLetter::Y: return 'Y';
    case PauliLetter::Z: return 'Z';
  }
  throw std::logic_error("corrupt PauliLetter");
}

PauliLetter letter_from_char(char c) {
  switch (c) {
    case 'I': return PauliLetter::I;
    case 'X': return PauliLetter::X;
    case 'Y': return PauliLetter::Y;
    case 'Z': return PauliLetter::Z;
    default:
      throw std::invalid_argument(std::string("invalid Pauli letter '") + c +
                                  "'; expected one of I, X, Y, Z");
  }
}

PauliString::PauliString(std::vector<PauliLetter> letters)
    : letters_(std::move(letters)) {
  if (letters_.empty()) {
    throw std::invalid_argument("Pauli string must have at least one qubit");
  }
}

PauliString PauliString::parse(std::string_view word) {
  if (word.empty()) {
    throw std::invalid_argument("empty Pauli word");
  }
  std::vector<PauliLetter> letters;
  letters.reserve(word.size());
  for (char c : word) letters.push_back(letter_from_char(c));
  return PauliString(std::move(letters));
}

PauliString PauliString::from_ix_index(int n, std::uint64_t b) {
  if (n < 1 || n > 63) {
    throw std::invalid_argument("qubit count out of range");
  }
  if (b >= (std::uint64_t{1} << n)) {
    throw std::invalid_argument("IX index out of range for qubit count");
  }
  std::vector<PauliLetter> letters(static_cast<std::size_t>(n), PauliLetter::I);
  for (int j = 1; j <= n; ++j) {
    if ((b >> (n - j)) & 1) letters[static_cast<std::size_t>(j - 1)] = PauliLetter::X;
  }
  return PauliString(std::move(letters));
}

PauliLetter PauliString::letter(int qubit) const {
  if (qubit < 1 || qubit > size()) {
    throw std::out_of_range("qubit position out of range");
  }
  return letters_[static_cast<std::size_t>(qubit - 1)];
}

bool PauliString::is_identity() const {
  for (PauliLetter p : letters_) {
    if (p != PauliLetter::I) return false;
  }
  return true;
}

bool PauliString::is_ix_type() const {
  for (PauliLetter p : letters_) {
    if (p != PauliLetter::I && p != PauliLetter::X) return false;
  }
  return true;
}

bool PauliString::is_diagonal() const {
  for (PauliLetter p : letters_) {
    if (p != PauliLetter::I && p != PauliLetter::Z) return false;
  }
  return true;
}

int PauliString::count(PauliLetter p) const {
  int c = 0;
  for (PauliLetter q : letters_) {
    if (q == p) ++c;
  }
  return c;
}

std::uint64_t PauliString::ix_index() const {
  if (!is_ix_type()) {
    throw std::invalid_argument("ix_index requires a string over {I, X}");
  }
  std::uint64_t b = 0;
  for (PauliLetter p : letters_) {
    b = (b << 1) | (p == PauliLetter::X ? 1u : 0u);
  }
  return b;
}

std::string PauliString::str() const {
  std::string s;
  s.reserve(letters_.size());
  for (PauliLetter p : letters_) s.push_back(to_char(p));
  return s;
}

}  // namespace paulistar
