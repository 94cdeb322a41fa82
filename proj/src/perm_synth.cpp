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

#include "paulistar/perm_synth.hpp"

#include <bit>
#include <stdexcept>

namespace paulistar {

void validate(const PermSelector& sel) {
  if (sel.n < 1 || sel.n > 63) {
    throw std::invalid_argument("permutation qubit count out of range");
  }
  const std::uint64_t bound = std::uint64_t{1} << (sel.n - 1);
  if (sel.x >= bound) {
    throw std::invalid_argument("permutation selector x must be below 2^(n-1)");
  }
}

Circuit perm_circuit(const PermSelector& sel) {
  validate(sel);
  Circuit c(sel.n);
  if (sel.x == 0) return c;

  const int m = std::bit_width(sel.x) - 1;  // highest set bit
  const bool odd = sel.parity == PermParity::Odd;
  if (odd) c.append(Gate::cnot(sel.n - m - 1, sel.n));
  for (int j = 0; j < sel.n - 1; ++j) {
    if ((sel.x >> j) & 1) c.append(Gate::cnot(sel.n, sel.n - j - 1));
  }
  if (odd) c.append(Gate::cnot(sel.n - m - 1, sel.n));
  return c;
}

std::vector<Transposition> transposition_product(const PermSelector& sel) {
  validate(sel);
  if (sel.x == 0) {
    throw std::invalid_argument("identity permutation has no transpositions");
  }
  const std::uint64_t half = std::uint64_t{1} << (sel.n - 1);
  const bool odd = sel.parity == PermParity::Odd;
  std::vector<Transposition> pairs;
  pairs.reserve(half / 2);
  for (std::uint64_t m = 0; m < half; ++m) {
    const std::uint64_t a = 2 * m + 2;
    const std::uint64_t b = 2 * (m ^ sel.x) + (odd ? 1 : 2);
    if (a < b) pairs.push_back({a, b});
  }
  return pairs;
}

std::vector<std::uint64_t> basis_map(const PermSelector& sel) {
  validate(sel);
  const std::uint64_t dim = std::uint64_t{1} << sel.n;
  std::vector<std::uint64_t> image(dim);
  for (std::uint64_t i = 0; i < dim; ++i) image[i] = i;
  if (sel.x == 0) return image;
  for (const Transposition& t : transposition_product(sel)) {
    std::swap(image[t.first - 1], image[t.second - 1]);
  }
  return image;
}

Circuit conjugating_perm(const PauliString& ix_sigma) {
  if (!ix_sigma.is_ix_type()) {
    throw std::invalid_argument("conjugating_perm requires a string over {I, X}");
  }
  const std::uint64_t b = ix_sigma.ix_index();
  if (b == 0) {
    throw std::invalid_argument("identity string has no conjugating permutation");
  }
  PermSelector sel;
  sel.n = ix_sigma.size();
  if (b % 2 == 1) {
    sel.x = (b - 1) / 2;
    sel.parity = PermParity::Even;
  } else {
    sel.x = b / 2;
    sel.parity = PermParity::Odd;
  }
  return perm_circuit(sel);
}

SimilarityDecomposition similarity_decomposition(const PauliString& sigma) {
  if (sigma.is_identity()) {
    throw std::invalid_argument("identity string has no similarity decomposition");
  }
  const int n = sigma.size();
  std::vector<Conjugator> tau(static_cast<std::size_t>(n), Conjugator::Identity);
  std::vector<PauliLetter> mu_letters(static_cast<std::size_t>(n), PauliLetter::I);
  for (int j = 1; j <= n; ++j) {
    const auto idx = static_cast<std::size_t>(j - 1);
    switch (sigma.letter(j)) {
      case PauliLetter::I:
        break;
      case PauliLetter::X:
        mu_letters[idx] = PauliLetter::X;
        break;
      case PauliLetter::Y:
        tau[idx] = Conjugator::SGate;
        mu_letters[idx] = PauliLetter::X;
        break;
      case PauliLetter::Z:
        tau[idx] = Conjugator::Hadamard;
        mu_letters[idx] = PauliLetter::X;
        break;
    }
  }
  SimilarityDecomposition out{std::move(tau), PauliString(std::move(mu_letters)),
                              Circuit(n), 0};
  out.b = out.mu.ix_index();
  out.perm = conjugating_perm(out.mu);
  return out;
}

}  // namespace paulistar
