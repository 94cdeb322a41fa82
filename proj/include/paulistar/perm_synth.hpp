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
#include <vector>

#include "paulistar/circuit.hpp"
#include "paulistar/pauli.hpp"

namespace paulistar {

enum class PermParity { Even, Odd };

/**
 * Selector for one of the 2 * (2^(n-1) - 1) + 1 basis permutations realized
 * by CNOT cascades through the hub qubit n.  The even family uses only CNOTs
 * with control n; the odd family conjugates an even cascade by one extra CNOT
 * targeting n.  x = 0 selects the identity in either parity.
 */
struct PermSelector {
  int n = 0;
  std::uint64_t x = 0;
  PermParity parity = PermParity::Even;
};

void validate(const PermSelector& sel);

/**
 * CNOT realization.
 *
 * Even: one CNOT(n, n-j-1) per set bit j of x, ascending j.
 * Odd:  the even cascade wrapped in CNOT(n-m-1, n) on both sides, where m is
 *       the highest set bit of x.
 *
 * The resulting matrix is a symmetric (self-inverse) basis permutation.
 */
Circuit perm_circuit(const PermSelector& sel);

// A swap of two basis states, 1-based indices, first < second.
struct Transposition {
  std::uint64_t first = 0;
  std::uint64_t second = 0;

  bool operator==(const Transposition&) const = default;
};

/**
 * The same permutation as a product of disjoint transpositions.
 *
 * Scanning m over [0, 2^(n-1) - 1] and writing a = 2m + 2, the pairs are
 * (a, 2(m x-or x) + 2) for the even family and (a, 2(m x-or x) + 1) for the
 * odd family, kept when a is the smaller index.  Every pair listed once,
 * sorted by first element.  Throws for x = 0, which has no transpositions.
 */
std::vector<Transposition> transposition_product(const PermSelector& sel);

// Basis-state image of the permutation: out[i] is the 0-based image of |i>.
std::vector<std::uint64_t> basis_map(const PermSelector& sel);

/**
 * The cascade P with P * sigma * P = I(x)...(x)I(x)X for an IX-type sigma
 * of index b >= 1: even family with x = (b-1)/2 for odd b, odd family with
 * x = b/2 for even b.  Throws for identity or non-IX input.
 */
Circuit conjugating_perm(const PauliString& ix_sigma);

// Per-qubit basis change mapping a Pauli letter onto X (or leaving I alone).
enum class Conjugator { Identity, Hadamard, SGate };

/**
 * sigma = tau^dag * mu * tau with mu IX-type: tau_j = H where sigma_j = Z,
 * tau_j = S where sigma_j = Y, identity elsewhere; mu has X at every
 * non-identity position.  perm conjugates mu onto I(x)...(x)X, and b is mu's
 * basis index.
 */
struct SimilarityDecomposition {
  std::vector<Conjugator> tau;
  PauliString mu;
  Circuit perm;
  std::uint64_t b = 0;
};

SimilarityDecomposition similarity_decomposition(const PauliString& sigma);

}  // namespace paulistar
