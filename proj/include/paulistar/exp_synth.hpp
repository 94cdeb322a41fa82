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

#include "paulistar/circuit.hpp"
#include "paulistar/pauli.hpp"

namespace paulistar {

enum class Sign { Plus, Minus };

struct ExpSynthRequest {
  PauliString sigma;
  double theta = 0.0;
  Sign sign = Sign::Plus;
};

/**
 * Star-connectivity circuit for exp(+/- i theta sigma).
 *
 * Non-diagonal strings go through the similarity route: a layer of H/S
 * basis changes, the conjugating CNOT cascade, one central RX on qubit n,
 * the cascade again, and the inverse basis-change layer.  A peephole pass
 * then cancels the cascade CNOTs that sit directly against the central RX
 * and share its target.
 *
 * Strings over {I, Z} skip the basis change entirely: a CNOT parity ladder
 * into one support qubit, a single RZ there, and the mirrored ladder.
 *
 * Throws std::invalid_argument for the identity string, whose exponential
 * is a global phase with no circuit.
 */
Circuit exp_pauli_circuit(const ExpSynthRequest& req);

// Removes CNOT pairs that enclose an RX on their shared target, in place.
// Exact rewrite: CNOT(c, q) commutes with RX on q.
void cancel_cnots_through_rx(Circuit& c);

/**
 * Worst-case gate counts for the synthesized circuit of a given string,
 * counting literal gate kinds (H, S, Sdag are not folded into rotations).
 * With n qubits, n2 = #Y and n3 = #Z:
 *
 *   general:  rx <= 1, ry <= 2 n2, rz <= 4 n2 + 2 n3,
 *             CNOTs with control n <= 2n - 2, with target n <= 2
 *             (all CNOT counts 0 when only the last qubit is non-identity);
 *   diagonal: rz = 1, CNOTs with target n <= 2n - 2, and 4 CNOTs with
 *             control n when the support excludes qubit n and has size >= 2.
 */
struct GateCountBound {
  int rx_max = 0;
  int ry_max = 0;
  int rz_max = 0;
  int cnot_control_n_max = 0;
  int cnot_target_n_max = 0;
};

GateCountBound gate_bounds(const PauliString& sigma);

bool within_bounds(const GateCensus& counts, const GateCountBound& bounds);

}  // namespace paulistar
