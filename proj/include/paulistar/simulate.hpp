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
#include "paulistar/dense.hpp"

namespace paulistar {

// Caps keep dense evaluation and statevector application at desk scale.
inline constexpr int kMaxDenseQubits = 10;
inline constexpr int kMaxStatevectorQubits = 20;

// 2x2 matrix of a single-qubit gate.  Throws for CNOT.
Eigen::Matrix2cd gate_matrix_1q(const Gate& g);

// Applies one gate in place to a 2^n amplitude vector.
void apply_gate(const Gate& g, int n, ComplexVector& psi);

// Applies the whole circuit; throws InfeasibleError beyond
// kMaxStatevectorQubits and std::invalid_argument on dimension mismatch.
ComplexVector apply(const Circuit& c, const ComplexVector& psi);

// Left-multiplies the gate's unitary into u (u <- G u), column by column.
void apply_gate_to_matrix(const Gate& g, int n, ComplexMatrix& u);

// Dense unitary of the circuit; throws InfeasibleError beyond kMaxDenseQubits.
ComplexMatrix unitary_of(const Circuit& c);

// |b>, 0-based index b, on n qubits.
ComplexVector basis_state(int n, std::uint64_t b);

// (|0> + |1>)^{(x) n} / 2^{n/2}.
ComplexVector plus_state(int n);

}  // namespace paulistar
