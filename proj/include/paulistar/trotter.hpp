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

#include <complex>
#include <vector>

#include "paulistar/circuit.hpp"
#include "paulistar/hamiltonian.hpp"

namespace paulistar {

struct TrotterPlan {
  double total_time = 1.0;
  int steps = 1;
  int order = 1;  // 1 or any even order
  bool constant_depth = false;
};

// A circuit together with the scalar it carries: identity terms of a
// Hamiltonian contribute global phases, so the represented operator is
// phase * unitary_of(circuit).
struct PhasedCircuit {
  Circuit circuit;
  Complex phase{1.0, 0.0};
};

// Suzuki split coefficient nu_k = 1 / (4 - 4^(1/(2k-1))) for order 2k.
double suzuki_nu(int k);

// One exponential factor exp(-i theta sigma_term) of a product formula,
// identified by term index into the Hamiltonian.
struct TrotterFactor {
  std::size_t term = 0;
  double theta = 0.0;
};

// Factors of step k (1-based) in application order.  Order 1 is one factor
// per term with theta = a_j(k dt) dt; order 2 is the forward half-sweep then
// its reverse (the middle term appearing twice); order 2k recurses with the
// standard five-segment split.
std::vector<TrotterFactor> step_factors(const Hamiltonian& h,
                                        const TrotterPlan& plan, int k);

// All steps concatenated, with per-step prefix boundaries and cumulative
// phases so callers can cut the circuit at any step.
struct SteppedCircuit {
  Circuit circuit;
  std::vector<std::size_t> gates_after_step;
  std::vector<Complex> phase_after_step;
};

SteppedCircuit trotter_stepped(const Hamiltonian& h, const TrotterPlan& plan);

// Product-formula circuit for a time-independent Hamiltonian.  Orders 1 and
// even orders 2k; respects plan.constant_depth by delegating to
// constant_depth_circuit.
PhasedCircuit trotter_circuit(const Hamiltonian& h, const TrotterPlan& plan);

// Piecewise-constant first-order circuit; coefficients are evaluated at each
// step's time.  Also accepts time-independent Hamiltonians, producing the
// same circuit as trotter_circuit at order 1.
PhasedCircuit trotter_td_circuit(const Hamiltonian& h, const TrotterPlan& plan);

/**
 * Step-count-free circuit for a Hamiltonian of mutually commuting terms:
 * each term is synthesized once over its own support (exactly, since the
 * factors commute), and blocks with disjoint supports are interleaved so
 * the depth stays fixed as small as the longest round of blocks.  These
 * circuits favour locality over the star layout of the stepped path.
 */
PhasedCircuit constant_depth_circuit(const Hamiltonian& h, double total_time);

struct ErrorSample {
  int step = 0;
  double t = 0.0;
  double err_circuit = 0.0;  // || phase * U_circuit - U_reference ||_F
  double err_numeric = 0.0;  // same with the matrix-product formula
};

/**
 * Frobenius errors of the circuit prefix and of the numerically multiplied
 * product formula against the reference evolution, at the requested step
 * boundaries.  The reference is exp(-i t H) for time-independent input and
 * the ordered product of per-step exponentials for time-dependent input.
 */
std::vector<ErrorSample> error_report(const Hamiltonian& h,
                                      const TrotterPlan& plan,
                                      const std::vector<int>& sample_steps);

}  // namespace paulistar
