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

#include <array>
#include <cstdint>
#include <string>

#include "paulistar/circuit.hpp"
#include "paulistar/dense.hpp"

namespace paulistar {

inline constexpr int kMaxDensityQubits = 8;

enum class ChannelKind { BitFlip, PhaseFlip, AmplitudeDamping, PhaseDamping };

std::string to_string(ChannelKind k);

/**
 * Two-operator Kraus representations, p in [0, 1]:
 *
 *   bit flip:     sqrt(1-p) I,            sqrt(p) X
 *   phase flip:   sqrt(1-p) I,            sqrt(p) Z
 *   amp damping:  diag(1, sqrt(1-p)),     sqrt(p) |0><1|
 *   ph. damping:  diag(1, sqrt(1-p)),     diag(0, sqrt(p))
 *
 * Each pair satisfies K0^dag K0 + K1^dag K1 = I exactly.
 */
std::array<Eigen::Matrix2cd, 2> channel_kraus(ChannelKind kind, double p);

// Applies the channel to one qubit (1-based) of an n-qubit density matrix.
void apply_channel(ChannelKind kind, double p, int n, int qubit,
                   ComplexMatrix& rho);

// Fixed value or a class range (low (0, 1e-3], medium (1e-3, 1e-1],
// high (1e-1, 1]) to draw from.
enum class NoiseClass { Low, Medium, High };

NoiseClass noise_class_from_string(const std::string& s);
std::string to_string(NoiseClass c);
// Classifies a strength value; throws outside (0, 1].
NoiseClass classify_strength(double p);

struct NoiseLevel {
  bool fixed = true;
  double value = 0.0;       // when fixed
  NoiseClass cls = NoiseClass::Low;  // when drawn

  static NoiseLevel fixed_value(double v);
  static NoiseLevel from_class(NoiseClass c);

  // Label for reports: the class name, or "fixed" for explicit values.
  std::string label() const;
};

// Draws (or passes through) one strength; class draws are uniform over the
// class interval, never zero.
double resolve_strength(const NoiseLevel& level, std::uint64_t seed,
                        std::uint64_t stream);

/**
 * Per-gate, per-layer noise schedule.  Every gate is followed by bit-flip
 * then phase-flip of strength gate_p on the qubits it touches (both CNOT
 * qubits, or the target only when cnot_noise_on_both is false).  After each
 * depth layer, amplitude then phase damping of strength idle_p act on the
 * qubits idle in that layer.
 */
struct NoiseStrengths {
  double gate_p = 0.0;
  double idle_p = 0.0;
  bool cnot_noise_on_both = true;
};

// Runs the circuit on a density matrix under the schedule above.
ComplexMatrix evolve_noisy(const Circuit& c, const ComplexMatrix& rho0,
                           const NoiseStrengths& noise);

// <psi| rho |psi>, the overlap of a mixed state with a pure reference.
double fidelity(const ComplexVector& psi, const ComplexMatrix& rho);

}  // namespace paulistar
