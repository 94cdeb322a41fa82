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

#include "paulistar/exp_synth.hpp"

#include <stdexcept>
#include <vector>

#include "paulistar/perm_synth.hpp"

namespace paulistar {

namespace {

// exp(i theta Z_Q): a parity ladder concentrates the support parity on one
// wire, a single RZ(theta) applies the phase, and the mirrored ladder
// restores the basis.  When the support excludes the hub qubit n, the ladder
// runs through the hub, entered and left via CNOTs from the hub onto the
// rotation wire so every CNOT still touches the hub.
Circuit diagonal_circuit(const PauliString& sigma, double theta) {
  const int n = sigma.size();
  std::vector<int> support;
  for (int j = 1; j <= n; ++j) {
    if (sigma.letter(j) == PauliLetter::Z) support.push_back(j);
  }

  Circuit c(n);
  if (support.size() == 1) {
    c.append(Gate::rz(support.front(), theta));
    return c;
  }

  const bool hub_in_support = support.back() == n;
  std::vector<Gate> half;
  if (hub_in_support) {
    for (int q : support) {
      if (q != n) half.push_back(Gate::cnot(q, n));
    }
    for (const Gate& g : half) c.append(g);
    c.append(Gate::rz(n, theta));
  } else {
    const int wire = support.front();
    half.push_back(Gate::cnot(n, wire));
    for (int q : support) {
      if (q != wire) half.push_back(Gate::cnot(q, n));
    }
    half.push_back(Gate::cnot(n, wire));
    for (const Gate& g : half) c.append(g);
    c.append(Gate::rz(wire, theta));
  }
  for (auto it = half.rbegin(); it != half.rend(); ++it) c.append(*it);
  return c;
}

}  // namespace

void cancel_cnots_through_rx(Circuit& c) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 1; i + 1 < c.gates.size(); ++i) {
      const Gate& mid = c.gates[i];
      const Gate& before = c.gates[i - 1];
      const Gate& after = c.gates[i + 1];
      if (mid.kind != GateKind::RX) continue;
      if (before.kind != GateKind::CNOT || before != after) continue;
      if (before.target != mid.target) continue;
      c.gates.erase(c.gates.begin() + static_cast<std::ptrdiff_t>(i + 1));
      c.gates.erase(c.gates.begin() + static_cast<std::ptrdiff_t>(i - 1));
      changed = true;
      break;
    }
  }
}

Circuit exp_pauli_circuit(const ExpSynthRequest& req) {
  const PauliString& sigma = req.sigma;
  if (sigma.is_identity()) {
    throw std::invalid_argument(
        "identity exponential is a global phase, not a circuit");
  }
  const int n = sigma.size();
  const double theta = req.sign == Sign::Minus ? -req.theta : req.theta;

  if (sigma.is_diagonal()) return diagonal_circuit(sigma, theta);

  const SimilarityDecomposition decomp = similarity_decomposition(sigma);
  Circuit c(n);
  for (int j = 1; j <= n; ++j) {
    switch (decomp.tau[static_cast<std::size_t>(j - 1)]) {
      case Conjugator::Identity: break;
      case Conjugator::Hadamard: c.append(Gate::h(j)); break;
      case Conjugator::SGate: c.append(Gate::s(j)); break;
    }
  }
  c.append(decomp.perm);
  c.append(Gate::rx(n, theta));
  c.append(decomp.perm);
  for (int j = 1; j <= n; ++j) {
    switch (decomp.tau[static_cast<std::size_t>(j - 1)]) {
      case Conjugator::Identity: break;
      case Conjugator::Hadamard: c.append(Gate::h(j)); break;
      case Conjugator::SGate: c.append(Gate::sdag(j)); break;
    }
  }
  cancel_cnots_through_rx(c);
  return c;
}

GateCountBound gate_bounds(const PauliString& sigma) {
  if (sigma.is_identity()) {
    throw std::invalid_argument("identity string has no synthesis bounds");
  }
  const int n = sigma.size();
  GateCountBound bound;
  if (sigma.is_diagonal()) {
    const int support = sigma.count(PauliLetter::Z);
    bound.rz_max = 1;
    if (support >= 2) {
      bound.cnot_target_n_max = 2 * n - 2;
      if (sigma.letter(n) != PauliLetter::Z) bound.cnot_control_n_max = 4;
    }
    return bound;
  }
  const int n2 = sigma.count(PauliLetter::Y);
  const int n3 = sigma.count(PauliLetter::Z);
  bound.rx_max = 1;
  bound.ry_max = 2 * n2;
  bound.rz_max = 4 * n2 + 2 * n3;
  // Only the last qubit non-identity: the cascade is empty.
  const bool lone_tail = similarity_decomposition(sigma).b == 1;
  if (!lone_tail) {
    bound.cnot_control_n_max = 2 * n - 2;
    bound.cnot_target_n_max = 2;
  }
  return bound;
}

bool within_bounds(const GateCensus& counts, const GateCountBound& bounds) {
  return counts.rx <= bounds.rx_max && counts.ry <= bounds.ry_max &&
         counts.rz <= bounds.rz_max &&
         counts.cnot_control_n <= bounds.cnot_control_n_max &&
         counts.cnot_target_n <= bounds.cnot_target_n_max;
}

}  // namespace paulistar
