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

#include <cstddef>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace paulistar {

// Rotation gates use the full-angle convention:
//   RX(t) = exp(i t X), RY(t) = exp(i t Y), RZ(t) = exp(i t Z),
// so RZ(pi/4) is the S gate up to no phase at all: S = RZ(pi/4) exactly,
// and Sdag = RZ(-pi/4).  H is kept as its own kind because it is not a
// single rotation without a global phase.
enum class GateKind { RX, RY, RZ, H, S, Sdag, CNOT };

std::string to_string(GateKind k);
GateKind gate_kind_from_string(const std::string& s);

bool is_rotation(GateKind k);

/**
 * One gate instance.  Qubits are 1-based; `control` is 0 except for CNOT.
 * Gates earlier in a circuit's list act on the state first.
 */
struct Gate {
  GateKind kind;
  int target = 0;
  int control = 0;
  double angle = 0.0;

  static Gate rx(int q, double a) { return {GateKind::RX, q, 0, a}; }
  static Gate ry(int q, double a) { return {GateKind::RY, q, 0, a}; }
  static Gate rz(int q, double a) { return {GateKind::RZ, q, 0, a}; }
  static Gate h(int q) { return {GateKind::H, q, 0, 0.0}; }
  static Gate s(int q) { return {GateKind::S, q, 0, 0.0}; }
  static Gate sdag(int q) { return {GateKind::Sdag, q, 0, 0.0}; }
  static Gate cnot(int control, int target) {
    return {GateKind::CNOT, target, control, 0.0};
  }

  bool operator==(const Gate&) const = default;
};

struct Circuit {
  int n = 0;
  std::vector<Gate> gates;

  Circuit() = default;
  explicit Circuit(int qubits);

  // Validates qubit indices against n before appending.
  void append(const Gate& g);
  // Concatenates a circuit over the same qubit count.
  void append(const Circuit& other);

  bool operator==(const Circuit&) const = default;
};

// Sequential layering: walk the gate list keeping one open layer; a gate that
// shares a qubit with the open layer closes it and starts the next one.
// Returns, per gate, its 0-based layer index.  Depth is the layer count.
std::vector<std::size_t> layer_assignment(const Circuit& c);

struct GateCensus {
  int rx = 0;
  int ry = 0;
  int rz = 0;
  int h = 0;
  int s = 0;
  int sdag = 0;
  int cnot = 0;
  // CNOTs whose control (resp. target) is the last qubit n.
  int cnot_control_n = 0;
  int cnot_target_n = 0;
  int depth = 0;

  int total() const { return rx + ry + rz + h + s + sdag + cnot; }
};

GateCensus census(const Circuit& c);

struct StarReport {
  bool pass = true;
  // 1-based positions of CNOTs that touch neither leg of the star center.
  std::vector<std::size_t> violations;
};

// Star connectivity with hub `center`: every CNOT must have control or target
// equal to `center`.  Single-qubit gates are unconstrained.
StarReport star_connectivity_report(const Circuit& c, int center);

// JSON schema: {"n": int, "gates": [{"kind": str, "qubits": [t] | [c, t],
// "angle": float (rotations only)}]}.
nlohmann::json circuit_to_json(const Circuit& c);
Circuit circuit_from_json(const nlohmann::json& j);

}  // namespace paulistar
