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

#include "paulistar/circuit.hpp"

#include <stdexcept>

#include <nlohmann/json.hpp>

namespace paulistar {

std::string to_string(GateKind k) {
  switch (k) {
    case GateKind::RX: return "RX";
    case GateKind::RY: return "RY";
    case GateKind::RZ: return "RZ";
    case GateKind::H: return "H";
    case GateKind::S: return "S";
    case GateKind::Sdag: return "Sdag";
    case GateKind::CNOT: return "CNOT";
  }
  throw std::logic_error("corrupt GateKind");
}

GateKind gate_kind_from_string(const std::string& s) {
  if (s == "RX") return GateKind::RX;
  if (s == "RY") return GateKind::RY;
  if (s == "RZ") return GateKind::RZ;
  if (s == "H") return GateKind::H;
  if (s == "S") return GateKind::S;
  if (s == "Sdag") return GateKind::Sdag;
  if (s == "CNOT") return GateKind::CNOT;
  throw std::invalid_argument("unknown gate kind \"" + s + "\"");
}

bool is_rotation(GateKind k) {
  return k == GateKind::RX || k == GateKind::RY || k == GateKind::RZ;
}

Circuit::Circuit(int qubits) : n(qubits) {
  if (qubits < 1) {
    throw std::invalid_argument("circuit needs at least one qubit");
  }
}

void Circuit::append(const Gate& g) {
  if (g.target < 1 || g.target > n) {
    throw std::invalid_argument("gate target out of range");
  }
  if (g.kind == GateKind::CNOT) {
    if (g.control < 1 || g.control > n) {
      throw std::invalid_argument("CNOT control out of range");
    }
    if (g.control == g.target) {
      throw std::invalid_argument("CNOT control equals target");
    }
  } else if (g.control != 0) {
    throw std::invalid_argument("single-qubit gate must not carry a control");
  }
  gates.push_back(g);
}

void Circuit::append(const Circuit& other) {
  if (other.n != n) {
    throw std::invalid_argument("cannot concatenate circuits of unequal width");
  }
  gates.insert(gates.end(), other.gates.begin(), other.gates.end());
}

std::vector<std::size_t> layer_assignment(const Circuit& c) {
  std::vector<std::size_t> layer_of(c.gates.size(), 0);
  std::vector<bool> busy(static_cast<std::size_t>(c.n) + 1, false);
  std::size_t layer = 0;
  for (std::size_t i = 0; i < c.gates.size(); ++i) {
    const Gate& g = c.gates[i];
    const bool clash =
        busy[static_cast<std::size_t>(g.target)] ||
        (g.kind == GateKind::CNOT && busy[static_cast<std::size_t>(g.control)]);
    if (clash) {
      ++layer;
      std::fill(busy.begin(), busy.end(), false);
    }
    busy[static_cast<std::size_t>(g.target)] = true;
    if (g.kind == GateKind::CNOT) busy[static_cast<std::size_t>(g.control)] = true;
    layer_of[i] = layer;
  }
  return layer_of;
}

GateCensus census(const Circuit& c) {
  GateCensus out;
  for (const Gate& g : c.gates) {
    switch (g.kind) {
      case GateKind::RX: ++out.rx; break;
      case GateKind::RY: ++out.ry; break;
      case GateKind::RZ: ++out.rz; break;
      case GateKind::H: ++out.h; break;
      case GateKind::S: ++out.s; break;
      case GateKind::Sdag: ++out.sdag; break;
      case GateKind::CNOT:
        ++out.cnot;
        if (g.control == c.n) ++out.cnot_control_n;
        if (g.target == c.n) ++out.cnot_target_n;
        break;
    }
  }
  if (!c.gates.empty()) {
    out.depth = static_cast<int>(layer_assignment(c).back()) + 1;
  }
  return out;
}

StarReport star_connectivity_report(const Circuit& c, int center) {
  if (center < 1 || center > c.n) {
    throw std::invalid_argument("star center out of range");
  }
  StarReport report;
  for (std::size_t i = 0; i < c.gates.size(); ++i) {
    const Gate& g = c.gates[i];
    if (g.kind != GateKind::CNOT) continue;
    if (g.control != center && g.target != center) {
      report.violations.push_back(i + 1);
    }
  }
  report.pass = report.violations.empty();
  return report;
}

nlohmann::json circuit_to_json(const Circuit& c) {
  nlohmann::json gates = nlohmann::json::array();
  for (const Gate& g : c.gates) {
    nlohmann::json jg;
    jg["kind"] = to_string(g.kind);
    if (g.kind == GateKind::CNOT) {
      jg["qubits"] = {g.control, g.target};
    } else {
      jg["qubits"] = {g.target};
    }
    if (is_rotation(g.kind)) jg["angle"] = g.angle;
    gates.push_back(std::move(jg));
  }
  return nlohmann::json{{"n", c.n}, {"gates", std::move(gates)}};
}

Circuit circuit_from_json(const nlohmann::json& j) {
  Circuit c(j.at("n").get<int>());
  for (const auto& jg : j.at("gates")) {
    const GateKind kind = gate_kind_from_string(jg.at("kind").get<std::string>());
    const auto& qubits = jg.at("qubits");
    Gate g;
    g.kind = kind;
    if (kind == GateKind::CNOT) {
      if (qubits.size() != 2) {
        throw std::invalid_argument("CNOT expects two qubits");
      }
      g.control = qubits[0].get<int>();
      g.target = qubits[1].get<int>();
    } else {
      if (qubits.size() != 1) {
        throw std::invalid_argument("single-qubit gate expects one qubit");
      }
      g.target = qubits[0].get<int>();
    }
    if (is_rotation(kind)) g.angle = jg.at("angle").get<double>();
    c.append(g);
  }
  return c;
}

}  // namespace paulistar
