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

#include "paulistar/scan.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "paulistar/simulate.hpp"

namespace paulistar {

namespace {

std::string fmt(double v, const char* spec) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), spec, v);
  return buf;
}

std::string model_label(const std::string& model, bool time_dependent) {
  return time_dependent ? model + "_td" : model;
}

Hamiltonian build_model(const std::string& model, int n, double J,
                        std::uint64_t seed, bool time_dependent) {
  return build_from_spec(nlohmann::json{{"model", model},
                                        {"n", n},
                                        {"J", J},
                                        {"seed", seed},
                                        {"time_dependent", time_dependent}});
}

}  // namespace

std::vector<int> sample_boundaries(int steps, int samples) {
  if (steps < 1) throw std::invalid_argument("step count must be positive");
  if (samples < 1) throw std::invalid_argument("sample count must be positive");
  std::vector<int> ks;
  for (int i = 0; i <= samples; ++i) {
    const int k = static_cast<int>(
        std::llround(static_cast<double>(i) * steps / samples));
    if (ks.empty() || ks.back() != k) ks.push_back(k);
  }
  return ks;
}

std::string trotter_scan_csv(const std::vector<TrotterScanRequest>& requests) {
  std::string csv = "t,qubits,order,r,err_circuit,err_numeric,model,seed\n";
  for (const TrotterScanRequest& req : requests) {
    const Hamiltonian h =
        build_model(req.model, req.n, req.J, req.seed, req.time_dependent);
    TrotterPlan plan;
    plan.total_time = req.total_time;
    plan.steps = req.steps;
    plan.order = req.order;
    const std::vector<ErrorSample> report =
        error_report(h, plan, sample_boundaries(req.steps, req.samples));
    for (const ErrorSample& s : report) {
      csv += fmt(s.t, "%.10g");
      csv += ',' + std::to_string(req.n);
      csv += ',' + std::to_string(req.order);
      csv += ',' + std::to_string(req.steps);
      csv += ',' + fmt(s.err_circuit, "%.12e");
      csv += ',' + fmt(s.err_numeric, "%.12e");
      csv += ',' + model_label(req.model, req.time_dependent);
      csv += ',' + std::to_string(req.seed);
      csv += '\n';
    }
  }
  return csv;
}

ComplexVector input_state_vector(const std::string& name, int n) {
  if (name == "ones") {
    return basis_state(n, (std::uint64_t{1} << n) - 1);
  }
  if (name == "plus") {
    return plus_state(n);
  }
  throw std::invalid_argument("unknown input state \"" + name +
                              "\"; expected \"ones\" or \"plus\"");
}

std::string noisy_scan_csv(const std::vector<NoisyScanRequest>& requests) {
  std::string csv =
      "t,qubits,input_state,gate_p_class,idle_p_class,gate_p,idle_p,"
      "fidelity,seed\n";
  for (const NoisyScanRequest& req : requests) {
    const Hamiltonian h =
        build_model(req.model, req.n, req.J, req.seed, req.time_dependent);
    TrotterPlan plan;
    plan.total_time = req.total_time;
    plan.steps = req.steps;
    plan.order = 1;
    const SteppedCircuit stepped = trotter_stepped(h, plan);

    NoiseStrengths strengths;
    strengths.gate_p = resolve_strength(req.gate_level, req.seed, 0);
    strengths.idle_p = resolve_strength(req.idle_level, req.seed, 1);
    strengths.cnot_noise_on_both = req.cnot_noise_on_both;

    ComplexVector psi = input_state_vector(req.input_state, req.n);
    ComplexMatrix rho = psi * psi.adjoint();

    const std::vector<int> boundaries =
        sample_boundaries(req.steps, req.samples);
    const double dt = req.total_time / req.steps;

    auto emit = [&](int k) {
      csv += fmt(k * dt, "%.10g");
      csv += ',' + std::to_string(req.n);
      csv += ',' + req.input_state;
      csv += ',' + req.gate_level.label();
      csv += ',' + req.idle_level.label();
      csv += ',' + fmt(strengths.gate_p, "%.12e");
      csv += ',' + fmt(strengths.idle_p, "%.12e");
      csv += ',' + fmt(fidelity(psi, rho), "%.12e");
      csv += ',' + std::to_string(req.seed);
      csv += '\n';
    };

    std::size_t next_boundary = 0;
    if (boundaries[next_boundary] == 0) {
      emit(0);
      ++next_boundary;
    }
    std::size_t gate_begin = 0;
    for (int k = 1; k <= req.steps; ++k) {
      const std::size_t gate_end =
          stepped.gates_after_step[static_cast<std::size_t>(k - 1)];
      Circuit step(h.n);
      step.gates.assign(
          stepped.circuit.gates.begin() + static_cast<std::ptrdiff_t>(gate_begin),
          stepped.circuit.gates.begin() + static_cast<std::ptrdiff_t>(gate_end));
      gate_begin = gate_end;
      rho = evolve_noisy(step, rho, strengths);
      psi = paulistar::apply(step, psi);
      if (next_boundary < boundaries.size() && boundaries[next_boundary] == k) {
        emit(k);
        ++next_boundary;
      }
    }
  }
  return csv;
}

nlohmann::json plan_json(const TrotterPlan& plan) {
  return nlohmann::json{{"total_time", plan.total_time},
                        {"steps", plan.steps},
                        {"order", plan.order},
                        {"constant_depth", plan.constant_depth}};
}

nlohmann::json noise_json(const NoiseLevel& gate_level,
                          const NoiseLevel& idle_level, bool cnot_both,
                          double gate_p, double idle_p) {
  auto level = [](const NoiseLevel& l) -> nlohmann::json {
    if (l.fixed) return nlohmann::json{{"kind", "fixed"}, {"value", l.value}};
    return nlohmann::json{{"kind", "class"}, {"class", to_string(l.cls)}};
  };
  return nlohmann::json{{"gate", level(gate_level)},
                        {"idle", level(idle_level)},
                        {"cnot_noise_on_both", cnot_both},
                        {"resolved_gate_p", gate_p},
                        {"resolved_idle_p", idle_p}};
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open \"" + path + "\" for writing");
  out << content;
  if (!out) throw std::runtime_error("failed writing \"" + path + "\"");
}

void write_run_manifest(const std::string& out_path, const std::string& command,
                        const nlohmann::json& model,
                        const nlohmann::json& plan, const nlohmann::json& noise,
                        std::uint64_t seed) {
  nlohmann::json manifest{{"command", command},
                          {"model", model},
                          {"plan", plan},
                          {"noise", noise},
                          {"seed", seed},
                          {"out", out_path},
                          {"tool_version", kToolVersion}};
  write_text_file(out_path + ".manifest.json", manifest.dump(2) + "\n");
}

}  // namespace paulistar
