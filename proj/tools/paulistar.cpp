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

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "paulistar/circuit.hpp"
#include "paulistar/errors.hpp"
#include "paulistar/exp_synth.hpp"
#include "paulistar/hamiltonian.hpp"
#include "paulistar/perm_synth.hpp"
#include "paulistar/scan.hpp"
#include "paulistar/simulate.hpp"

namespace {

using namespace paulistar;

constexpr int kExitOk = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitUsage = 2;

NoiseLevel parse_noise_level(const std::string& text) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used == text.size()) return NoiseLevel::fixed_value(v);
  } catch (const std::exception&) {
    // Fall through to class names.
  }
  return NoiseLevel::from_class(noise_class_from_string(text));
}

void emit(const std::string& out, const std::string& content) {
  if (out.empty()) {
    std::cout << content;
  } else {
    write_text_file(out, content);
  }
}

int run_synth(const std::string& word, double theta, bool minus,
              const std::string& out, std::uint64_t seed) {
  const PauliString sigma = PauliString::parse(word);
  const ExpSynthRequest req{sigma, theta, minus ? Sign::Minus : Sign::Plus};
  const Circuit circuit = exp_pauli_circuit(req);
  const GateCensus counts = census(circuit);
  const GateCountBound bounds = gate_bounds(sigma);
  const StarReport star = star_connectivity_report(circuit, circuit.n);
  const bool ok = within_bounds(counts, bounds) && star.pass;

  emit(out, circuit_to_json(circuit).dump(2) + "\n");
  std::cerr << "pauli " << sigma.str() << "  theta " << theta
            << (minus ? "  sign -" : "  sign +") << "\n"
            << "gates " << counts.total() << "  depth " << counts.depth
            << "  rx " << counts.rx << "  ry " << counts.ry << "  rz "
            << counts.rz << "  h " << counts.h << "  s " << counts.s + counts.sdag
            << "  cnot " << counts.cnot << " (control-n "
            << counts.cnot_control_n << ", target-n " << counts.cnot_target_n
            << ")\n"
            << "count bounds and star check: " << (ok ? "ok" : "VIOLATED")
            << "\n";
  if (!out.empty()) {
    write_run_manifest(out, "synth",
                       nlohmann::json{{"pauli", sigma.str()},
                                      {"theta", theta},
                                      {"sign", minus ? "-" : "+"}},
                       nullptr, nullptr, seed);
  }
  return ok ? kExitOk : kExitInfeasible;
}

int run_perm(int n, std::uint64_t x, const std::string& parity,
             const std::string& out, std::uint64_t seed) {
  PermSelector sel;
  sel.n = n;
  sel.x = x;
  if (parity == "even") {
    sel.parity = PermParity::Even;
  } else if (parity == "odd") {
    sel.parity = PermParity::Odd;
  } else {
    throw std::invalid_argument("parity must be \"even\" or \"odd\"");
  }
  const Circuit circuit = perm_circuit(sel);

  nlohmann::json doc;
  doc["circuit"] = circuit_to_json(circuit);
  nlohmann::json pairs = nlohmann::json::array();
  if (x != 0) {
    for (const Transposition& t : transposition_product(sel)) {
      pairs.push_back({t.first, t.second});
    }
  }
  doc["transpositions"] = std::move(pairs);
  emit(out, doc.dump(2) + "\n");
  if (!out.empty()) {
    write_run_manifest(out, "perm",
                       nlohmann::json{{"n", n}, {"x", x}, {"parity", parity}},
                       nullptr, nullptr, seed);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Star-connectivity compiler for Pauli-string exponentials and "
               "Hamiltonian simulation"};
  app.require_subcommand(1);

  std::uint64_t seed = 0;
  app.add_option("--seed", seed, "seed for field and noise draws")
      ->envname("PAULISTAR_SEED");

  // synth
  auto* synth = app.add_subcommand("synth", "compile exp(+/- i theta sigma)");
  std::string synth_pauli;
  double synth_theta = 0.0;
  bool synth_minus = false;
  std::string synth_out;
  synth->add_option("--pauli", synth_pauli, "Pauli word over I, X, Y, Z")
      ->required();
  synth->add_option("--theta", synth_theta, "rotation angle")->required();
  synth->add_flag("--minus", synth_minus, "compile exp(-i theta sigma)");
  synth->add_option("--out", synth_out, "write circuit JSON here");

  // perm
  auto* perm = app.add_subcommand("perm", "dump a hub permutation circuit");
  int perm_n = 2;
  std::uint64_t perm_x = 0;
  std::string perm_parity = "even";
  std::string perm_out;
  perm->add_option("--n", perm_n, "qubit count")->required();
  perm->add_option("--x", perm_x, "selector below 2^(n-1)")->required();
  perm->add_option("--parity", perm_parity, "even or odd");
  perm->add_option("--out", perm_out, "write JSON here");

  // trotter-scan
  auto* tscan = app.add_subcommand("trotter-scan",
                                   "product-formula error scan to CSV");
  std::string ts_model = "ising";
  std::vector<int> ts_ns{2};
  double ts_J = 1.0;
  bool ts_td = false;
  double ts_T = 1.0;
  int ts_steps = 1000;
  int ts_order = 1;
  int ts_samples = 10;
  std::string ts_out;
  tscan->add_option("--model", ts_model, "ising, blkdg, heisenberg, tfqim");
  tscan->add_option("--n", ts_ns, "qubit counts")->delimiter(',');
  tscan->add_option("--J", ts_J, "coupling strength");
  tscan->add_flag("--td", ts_td, "time-dependent variant");
  tscan->add_option("--T", ts_T, "total evolution time");
  tscan->add_option("--steps", ts_steps, "Trotter step count r");
  tscan->add_option("--order", ts_order, "1 or an even order");
  tscan->add_option("--samples", ts_samples, "sampled boundaries");
  tscan->add_option("--out", ts_out, "CSV path")->required();

  // noisy-scan
  auto* nscan = app.add_subcommand("noisy-scan",
                                   "noisy density-matrix fidelity scan to CSV");
  std::string ns_model = "tfqim";
  int ns_n = 2;
  double ns_J = 1.0;
  bool ns_td = false;
  double ns_T = 1.0;
  int ns_steps = 100;
  std::string ns_input = "ones";
  std::string ns_gate = "low";
  std::string ns_idle = "low";
  bool ns_cnot_single = false;
  int ns_samples = 10;
  std::string ns_out;
  nscan->add_option("--model", ns_model, "ising, blkdg, heisenberg, tfqim");
  nscan->add_option("--n", ns_n, "qubit count");
  nscan->add_option("--J", ns_J, "coupling strength");
  nscan->add_flag("--td", ns_td, "time-dependent variant");
  nscan->add_option("--T", ns_T, "total evolution time");
  nscan->add_option("--steps", ns_steps, "Trotter step count r");
  nscan->add_option("--input-state", ns_input, "ones or plus");
  nscan->add_option("--gate-noise", ns_gate, "low, medium, high, or a value");
  nscan->add_option("--idle-noise", ns_idle, "low, medium, high, or a value");
  nscan->add_flag("--cnot-single", ns_cnot_single,
                  "gate noise on the CNOT target only");
  nscan->add_option("--samples", ns_samples, "sampled boundaries");
  nscan->add_option("--out", ns_out, "CSV path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (synth->parsed()) {
      return run_synth(synth_pauli, synth_theta, synth_minus, synth_out, seed);
    }
    if (perm->parsed()) {
      return run_perm(perm_n, perm_x, perm_parity, perm_out, seed);
    }
    if (tscan->parsed()) {
      std::vector<TrotterScanRequest> reqs;
      nlohmann::json models = nlohmann::json::array();
      for (int n : ts_ns) {
        TrotterScanRequest req;
        req.model = ts_model;
        req.n = n;
        req.J = ts_J;
        req.seed = seed;
        req.time_dependent = ts_td;
        req.total_time = ts_T;
        req.steps = ts_steps;
        req.order = ts_order;
        req.samples = ts_samples;
        reqs.push_back(req);
        models.push_back(model_spec_json(
            build_from_spec({{"model", ts_model}, {"n", n}, {"J", ts_J},
                             {"seed", seed}, {"time_dependent", ts_td}})));
      }
      const std::string csv = trotter_scan_csv(reqs);
      write_text_file(ts_out, csv);
      TrotterPlan plan;
      plan.total_time = ts_T;
      plan.steps = ts_steps;
      plan.order = ts_order;
      write_run_manifest(ts_out, "trotter-scan",
                         models.size() == 1 ? models.front() : models,
                         plan_json(plan), nullptr, seed);
      return kExitOk;
    }
    if (nscan->parsed()) {
      NoisyScanRequest req;
      req.model = ns_model;
      req.n = ns_n;
      req.J = ns_J;
      req.seed = seed;
      req.time_dependent = ns_td;
      req.total_time = ns_T;
      req.steps = ns_steps;
      req.input_state = ns_input;
      req.gate_level = parse_noise_level(ns_gate);
      req.idle_level = parse_noise_level(ns_idle);
      req.cnot_noise_on_both = !ns_cnot_single;
      req.samples = ns_samples;
      const std::string csv = noisy_scan_csv({req});
      write_text_file(ns_out, csv);
      TrotterPlan plan;
      plan.total_time = ns_T;
      plan.steps = ns_steps;
      write_run_manifest(
          ns_out, "noisy-scan",
          model_spec_json(build_from_spec({{"model", ns_model}, {"n", ns_n},
                                           {"J", ns_J}, {"seed", seed},
                                           {"time_dependent", ns_td}})),
          plan_json(plan),
          noise_json(req.gate_level, req.idle_level, req.cnot_noise_on_both,
                     resolve_strength(req.gate_level, seed, 0),
                     resolve_strength(req.idle_level, seed, 1)),
          seed);
      return kExitOk;
    }
  } catch (const InfeasibleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInfeasible;
  }
  return kExitUsage;
}
