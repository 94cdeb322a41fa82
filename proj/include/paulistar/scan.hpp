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
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "paulistar/hamiltonian.hpp"
#include "paulistar/noise.hpp"
#include "paulistar/trotter.hpp"

namespace paulistar {

inline constexpr const char* kToolVersion = "0.1.0";

// Evenly spaced step boundaries 0 = k_0 < ... <= k_samples = steps.
std::vector<int> sample_boundaries(int steps, int samples);

struct TrotterScanRequest {
  std::string model = "ising";
  int n = 2;
  double J = 1.0;
  std::uint64_t seed = 0;
  bool time_dependent = false;
  double total_time = 1.0;
  int steps = 1000;
  int order = 1;
  int samples = 10;
};

// Header "t,qubits,order,r,err_circuit,err_numeric,model,seed" and one row
// per sampled boundary per request.  Output is deterministic byte for byte.
std::string trotter_scan_csv(const std::vector<TrotterScanRequest>& requests);

struct NoisyScanRequest {
  std::string model = "tfqim";
  int n = 2;
  double J = 1.0;
  std::uint64_t seed = 0;
  bool time_dependent = false;
  double total_time = 1.0;
  int steps = 100;
  std::string input_state = "ones";  // "ones" or "plus"
  NoiseLevel gate_level;
  NoiseLevel idle_level;
  bool cnot_noise_on_both = true;
  int samples = 10;
};

// Header "t,qubits,input_state,gate_p_class,idle_p_class,gate_p,idle_p,
// fidelity,seed"; fidelity compares the noisy density matrix against the
// noiseless circuit state at the same boundary.
std::string noisy_scan_csv(const std::vector<NoisyScanRequest>& requests);

// The initial state named by a request ("ones" = |1...1>, "plus" = |+...+>).
ComplexVector input_state_vector(const std::string& name, int n);

nlohmann::json plan_json(const TrotterPlan& plan);
nlohmann::json noise_json(const NoiseLevel& gate_level,
                          const NoiseLevel& idle_level, bool cnot_both,
                          double gate_p, double idle_p);

// Writes `path` atomically enough for this tool: truncate and write.
void write_text_file(const std::string& path, const std::string& content);

// Manifest describing one run; written beside the output as
// "<out>.manifest.json".
void write_run_manifest(const std::string& out_path, const std::string& command,
                        const nlohmann::json& model,
                        const nlohmann::json& plan, const nlohmann::json& noise,
                        std::uint64_t seed);

}  // namespace paulistar
