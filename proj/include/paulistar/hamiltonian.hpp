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

#include "paulistar/dense.hpp"
#include "paulistar/pauli.hpp"

namespace paulistar {

/**
 * Term coefficient, either constant or switching between two values with the
 * parity of the piecewise-constant step index.  Evaluation receives the step
 * time t = k * dt and recovers k by rounding t / dt, so the same coefficient
 * object serves any step count.
 */
class Coefficient {
 public:
  static Coefficient constant(double value);
  static Coefficient step_parity(double even_value, double odd_value);

  bool time_dependent() const { return time_dependent_; }

  // Value at step time t with step width dt.  Constant coefficients ignore
  // both arguments.
  double at(double t, double dt = 1.0) const;

  bool operator==(const Coefficient&) const = default;

 private:
  Coefficient(bool td, double a, double b)
      : time_dependent_(td), even_(a), odd_(b) {}

  bool time_dependent_ = false;
  double even_ = 0.0;  // constant value when not time dependent
  double odd_ = 0.0;
};

struct HamiltonianTerm {
  Coefficient coeff;
  PauliString string;
};

struct Hamiltonian {
  int n = 0;
  std::vector<HamiltonianTerm> terms;
  bool time_dependent = false;

  // Build parameters, carried for manifests and reproducibility.
  std::string model = "custom";
  double J = 0.0;
  std::uint64_t seed = 0;
};

/**
 * Nearest-neighbour Z Z chain: sum_{l=1}^{n-1} J Z_l Z_{l+1}.
 * All terms commute, so Trotterization is exact at any step count.
 */
Hamiltonian build_ising(int n, double J = 1.0);

/**
 * I^n + I^(n-1) (x) X: identity plus a single X on the last qubit.  Its
 * exact evolution is the phase e^{-iT} times RX(-T) on qubit n.
 */
Hamiltonian build_blkdg(int n);

/**
 * Heisenberg chain: sum_l J (X X + Y Y + Z Z) on neighbours plus Z fields
 * h_l drawn uniformly from [-1, 1) with a seeded splittable generator.
 * The time-dependent variant adds X terms whose coefficient flips between
 * -1 (even step) and +1 (odd step).
 */
Hamiltonian build_heisenberg(int n, double J, std::uint64_t seed,
                             bool time_dependent);

/**
 * Transverse-field chain: Z Z couplings (J = 1, switched off on odd steps in
 * the time-dependent variant), uniform X field 1/2, and seeded Z fields h_l.
 */
Hamiltonian build_tfqim(int n, std::uint64_t seed, bool time_dependent);

// Dense matrix sum of the terms with coefficients evaluated at step time t.
ComplexMatrix dense_at(const Hamiltonian& h, double t, double dt = 1.0);

// Exact Pauli commutation: strings commute iff they disagree on an even
// number of positions where both are non-identity.
bool strings_commute(const PauliString& a, const PauliString& b);

// {"model", "n", "J", "seed", "time_dependent"}; round-trips via
// build_from_spec for the four named models.
nlohmann::json model_spec_json(const Hamiltonian& h);
Hamiltonian build_from_spec(const nlohmann::json& spec);

}  // namespace paulistar
