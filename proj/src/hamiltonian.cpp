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

#include "paulistar/hamiltonian.hpp"

#include <cmath>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "paulistar/errors.hpp"
#include "paulistar/rng.hpp"
#include "paulistar/simulate.hpp"

namespace paulistar {

namespace {

PauliString one_letter(int n, int pos, PauliLetter p) {
  std::vector<PauliLetter> letters(static_cast<std::size_t>(n), PauliLetter::I);
  letters[static_cast<std::size_t>(pos - 1)] = p;
  return PauliString(std::move(letters));
}

PauliString neighbour_pair(int n, int l, PauliLetter p) {
  std::vector<PauliLetter> letters(static_cast<std::size_t>(n), PauliLetter::I);
  letters[static_cast<std::size_t>(l - 1)] = p;
  letters[static_cast<std::size_t>(l)] = p;
  return PauliString(std::move(letters));
}

std::vector<double> field_draws(int n, std::uint64_t seed) {
  SplitMix64 gen(seed);
  std::vector<double> h(static_cast<std::size_t>(n));
  for (double& v : h) v = gen.uniform_symmetric();
  return h;
}

void require_chain(int n) {
  if (n < 2) throw std::invalid_argument("chain models need at least 2 qubits");
}

}  // namespace

Coefficient Coefficient::constant(double value) {
  return Coefficient(false, value, value);
}

Coefficient Coefficient::step_parity(double even_value, double odd_value) {
  return Coefficient(true, even_value, odd_value);
}

double Coefficient::at(double t, double dt) const {
  if (!time_dependent_) return even_;
  if (dt <= 0.0) throw std::invalid_argument("step width must be positive");
  const auto k = static_cast<long long>(std::llround(t / dt));
  return (k % 2 == 0) ? even_ : odd_;
}

Hamiltonian build_ising(int n, double J) {
  require_chain(n);
  Hamiltonian h;
  h.n = n;
  h.model = "ising";
  h.J = J;
  for (int l = 1; l < n; ++l) {
    h.terms.push_back({Coefficient::constant(J), neighbour_pair(n, l, PauliLetter::Z)});
  }
  return h;
}

Hamiltonian build_blkdg(int n) {
  if (n < 1) throw std::invalid_argument("model needs at least 1 qubit");
  Hamiltonian h;
  h.n = n;
  h.model = "blkdg";
  h.terms.push_back({Coefficient::constant(1.0),
                     PauliString(std::vector<PauliLetter>(
                         static_cast<std::size_t>(n), PauliLetter::I))});
  h.terms.push_back({Coefficient::constant(1.0), one_letter(n, n, PauliLetter::X)});
  return h;
}

Hamiltonian build_heisenberg(int n, double J, std::uint64_t seed,
                             bool time_dependent) {
  require_chain(n);
  Hamiltonian h;
  h.n = n;
  h.model = "heisenberg";
  h.J = J;
  h.seed = seed;
  h.time_dependent = time_dependent;
  for (int l = 1; l < n; ++l) {
    h.terms.push_back({Coefficient::constant(J), neighbour_pair(n, l, PauliLetter::X)});
    h.terms.push_back({Coefficient::constant(J), neighbour_pair(n, l, PauliLetter::Y)});
    h.terms.push_back({Coefficient::constant(J), neighbour_pair(n, l, PauliLetter::Z)});
  }
  const std::vector<double> fields = field_draws(n, seed);
  for (int l = 1; l <= n; ++l) {
    h.terms.push_back({Coefficient::constant(fields[static_cast<std::size_t>(l - 1)]),
                       one_letter(n, l, PauliLetter::Z)});
  }
  if (time_dependent) {
    // Driving term -g(t) sum_l X_l with g = +1 on even steps, -1 on odd.
    for (int l = 1; l <= n; ++l) {
      h.terms.push_back({Coefficient::step_parity(-1.0, 1.0),
                         one_letter(n, l, PauliLetter::X)});
    }
  }
  return h;
}

Hamiltonian build_tfqim(int n, std::uint64_t seed, bool time_dependent) {
  require_chain(n);
  Hamiltonian h;
  h.n = n;
  h.model = "tfqim";
  h.J = 1.0;
  h.seed = seed;
  h.time_dependent = time_dependent;
  const Coefficient coupling = time_dependent
                                   ? Coefficient::step_parity(1.0, 0.0)
                                   : Coefficient::constant(1.0);
  for (int l = 1; l < n; ++l) {
    h.terms.push_back({coupling, neighbour_pair(n, l, PauliLetter::Z)});
  }
  for (int l = 1; l <= n; ++l) {
    h.terms.push_back({Coefficient::constant(0.5), one_letter(n, l, PauliLetter::X)});
  }
  const std::vector<double> fields = field_draws(n, seed);
  for (int l = 1; l <= n; ++l) {
    h.terms.push_back({Coefficient::constant(fields[static_cast<std::size_t>(l - 1)]),
                       one_letter(n, l, PauliLetter::Z)});
  }
  return h;
}

ComplexMatrix dense_at(const Hamiltonian& h, double t, double dt) {
  if (h.n > kMaxDenseQubits) {
    throw InfeasibleError("dense Hamiltonian limited to " +
                          std::to_string(kMaxDenseQubits) + " qubits");
  }
  const Eigen::Index dim = Eigen::Index{1} << h.n;
  ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
  for (const HamiltonianTerm& term : h.terms) {
    m += term.coeff.at(t, dt) * dense(term.string);
  }
  return m;
}

bool strings_commute(const PauliString& a, const PauliString& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("strings of unequal length");
  }
  int anti = 0;
  for (int j = 1; j <= a.size(); ++j) {
    const PauliLetter pa = a.letter(j);
    const PauliLetter pb = b.letter(j);
    if (pa != PauliLetter::I && pb != PauliLetter::I && pa != pb) ++anti;
  }
  return anti % 2 == 0;
}

nlohmann::json model_spec_json(const Hamiltonian& h) {
  return nlohmann::json{{"model", h.model},
                        {"n", h.n},
                        {"J", h.J},
                        {"seed", h.seed},
                        {"time_dependent", h.time_dependent}};
}

Hamiltonian build_from_spec(const nlohmann::json& spec) {
  const std::string model = spec.at("model").get<std::string>();
  const int n = spec.at("n").get<int>();
  const double J = spec.value("J", 1.0);
  const std::uint64_t seed = spec.value("seed", std::uint64_t{0});
  const bool td = spec.value("time_dependent", false);
  if (model == "ising") {
    if (td) throw std::invalid_argument("ising model is time independent");
    return build_ising(n, J);
  }
  if (model == "blkdg") {
    if (td) throw std::invalid_argument("blkdg model is time independent");
    return build_blkdg(n);
  }
  if (model == "heisenberg") return build_heisenberg(n, J, seed, td);
  if (model == "tfqim") return build_tfqim(n, seed, td);
  throw std::invalid_argument("unknown model \"" + model + "\"");
}

}  // namespace paulistar
