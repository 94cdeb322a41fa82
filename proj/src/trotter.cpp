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

#include "paulistar/trotter.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "paulistar/errors.hpp"
#include "paulistar/exp_synth.hpp"
#include "paulistar/simulate.hpp"

namespace paulistar {

namespace {

constexpr Complex kI{0.0, 1.0};

void validate_plan(const Hamiltonian& h, const TrotterPlan& plan) {
  if (h.n < 1 || h.terms.empty()) {
    throw std::invalid_argument("Hamiltonian has no terms");
  }
  if (plan.steps < 1) throw std::invalid_argument("step count must be positive");
  if (plan.total_time < 0.0) {
    throw std::invalid_argument("total time must be non-negative");
  }
  if (plan.order != 1 && (plan.order < 2 || plan.order % 2 != 0)) {
    throw std::invalid_argument("order must be 1 or an even integer");
  }
}

// Appends factors of a single formula block of the given order spanning
// duration s, with coefficients fixed to their step-k values.
void expand_block(const Hamiltonian& h, int order, double s, double t,
                  double dt, std::vector<TrotterFactor>& out) {
  const std::size_t terms = h.terms.size();
  if (order == 1) {
    for (std::size_t j = 0; j < terms; ++j) {
      out.push_back({j, h.terms[j].coeff.at(t, dt) * s});
    }
    return;
  }
  if (order == 2) {
    for (std::size_t j = 0; j < terms; ++j) {
      out.push_back({j, h.terms[j].coeff.at(t, dt) * s / 2});
    }
    for (std::size_t j = terms; j-- > 0;) {
      out.push_back({j, h.terms[j].coeff.at(t, dt) * s / 2});
    }
    return;
  }
  const double nu = suzuki_nu(order / 2);
  expand_block(h, order - 2, nu * s, t, dt, out);
  expand_block(h, order - 2, nu * s, t, dt, out);
  expand_block(h, order - 2, (1.0 - 4.0 * nu) * s, t, dt, out);
  expand_block(h, order - 2, nu * s, t, dt, out);
  expand_block(h, order - 2, nu * s, t, dt, out);
}

}  // namespace

double suzuki_nu(int k) {
  if (k < 2) throw std::invalid_argument("split coefficient defined for k >= 2");
  return 1.0 / (4.0 - std::pow(4.0, 1.0 / (2.0 * k - 1.0)));
}

std::vector<TrotterFactor> step_factors(const Hamiltonian& h,
                                        const TrotterPlan& plan, int k) {
  validate_plan(h, plan);
  if (k < 1 || k > plan.steps) throw std::invalid_argument("step index out of range");
  const double dt = plan.total_time / plan.steps;
  std::vector<TrotterFactor> out;
  expand_block(h, plan.order, dt, k * dt, dt, out);
  return out;
}

SteppedCircuit trotter_stepped(const Hamiltonian& h, const TrotterPlan& plan) {
  validate_plan(h, plan);
  if (h.time_dependent && plan.order != 1) {
    throw std::invalid_argument(
        "piecewise-constant evolution is first order only");
  }
  SteppedCircuit out;
  out.circuit = Circuit(h.n);
  out.gates_after_step.reserve(static_cast<std::size_t>(plan.steps));
  out.phase_after_step.reserve(static_cast<std::size_t>(plan.steps));

  // Coefficients depend on the step only through its parity, so synthesized
  // step blocks can be reused instead of rebuilt.
  std::map<int, std::pair<Circuit, Complex>> block_cache;
  Complex phase{1.0, 0.0};
  for (int k = 1; k <= plan.steps; ++k) {
    const int parity = h.time_dependent ? (k % 2) : 0;
    auto it = block_cache.find(parity);
    if (it == block_cache.end()) {
      Circuit block(h.n);
      Complex block_phase{1.0, 0.0};
      for (const TrotterFactor& f : step_factors(h, plan, k)) {
        const HamiltonianTerm& term = h.terms[f.term];
        if (term.string.is_identity()) {
          block_phase *= std::exp(-kI * f.theta);
          continue;
        }
        block.append(exp_pauli_circuit({term.string, f.theta, Sign::Minus}));
      }
      it = block_cache.emplace(parity, std::make_pair(std::move(block),
                                                      block_phase)).first;
    }
    out.circuit.append(it->second.first);
    phase *= it->second.second;
    out.gates_after_step.push_back(out.circuit.gates.size());
    out.phase_after_step.push_back(phase);
  }
  return out;
}

PhasedCircuit trotter_circuit(const Hamiltonian& h, const TrotterPlan& plan) {
  if (h.time_dependent) {
    throw std::invalid_argument(
        "time-dependent Hamiltonian requires the td path");
  }
  if (plan.constant_depth) return constant_depth_circuit(h, plan.total_time);
  SteppedCircuit stepped = trotter_stepped(h, plan);
  return {std::move(stepped.circuit), stepped.phase_after_step.back()};
}

PhasedCircuit trotter_td_circuit(const Hamiltonian& h, const TrotterPlan& plan) {
  if (plan.order != 1) {
    throw std::invalid_argument(
        "piecewise-constant evolution is first order only");
  }
  if (plan.constant_depth) {
    throw std::invalid_argument(
        "constant-depth path requires a time-independent Hamiltonian");
  }
  SteppedCircuit stepped = trotter_stepped(h, plan);
  return {std::move(stepped.circuit), stepped.phase_after_step.back()};
}

PhasedCircuit constant_depth_circuit(const Hamiltonian& h, double total_time) {
  if (h.n < 1 || h.terms.empty()) {
    throw std::invalid_argument("Hamiltonian has no terms");
  }
  if (h.time_dependent) {
    throw std::invalid_argument(
        "constant-depth path requires a time-independent Hamiltonian");
  }
  for (std::size_t a = 0; a < h.terms.size(); ++a) {
    for (std::size_t b = a + 1; b < h.terms.size(); ++b) {
      if (!strings_commute(h.terms[a].string, h.terms[b].string)) {
        throw std::invalid_argument(
            "constant-depth path requires mutually commuting terms");
      }
    }
  }

  PhasedCircuit out;
  out.circuit = Circuit(h.n);

  // Per-term blocks synthesized over the term's own support.
  struct Block {
    std::vector<int> support;  // ascending qubit positions
    std::vector<Gate> gates;
  };
  std::vector<Block> blocks;
  for (const HamiltonianTerm& term : h.terms) {
    const double theta = term.coeff.at(0.0) * total_time;
    if (term.string.is_identity()) {
      out.phase *= std::exp(-kI * theta);
      continue;
    }
    Block blk;
    std::vector<PauliLetter> sub_letters;
    for (int j = 1; j <= h.n; ++j) {
      if (term.string.letter(j) != PauliLetter::I) {
        blk.support.push_back(j);
        sub_letters.push_back(term.string.letter(j));
      }
    }
    const Circuit sub = exp_pauli_circuit(
        {PauliString(std::move(sub_letters)), theta, Sign::Minus});
    for (Gate g : sub.gates) {
      g.target = blk.support[static_cast<std::size_t>(g.target - 1)];
      if (g.kind == GateKind::CNOT) {
        g.control = blk.support[static_cast<std::size_t>(g.control - 1)];
      }
      blk.gates.push_back(g);
    }
    blocks.push_back(std::move(blk));
  }

  // First-fit rounds of support-disjoint blocks, emitted position-by-position
  // so each round packs into as many layers as its longest block.
  std::vector<std::vector<std::size_t>> rounds;
  std::vector<std::vector<bool>> round_used;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    bool placed = false;
    for (std::size_t r = 0; r < rounds.size() && !placed; ++r) {
      bool clash = false;
      for (int q : blocks[i].support) {
        if (round_used[r][static_cast<std::size_t>(q)]) {
          clash = true;
          break;
        }
      }
      if (!clash) {
        rounds[r].push_back(i);
        for (int q : blocks[i].support) round_used[r][static_cast<std::size_t>(q)] = true;
        placed = true;
      }
    }
    if (!placed) {
      rounds.push_back({i});
      round_used.emplace_back(static_cast<std::size_t>(h.n) + 1, false);
      for (int q : blocks[i].support) round_used.back()[static_cast<std::size_t>(q)] = true;
    }
  }
  for (const auto& round : rounds) {
    std::size_t longest = 0;
    for (std::size_t i : round) longest = std::max(longest, blocks[i].gates.size());
    for (std::size_t pos = 0; pos < longest; ++pos) {
      for (std::size_t i : round) {
        if (pos < blocks[i].gates.size()) out.circuit.append(blocks[i].gates[pos]);
      }
    }
  }
  return out;
}

std::vector<ErrorSample> error_report(const Hamiltonian& h,
                                      const TrotterPlan& plan,
                                      const std::vector<int>& sample_steps) {
  validate_plan(h, plan);
  if (h.n > kMaxDenseQubits) {
    throw InfeasibleError("error report limited to " +
                          std::to_string(kMaxDenseQubits) + " qubits");
  }
  if (h.time_dependent && plan.order != 1) {
    throw std::invalid_argument(
        "piecewise-constant evolution is first order only");
  }
  const double dt = plan.total_time / plan.steps;
  const Eigen::Index dim = Eigen::Index{1} << h.n;

  std::vector<int> samples = sample_steps;
  std::sort(samples.begin(), samples.end());
  samples.erase(std::unique(samples.begin(), samples.end()), samples.end());
  for (int k : samples) {
    if (k < 0 || k > plan.steps) {
      throw std::invalid_argument("sample step out of range");
    }
  }

  // Reference evolution.  Time-independent input diagonalizes once; the
  // time-dependent reference is the ordered product of per-step exponentials,
  // of which there are only two distinct ones (step parity).
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es;
  std::map<int, ComplexMatrix> ref_step;
  if (h.time_dependent) {
    for (int parity : {0, 1}) {
      const double t = (parity == 0) ? 2 * dt : dt;
      ref_step[parity] = exp_hermitian(dense_at(h, t, dt), -dt);
    }
  } else {
    es.compute(dense_at(h, 0.0));
    if (es.info() != Eigen::Success) {
      throw std::runtime_error("eigendecomposition failed");
    }
  }
  auto reference_at = [&](int k, const ComplexMatrix& running) -> ComplexMatrix {
    if (h.time_dependent) return running;
    ComplexVector phases(es.eigenvalues().size());
    for (Eigen::Index i = 0; i < phases.size(); ++i) {
      phases(i) = std::exp(-kI * (k * dt) * es.eigenvalues()(i));
    }
    return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
  };

  // Per-parity reusable step data: circuit block, its phase, and the product
  // of the step's dense formula factors, multiplied out once.
  struct StepData {
    Circuit block;
    Complex block_phase{1.0, 0.0};
    ComplexMatrix step_matrix;
  };
  std::map<int, StepData> step_data;
  auto data_for = [&](int k) -> StepData& {
    const int parity = h.time_dependent ? (k % 2) : 0;
    auto it = step_data.find(parity);
    if (it != step_data.end()) return it->second;
    StepData d;
    d.block = Circuit(h.n);
    d.step_matrix = ComplexMatrix::Identity(dim, dim);
    for (const TrotterFactor& f : step_factors(h, plan, k)) {
      const HamiltonianTerm& term = h.terms[f.term];
      if (term.string.is_identity()) {
        const Complex scalar = std::exp(-kI * f.theta);
        d.block_phase *= scalar;
        d.step_matrix *= scalar;
        continue;
      }
      d.block.append(exp_pauli_circuit({term.string, f.theta, Sign::Minus}));
      d.step_matrix = exp_hermitian(dense(term.string), -f.theta) * d.step_matrix;
    }
    return step_data.emplace(parity, std::move(d)).first->second;
  };

  ComplexMatrix u_circuit = ComplexMatrix::Identity(dim, dim);
  ComplexMatrix u_numeric = ComplexMatrix::Identity(dim, dim);
  ComplexMatrix u_ref_running = ComplexMatrix::Identity(dim, dim);
  Complex phase{1.0, 0.0};

  std::vector<ErrorSample> report;
  auto sample_now = std::find(samples.begin(), samples.end(), 0);
  if (sample_now != samples.end()) report.push_back({0, 0.0, 0.0, 0.0});

  for (int k = 1; k <= plan.steps; ++k) {
    StepData& d = data_for(k);
    for (const Gate& g : d.block.gates) apply_gate_to_matrix(g, h.n, u_circuit);
    phase *= d.block_phase;
    u_numeric = d.step_matrix * u_numeric;
    if (h.time_dependent) u_ref_running = ref_step[k % 2] * u_ref_running;
    if (std::binary_search(samples.begin(), samples.end(), k)) {
      const ComplexMatrix ref = reference_at(k, u_ref_running);
      report.push_back({k, k * dt, frobenius_distance(phase * u_circuit, ref),
                        frobenius_distance(u_numeric, ref)});
    }
  }
  return report;
}

}  // namespace paulistar
