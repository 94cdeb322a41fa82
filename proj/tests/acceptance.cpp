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

// End-to-end acceptance run.  Each numbered criterion prints one PASS/FAIL
// line; the process exits 0 only if every criterion passes.  Tolerances are
// pinned here, next to the checks they guard.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "paulistar/circuit.hpp"
#include "paulistar/dense.hpp"
#include "paulistar/exp_synth.hpp"
#include "paulistar/hamiltonian.hpp"
#include "paulistar/noise.hpp"
#include "paulistar/pauli.hpp"
#include "paulistar/perm_synth.hpp"
#include "paulistar/rng.hpp"
#include "paulistar/scan.hpp"
#include "paulistar/simulate.hpp"
#include "paulistar/trotter.hpp"

namespace {

using namespace paulistar;

void require(bool ok, const std::string& what) {
  if (!ok) throw std::runtime_error(what);
}

std::string fmt(double v) {
  std::ostringstream out;
  out << v;
  return out.str();
}

// ---------------------------------------------------------------------------
// Shared generators (fixed seeds keep every run identical).

PauliString random_string(SplitMix64& gen, int n) {
  while (true) {
    std::vector<PauliLetter> letters(static_cast<std::size_t>(n));
    bool identity = true;
    for (auto& l : letters) {
      l = static_cast<PauliLetter>(gen.below(4));
      identity &= l == PauliLetter::I;
    }
    if (!identity) return PauliString{std::move(letters)};
  }
}

Circuit random_circuit(SplitMix64& gen, int n, int gates) {
  Circuit c(n);
  for (int i = 0; i < gates; ++i) {
    const int q = 1 + static_cast<int>(gen.below(static_cast<std::uint64_t>(n)));
    switch (gen.below(n > 1 ? 7 : 6)) {
      case 0: c.append(Gate::rx(q, gen.uniform_symmetric())); break;
      case 1: c.append(Gate::ry(q, gen.uniform_symmetric())); break;
      case 2: c.append(Gate::rz(q, gen.uniform_symmetric())); break;
      case 3: c.append(Gate::h(q)); break;
      case 4: c.append(Gate::s(q)); break;
      case 5: c.append(Gate::sdag(q)); break;
      default: {
        int r = 1 + static_cast<int>(gen.below(static_cast<std::uint64_t>(n - 1)));
        if (r >= q) ++r;
        c.append(Gate::cnot(q, r));
        break;
      }
    }
  }
  return c;
}

ComplexVector random_state(SplitMix64& gen, int n) {
  ComplexVector psi(Eigen::Index{1} << n);
  for (Eigen::Index i = 0; i < psi.size(); ++i) {
    psi(i) = Complex{gen.uniform_symmetric(), gen.uniform_symmetric()};
  }
  psi.normalize();
  return psi;
}

// Integer-level CNOT cascade simulation, independent of the matrix path.
std::vector<std::uint64_t> bit_action(const Circuit& c) {
  const std::uint64_t dim = std::uint64_t{1} << c.n;
  std::vector<std::uint64_t> image(dim);
  for (std::uint64_t b = 0; b < dim; ++b) {
    std::uint64_t bits = b;
    for (const Gate& g : c.gates) {
      require(g.kind == GateKind::CNOT, "permutation circuit has a non-CNOT");
      if ((bits >> (c.n - g.control)) & 1) {
        bits ^= std::uint64_t{1} << (c.n - g.target);
      }
    }
    image[b] = bits;
  }
  return image;
}

// ---------------------------------------------------------------------------
// Criteria.

void criterion_perm_fixtures() {
  using P = std::vector<Transposition>;
  auto check_set = [](int n, std::uint64_t x, PermParity parity, const P& want) {
    const P got = transposition_product({n, x, parity});
    require(got == want, "transposition set for x=" + std::to_string(x) +
                             (parity == PermParity::Even ? " even" : " odd") +
                             " is wrong");
  };
  check_set(3, 1, PermParity::Even, {{2, 4}, {6, 8}});
  check_set(3, 2, PermParity::Even, {{2, 6}, {4, 8}});
  check_set(3, 3, PermParity::Even, {{2, 8}, {4, 6}});
  check_set(3, 1, PermParity::Odd, {{2, 3}, {6, 7}});
  check_set(3, 2, PermParity::Odd, {{2, 5}, {4, 7}});
  check_set(3, 3, PermParity::Odd, {{2, 7}, {4, 5}});

  const Circuit even_cascade = perm_circuit({3, 3, PermParity::Even});
  require(even_cascade.gates ==
              std::vector<Gate>{Gate::cnot(3, 2), Gate::cnot(3, 1)},
          "even cascade for n=3, x=3 is wrong");
  const Circuit odd = perm_circuit({4, 6, PermParity::Odd});
  require(odd.gates == std::vector<Gate>{Gate::cnot(1, 4), Gate::cnot(4, 2),
                                         Gate::cnot(4, 1), Gate::cnot(1, 4)},
          "odd cascade for n=4, x=6 is wrong");
}

void criterion_perm_unitaries() {
  for (int n = 2; n <= 6; ++n) {
    const std::uint64_t half = std::uint64_t{1} << (n - 1);
    const std::uint64_t dim = std::uint64_t{1} << n;
    for (std::uint64_t x = 1; x < half; ++x) {
      for (PermParity parity : {PermParity::Even, PermParity::Odd}) {
        const PermSelector sel{n, x, parity};
        const ComplexMatrix u = unitary_of(perm_circuit(sel));
        const auto image = basis_map(sel);
        for (std::uint64_t col = 0; col < dim; ++col) {
          for (std::uint64_t row = 0; row < dim; ++row) {
            const Complex want{row == image[col] ? 1.0 : 0.0, 0.0};
            require(u(static_cast<Eigen::Index>(row),
                      static_cast<Eigen::Index>(col)) == want,
                    "cascade unitary is not the expected 0/1 permutation at n=" +
                        std::to_string(n) + ", x=" + std::to_string(x));
          }
        }
      }
    }
  }
}

void criterion_conjugation() {
  for (int n = 1; n <= 6; ++n) {
    const std::uint64_t dim = std::uint64_t{1} << n;
    for (std::uint64_t b = 1; b < dim; ++b) {
      const PauliString sigma = PauliString::from_ix_index(n, b);
      const Circuit cascade = conjugating_perm(sigma);
      const auto pi = bit_action(cascade);
      for (std::uint64_t i = 0; i < dim; ++i) {
        require(pi[pi[i] ^ b] == (i ^ 1),
                "index conjugation identity fails at n=" + std::to_string(n) +
                    ", b=" + std::to_string(b));
      }
      if (n <= 4) {
        const ComplexMatrix p = unitary_of(cascade);
        const ComplexMatrix tail = dense(PauliString::from_ix_index(n, 1));
        require(((p * dense(sigma) * p) - tail).cwiseAbs().maxCoeff() == 0.0,
                "dense conjugation fails at n=" + std::to_string(n) +
                    ", b=" + std::to_string(b));
      }
    }
  }
}

void criterion_exp_correctness() {
  // Dense, exhaustive at four qubits.
  const double kTolDense = 1e-10;
  for (std::uint64_t code = 1; code < 256; ++code) {
    std::vector<PauliLetter> letters(4);
    std::uint64_t rest = code;
    for (int j = 3; j >= 0; --j) {
      letters[static_cast<std::size_t>(j)] = static_cast<PauliLetter>(rest & 3);
      rest >>= 2;
    }
    const PauliString sigma{letters};
    for (double theta : {0.1, 0.7, std::numbers::pi / 3}) {
      const ComplexMatrix u =
          unitary_of(exp_pauli_circuit({sigma, theta, Sign::Plus}));
      const double err = frobenius_distance(u, exp_hermitian(dense(sigma), theta));
      require(err <= kTolDense, "exp circuit for " + sigma.str() + " off by " +
                                    fmt(err));
      const ComplexMatrix m =
          unitary_of(exp_pauli_circuit({sigma, theta, Sign::Minus}));
      const double err_minus =
          frobenius_distance(m, exp_hermitian(dense(sigma), -theta));
      require(err_minus <= kTolDense,
              "negative-sign circuit for " + sigma.str() + " off by " +
                  fmt(err_minus));
    }
  }

  // Statevector, randomized at six qubits.
  const double kTolState = 1e-9;
  SplitMix64 gen(1004);
  for (int trial = 0; trial < 500; ++trial) {
    const PauliString sigma = random_string(gen, 6);
    const double theta = gen.uniform_symmetric() * std::numbers::pi;
    const Circuit c = exp_pauli_circuit({sigma, theta, Sign::Plus});
    const ComplexVector psi = random_state(gen, 6);
    const ComplexVector expected =
        std::cos(theta) * psi +
        Complex{0.0, 1.0} * std::sin(theta) * (dense(sigma) * psi);
    const double err =
        (paulistar::apply(c, psi) - expected).cwiseAbs().maxCoeff();
    require(err <= kTolState,
            "statevector action for " + sigma.str() + " off by " + fmt(err));
  }
}

void criterion_gate_bounds() {
  SplitMix64 gen(1005);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 2 + static_cast<int>(gen.below(9));
    const PauliString sigma = random_string(gen, n);
    const double theta = gen.uniform_symmetric() * 2.0;
    const GateCensus counts = census(exp_pauli_circuit({sigma, theta, Sign::Plus}));
    require(within_bounds(counts, gate_bounds(sigma)),
            "census exceeds bound for " + sigma.str());
  }
  // Diagonal strings, exhaustively: a single RZ and a short hub ladder.
  for (int n = 1; n <= 6; ++n) {
    const std::uint64_t dim = std::uint64_t{1} << n;
    for (std::uint64_t mask = 1; mask < dim; ++mask) {
      std::vector<PauliLetter> letters(static_cast<std::size_t>(n), PauliLetter::I);
      for (int j = 0; j < n; ++j) {
        if (mask & (std::uint64_t{1} << (n - 1 - j))) {
          letters[static_cast<std::size_t>(j)] = PauliLetter::Z;
        }
      }
      const GateCensus counts =
          census(exp_pauli_circuit({PauliString{letters}, 0.4, Sign::Plus}));
      require(counts.rz == 1, "diagonal string needs exactly one RZ");
      require(counts.cnot_target_n <= 2 * n - 2,
              "diagonal hub ladder too long at n=" + std::to_string(n));
      require(counts.rx + counts.ry + counts.h + counts.s + counts.sdag == 0,
              "diagonal circuit uses non-diagonal basis changes");
    }
  }
}

void criterion_star_connectivity() {
  SplitMix64 gen(1005);  // same stream as the bound criterion
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 2 + static_cast<int>(gen.below(9));
    const PauliString sigma = random_string(gen, n);
    const double theta = gen.uniform_symmetric() * 2.0;
    const Circuit c = exp_pauli_circuit({sigma, theta, Sign::Plus});
    const StarReport report = star_connectivity_report(c, n);
    require(report.pass, "CNOT off the hub for " + sigma.str());
  }
}

void criterion_commuting_models_exact() {
  const double kTol = 1e-10;
  const std::vector<int> samples = sample_boundaries(1000, 10);
  for (int n = 2; n <= 8; ++n) {
    for (int model = 0; model < 2; ++model) {
      const Hamiltonian h = model == 0 ? build_ising(n) : build_blkdg(n);
      const auto report = error_report(h, {1.0, 1000, 1, false}, samples);
      for (const ErrorSample& s : report) {
        require(s.err_circuit <= kTol,
                (model == 0 ? std::string("ising") : std::string("blkdg")) +
                    " n=" + std::to_string(n) + " err " + fmt(s.err_circuit) +
                    " at step " + std::to_string(s.step));
      }
    }
  }
}

void criterion_circuit_matches_numeric() {
  const double kTol = 1e-9;
  const std::vector<int> samples = sample_boundaries(1000, 10);
  for (int n : {2, 4, 6}) {
    for (int variant = 0; variant < 4; ++variant) {
      const bool td = variant % 2 == 1;
      const Hamiltonian h = variant < 2 ? build_heisenberg(n, 1.0, 7, td)
                                        : build_tfqim(n, 7, td);
      const auto report = error_report(h, {1.0, 1000, 1, false}, samples);
      for (const ErrorSample& s : report) {
        const double gap = std::abs(s.err_circuit - s.err_numeric);
        require(gap <= kTol, h.model + (td ? "_td" : "") +
                                 " n=" + std::to_string(n) + " gap " + fmt(gap) +
                                 " at step " + std::to_string(s.step));
      }
    }
  }
}

void criterion_order_scaling() {
  const Hamiltonian h = build_tfqim(4, 5, false);
  const std::vector<int> rs{8, 16, 32, 64};
  struct Window {
    int order;
    double lo, hi;
  };
  for (const Window w : {Window{1, -1.2, -0.8}, Window{2, -2.3, -1.7},
                         Window{4, -4.5, -3.5}}) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (int r : rs) {
      const auto report = error_report(h, {1.0, r, w.order, false}, {r});
      require(report.size() == 1, "expected a single sample");
      const double x = std::log(static_cast<double>(r));
      const double y = std::log(report[0].err_circuit);
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    const double m = static_cast<double>(rs.size());
    const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    require(slope >= w.lo && slope <= w.hi,
            "order " + std::to_string(w.order) + " slope " + fmt(slope) +
                " outside [" + fmt(w.lo) + ", " + fmt(w.hi) + "]");
  }
}

void criterion_constant_depth() {
  const Hamiltonian h = build_ising(8);
  const PhasedCircuit cd = constant_depth_circuit(h, 1.0);
  const int depth = census(cd.circuit).depth;
  require(depth < 10, "constant-depth circuit has depth " + std::to_string(depth));

  const PhasedCircuit stepped = trotter_circuit(h, {1.0, 1000, 1, false});
  const double gap =
      frobenius_distance(cd.phase * unitary_of(cd.circuit),
                         stepped.phase * unitary_of(stepped.circuit));
  require(gap <= 1e-10,
          "constant-depth and stepped circuits differ by " + fmt(gap));
}

void criterion_noise() {
  // Kraus completeness.
  SplitMix64 gen(1011);
  for (ChannelKind kind :
       {ChannelKind::BitFlip, ChannelKind::PhaseFlip,
        ChannelKind::AmplitudeDamping, ChannelKind::PhaseDamping}) {
    for (int i = 0; i < 100; ++i) {
      const double p = gen.uniform01();
      const auto kraus = channel_kraus(kind, p);
      const Eigen::Matrix2cd sum =
          kraus[0].adjoint() * kraus[0] + kraus[1].adjoint() * kraus[1];
      require((sum - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() <=
                  1e-12,
              "Kraus pair for " + to_string(kind) + " incomplete at p=" + fmt(p));
    }
  }

  // Trace preservation and noiseless fidelity.
  for (int trial = 0; trial < 5; ++trial) {
    const int n = 1 + static_cast<int>(gen.below(3));
    const Circuit c = random_circuit(gen, n, 30);
    const ComplexVector psi = random_state(gen, n);
    const ComplexMatrix rho0 = psi * psi.adjoint();
    const ComplexMatrix noisy =
        evolve_noisy(c, rho0, {gen.uniform01(), gen.uniform01(), true});
    require(std::abs(noisy.trace() - Complex{1.0, 0.0}) <= 1e-10,
            "noisy evolution does not preserve trace");
    const ComplexMatrix clean = evolve_noisy(c, rho0, {0.0, 0.0, true});
    const double f = fidelity(paulistar::apply(c, psi), clean);
    require(std::abs(f - 1.0) <= 1e-10,
            "zero-strength noise changed the state, fidelity " + fmt(f));
  }

  // Low fixed noise on a full simulation stays near unit fidelity.
  const Hamiltonian h = build_tfqim(4, 3, false);
  const SteppedCircuit stepped = trotter_stepped(h, {1.0, 1000, 1, false});
  const NoiseStrengths strengths{1e-8, 1e-8, true};
  for (const std::string input : {std::string("ones"), std::string("plus")}) {
    ComplexVector psi = input_state_vector(input, 4);
    ComplexMatrix rho = psi * psi.adjoint();
    require(std::abs(fidelity(psi, rho) - 1.0) <= 1e-12,
            "initial fidelity must be 1");
    std::size_t begin = 0;
    double after_first = 0.0;
    for (int k = 1; k <= 1000; ++k) {
      const std::size_t end =
          stepped.gates_after_step[static_cast<std::size_t>(k - 1)];
      Circuit step(4);
      step.gates.assign(
          stepped.circuit.gates.begin() + static_cast<std::ptrdiff_t>(begin),
          stepped.circuit.gates.begin() + static_cast<std::ptrdiff_t>(end));
      begin = end;
      rho = evolve_noisy(step, rho, strengths);
      psi = paulistar::apply(step, psi);
      if (k == 1) after_first = fidelity(psi, rho);
    }
    require(1.0 - after_first <= 1e-4,
            "one step at p=1e-8 lost too much fidelity on " + input + ": " +
                fmt(after_first));
    const double final_fidelity = fidelity(psi, rho);
    require(final_fidelity >= 0.99, "fidelity after 1000 steps on " + input +
                                        " is " + fmt(final_fidelity));
  }
}

}  // namespace

int main() {
  struct Criterion {
    const char* label;
    std::function<void()> run;
  };
  const std::vector<Criterion> criteria{
      {"permutation fixtures (transposition sets, cascades)",
       criterion_perm_fixtures},
      {"cascade unitaries equal their permutation matrices (n <= 6)",
       criterion_perm_unitaries},
      {"conjugation maps X/I strings to the lone hub X (n <= 6)",
       criterion_conjugation},
      {"compiled exponentials match the dense operator",
       criterion_exp_correctness},
      {"gate censuses stay within the published bounds",
       criterion_gate_bounds},
      {"compiled circuits respect star connectivity",
       criterion_star_connectivity},
      {"commuting models simulate exactly (n = 2..8, r = 1000)",
       criterion_commuting_models_exact},
      {"circuit and numeric formula errors coincide (n = 2, 4, 6)",
       criterion_circuit_matches_numeric},
      {"error scales as r^-order for orders 1, 2, 4",
       criterion_order_scaling},
      {"constant-depth compilation (depth < 10, matches r = 1000)",
       criterion_constant_depth},
      {"noise channels: completeness, trace, low-noise fidelity",
       criterion_noise},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    std::string message;
    bool ok = true;
    try {
      criteria[i].run();
    } catch (const std::exception& e) {
      ok = false;
      message = e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    std::printf("[%2zu] %-60s %s (%.1f s)\n", i + 1, criteria[i].label,
                ok ? "PASS" : "FAIL", seconds);
    if (!ok) {
      std::printf("     %s\n", message.c_str());
      ++failures;
    }
  }
  if (failures == 0) {
    std::printf("all %zu acceptance criteria passed\n", criteria.size());
  } else {
    std::printf("%d of %zu acceptance criteria FAILED\n", failures,
                criteria.size());
  }
  return failures == 0 ? 0 : 1;
}
