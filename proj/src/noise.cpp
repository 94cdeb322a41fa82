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

#include "paulistar/noise.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "paulistar/errors.hpp"
#include "paulistar/rng.hpp"
#include "paulistar/simulate.hpp"

namespace paulistar {

namespace {

inline std::uint64_t qubit_mask(int n, int q) {
  return std::uint64_t{1} << (n - q);
}

// rho <- (M_q) rho, M acting on one qubit: pair-transform the rows.
void left_multiply_1q(const Eigen::Matrix2cd& m, std::uint64_t mask,
                      ComplexMatrix& rho) {
  const std::uint64_t dim = static_cast<std::uint64_t>(rho.rows());
  const Complex a = m(0, 0), b = m(0, 1), c = m(1, 0), d = m(1, 1);
  for (Eigen::Index col = 0; col < rho.cols(); ++col) {
    for (std::uint64_t i = 0; i < dim; ++i) {
      if (i & mask) continue;
      const std::uint64_t j = i | mask;
      const Complex lo = rho(static_cast<Eigen::Index>(i), col);
      const Complex hi = rho(static_cast<Eigen::Index>(j), col);
      rho(static_cast<Eigen::Index>(i), col) = a * lo + b * hi;
      rho(static_cast<Eigen::Index>(j), col) = c * lo + d * hi;
    }
  }
}

// rho <- rho (M_q)^dag: pair-transform the columns with conj(M).
void right_multiply_dagger_1q(const Eigen::Matrix2cd& m, std::uint64_t mask,
                              ComplexMatrix& rho) {
  const std::uint64_t dim = static_cast<std::uint64_t>(rho.cols());
  const Complex a = std::conj(m(0, 0)), b = std::conj(m(0, 1));
  const Complex c = std::conj(m(1, 0)), d = std::conj(m(1, 1));
  for (std::uint64_t i = 0; i < dim; ++i) {
    if (i & mask) continue;
    const std::uint64_t j = i | mask;
    for (Eigen::Index row = 0; row < rho.rows(); ++row) {
      const Complex lo = rho(row, static_cast<Eigen::Index>(i));
      const Complex hi = rho(row, static_cast<Eigen::Index>(j));
      rho(row, static_cast<Eigen::Index>(i)) = a * lo + b * hi;
      rho(row, static_cast<Eigen::Index>(j)) = c * lo + d * hi;
    }
  }
}

void conjugate_gate(const Gate& g, int n, ComplexMatrix& rho) {
  if (g.kind == GateKind::CNOT) {
    const std::uint64_t cm = qubit_mask(n, g.control);
    const std::uint64_t tm = qubit_mask(n, g.target);
    const std::uint64_t dim = static_cast<std::uint64_t>(rho.rows());
    for (std::uint64_t i = 0; i < dim; ++i) {
      if ((i & cm) && !(i & tm)) {
        rho.row(static_cast<Eigen::Index>(i))
            .swap(rho.row(static_cast<Eigen::Index>(i | tm)));
      }
    }
    for (std::uint64_t i = 0; i < dim; ++i) {
      if ((i & cm) && !(i & tm)) {
        rho.col(static_cast<Eigen::Index>(i))
            .swap(rho.col(static_cast<Eigen::Index>(i | tm)));
      }
    }
    return;
  }
  const Eigen::Matrix2cd m = gate_matrix_1q(g);
  const std::uint64_t mask = qubit_mask(n, g.target);
  left_multiply_1q(m, mask, rho);
  right_multiply_dagger_1q(m, mask, rho);
}

}  // namespace

std::string to_string(ChannelKind k) {
  switch (k) {
    case ChannelKind::BitFlip: return "bit_flip";
    case ChannelKind::PhaseFlip: return "phase_flip";
    case ChannelKind::AmplitudeDamping: return "amplitude_damping";
    case ChannelKind::PhaseDamping: return "phase_damping";
  }
  throw std::logic_error("corrupt ChannelKind");
}

std::array<Eigen::Matrix2cd, 2> channel_kraus(ChannelKind kind, double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("channel strength must lie in [0, 1]");
  }
  const double keep = std::sqrt(1.0 - p);
  const double flip = std::sqrt(p);
  Eigen::Matrix2cd k0 = Eigen::Matrix2cd::Zero();
  Eigen::Matrix2cd k1 = Eigen::Matrix2cd::Zero();
  switch (kind) {
    case ChannelKind::BitFlip:
      k0(0, 0) = keep;
      k0(1, 1) = keep;
      k1(0, 1) = flip;
      k1(1, 0) = flip;
      break;
    case ChannelKind::PhaseFlip:
      k0(0, 0) = keep;
      k0(1, 1) = keep;
      k1(0, 0) = flip;
      k1(1, 1) = -flip;
      break;
    case ChannelKind::AmplitudeDamping:
      k0(0, 0) = 1.0;
      k0(1, 1) = keep;
      k1(0, 1) = flip;
      break;
    case ChannelKind::PhaseDamping:
      k0(0, 0) = 1.0;
      k0(1, 1) = keep;
      k1(1, 1) = flip;
      break;
  }
  return {k0, k1};
}

void apply_channel(ChannelKind kind, double p, int n, int qubit,
                   ComplexMatrix& rho) {
  if (qubit < 1 || qubit > n) throw std::invalid_argument("qubit out of range");
  const auto kraus = channel_kraus(kind, p);
  const std::uint64_t mask = qubit_mask(n, qubit);
  ComplexMatrix branch = rho;
  left_multiply_1q(kraus[0], mask, rho);
  right_multiply_dagger_1q(kraus[0], mask, rho);
  left_multiply_1q(kraus[1], mask, branch);
  right_multiply_dagger_1q(kraus[1], mask, branch);
  rho += branch;
}

NoiseClass noise_class_from_string(const std::string& s) {
  if (s == "low") return NoiseClass::Low;
  if (s == "medium") return NoiseClass::Medium;
  if (s == "high") return NoiseClass::High;
  throw std::invalid_argument("unknown noise class \"" + s + "\"");
}

std::string to_string(NoiseClass c) {
  switch (c) {
    case NoiseClass::Low: return "low";
    case NoiseClass::Medium: return "medium";
    case NoiseClass::High: return "high";
  }
  throw std::logic_error("corrupt NoiseClass");
}

NoiseClass classify_strength(double p) {
  if (p > 0.0 && p <= 1e-3) return NoiseClass::Low;
  if (p > 1e-3 && p <= 1e-1) return NoiseClass::Medium;
  if (p > 1e-1 && p <= 1.0) return NoiseClass::High;
  throw std::invalid_argument("strength outside (0, 1]");
}

NoiseLevel NoiseLevel::fixed_value(double v) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw std::invalid_argument("noise strength must lie in [0, 1]");
  }
  NoiseLevel level;
  level.fixed = true;
  level.value = v;
  return level;
}

NoiseLevel NoiseLevel::from_class(NoiseClass c) {
  NoiseLevel level;
  level.fixed = false;
  level.cls = c;
  return level;
}

std::string NoiseLevel::label() const {
  return fixed ? "fixed" : to_string(cls);
}

double resolve_strength(const NoiseLevel& level, std::uint64_t seed,
                        std::uint64_t stream) {
  if (level.fixed) return level.value;
  double lo = 0.0, hi = 0.0;
  switch (level.cls) {
    case NoiseClass::Low: lo = 0.0; hi = 1e-3; break;
    case NoiseClass::Medium: lo = 1e-3; hi = 1e-1; break;
    case NoiseClass::High: lo = 1e-1; hi = 1.0; break;
  }
  SplitMix64 gen(seed ^ (0x9e3779b97f4a7c15ULL * (stream + 1)));
  return lo + (hi - lo) * gen.uniform01_open_low();
}

ComplexMatrix evolve_noisy(const Circuit& c, const ComplexMatrix& rho0,
                           const NoiseStrengths& noise) {
  if (c.n > kMaxDensityQubits) {
    throw InfeasibleError("density evolution limited to " +
                          std::to_string(kMaxDensityQubits) + " qubits");
  }
  const Eigen::Index dim = Eigen::Index{1} << c.n;
  if (rho0.rows() != dim || rho0.cols() != dim) {
    throw std::invalid_argument("density matrix does not match qubit count");
  }
  if (!(noise.gate_p >= 0.0 && noise.gate_p <= 1.0) ||
      !(noise.idle_p >= 0.0 && noise.idle_p <= 1.0)) {
    throw std::invalid_argument("noise strengths must lie in [0, 1]");
  }

  ComplexMatrix rho = rho0;
  const std::vector<std::size_t> layer_of = layer_assignment(c);
  std::vector<bool> touched(static_cast<std::size_t>(c.n) + 1, false);

  auto finish_layer = [&]() {
    for (int q = 1; q <= c.n; ++q) {
      if (touched[static_cast<std::size_t>(q)]) continue;
      apply_channel(ChannelKind::AmplitudeDamping, noise.idle_p, c.n, q, rho);
      apply_channel(ChannelKind::PhaseDamping, noise.idle_p, c.n, q, rho);
    }
    std::fill(touched.begin(), touched.end(), false);
  };

  for (std::size_t i = 0; i < c.gates.size(); ++i) {
    if (i > 0 && layer_of[i] != layer_of[i - 1]) finish_layer();
    const Gate& g = c.gates[i];
    conjugate_gate(g, c.n, rho);
    std::vector<int> hit{g.target};
    if (g.kind == GateKind::CNOT && noise.cnot_noise_on_both) {
      hit.push_back(g.control);
    }
    for (int q : hit) {
      apply_channel(ChannelKind::BitFlip, noise.gate_p, c.n, q, rho);
      apply_channel(ChannelKind::PhaseFlip, noise.gate_p, c.n, q, rho);
    }
    touched[static_cast<std::size_t>(g.target)] = true;
    if (g.kind == GateKind::CNOT) {
      touched[static_cast<std::size_t>(g.control)] = true;
    }
  }
  if (!c.gates.empty()) finish_layer();
  return rho;
}

double fidelity(const ComplexVector& psi, const ComplexMatrix& rho) {
  if (rho.rows() != psi.size() || rho.cols() != psi.size()) {
    throw std::invalid_argument("state and density dimensions differ");
  }
  const Complex overlap = (psi.adjoint() * rho * psi)(0, 0);
  return overlap.real();
}

}  // namespace paulistar
