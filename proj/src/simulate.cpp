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

#include "paulistar/simulate.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "paulistar/errors.hpp"

namespace paulistar {

namespace {

constexpr Complex kI{0.0, 1.0};

inline std::uint64_t qubit_mask(int n, int q) {
  return std::uint64_t{1} << (n - q);
}

// Applies [[a, b], [c, d]] to the amplitude pairs selected by `mask`.
void apply_2x2(const Eigen::Matrix2cd& m, std::uint64_t mask, ComplexVector& psi) {
  const std::uint64_t dim = static_cast<std::uint64_t>(psi.size());
  const Complex a = m(0, 0), b = m(0, 1), c = m(1, 0), d = m(1, 1);
  for (std::uint64_t i = 0; i < dim; ++i) {
    if (i & mask) continue;
    const std::uint64_t j = i | mask;
    const Complex lo = psi(static_cast<Eigen::Index>(i));
    const Complex hi = psi(static_cast<Eigen::Index>(j));
    psi(static_cast<Eigen::Index>(i)) = a * lo + b * hi;
    psi(static_cast<Eigen::Index>(j)) = c * lo + d * hi;
  }
}

}  // namespace

Eigen::Matrix2cd gate_matrix_1q(const Gate& g) {
  Eigen::Matrix2cd m;
  switch (g.kind) {
    case GateKind::RX:
      m << std::cos(g.angle), kI * std::sin(g.angle),
           kI * std::sin(g.angle), std::cos(g.angle);
      return m;
    case GateKind::RY:
      m << std::cos(g.angle), std::sin(g.angle),
           -std::sin(g.angle), std::cos(g.angle);
      return m;
    case GateKind::RZ:
      m << std::exp(kI * g.angle), Complex{0.0, 0.0},
           Complex{0.0, 0.0}, std::exp(-kI * g.angle);
      return m;
    case GateKind::H: {
      const double r = 1.0 / std::sqrt(2.0);
      m << r, r, r, -r;
      return m;
    }
    case GateKind::S:
      m << std::exp(kI * (std::numbers::pi / 4)), Complex{0.0, 0.0},
           Complex{0.0, 0.0}, std::exp(-kI * (std::numbers::pi / 4));
      return m;
    case GateKind::Sdag:
      m << std::exp(-kI * (std::numbers::pi / 4)), Complex{0.0, 0.0},
           Complex{0.0, 0.0}, std::exp(kI * (std::numbers::pi / 4));
      return m;
    case GateKind::CNOT:
      break;
  }
  throw std::invalid_argument("CNOT has no single-qubit matrix");
}

void apply_gate(const Gate& g, int n, ComplexVector& psi) {
  if (g.kind == GateKind::CNOT) {
    const std::uint64_t cm = qubit_mask(n, g.control);
    const std::uint64_t tm = qubit_mask(n, g.target);
    const std::uint64_t dim = static_cast<std::uint64_t>(psi.size());
    for (std::uint64_t i = 0; i < dim; ++i) {
      if ((i & cm) && !(i & tm)) {
        psi.row(static_cast<Eigen::Index>(i))
            .swap(psi.row(static_cast<Eigen::Index>(i | tm)));
      }
    }
    return;
  }
  apply_2x2(gate_matrix_1q(g), qubit_mask(n, g.target), psi);
}

ComplexVector apply(const Circuit& c, const ComplexVector& psi) {
  if (c.n > kMaxStatevectorQubits) {
    throw InfeasibleError("statevector application limited to " +
                          std::to_string(kMaxStatevectorQubits) + " qubits");
  }
  if (psi.size() != static_cast<Eigen::Index>(std::uint64_t{1} << c.n)) {
    throw std::invalid_argument("state dimension does not match qubit count");
  }
  ComplexVector out = psi;
  for (const Gate& g : c.gates) apply_gate(g, c.n, out);
  return out;
}

void apply_gate_to_matrix(const Gate& g, int n, ComplexMatrix& u) {
  // Each column of u is a state; gates act column-wise.
  if (g.kind == GateKind::CNOT) {
    const std::uint64_t cm = qubit_mask(n, g.control);
    const std::uint64_t tm = qubit_mask(n, g.target);
    const std::uint64_t dim = static_cast<std::uint64_t>(u.rows());
    for (std::uint64_t i = 0; i < dim; ++i) {
      if ((i & cm) && !(i & tm)) {
        u.row(static_cast<Eigen::Index>(i))
            .swap(u.row(static_cast<Eigen::Index>(i | tm)));
      }
    }
    return;
  }
  const Eigen::Matrix2cd m = gate_matrix_1q(g);
  const std::uint64_t mask = qubit_mask(n, g.target);
  const std::uint64_t dim = static_cast<std::uint64_t>(u.rows());
  const Complex a = m(0, 0), b = m(0, 1), c = m(1, 0), d = m(1, 1);
  for (Eigen::Index col = 0; col < u.cols(); ++col) {
    for (std::uint64_t i = 0; i < dim; ++i) {
      if (i & mask) continue;
      const std::uint64_t j = i | mask;
      const Complex lo = u(static_cast<Eigen::Index>(i), col);
      const Complex hi = u(static_cast<Eigen::Index>(j), col);
      u(static_cast<Eigen::Index>(i), col) = a * lo + b * hi;
      u(static_cast<Eigen::Index>(j), col) = c * lo + d * hi;
    }
  }
}

ComplexMatrix unitary_of(const Circuit& c) {
  if (c.n > kMaxDenseQubits) {
    throw InfeasibleError("dense circuit evaluation limited to " +
                          std::to_string(kMaxDenseQubits) + " qubits");
  }
  const Eigen::Index dim = Eigen::Index{1} << c.n;
  ComplexMatrix u = ComplexMatrix::Identity(dim, dim);
  for (const Gate& g : c.gates) apply_gate_to_matrix(g, c.n, u);
  return u;
}

ComplexVector basis_state(int n, std::uint64_t b) {
  if (n < 1 || n > kMaxStatevectorQubits) {
    throw std::invalid_argument("qubit count out of range");
  }
  const std::uint64_t dim = std::uint64_t{1} << n;
  if (b >= dim) throw std::invalid_argument("basis index out of range");
  ComplexVector psi = ComplexVector::Zero(static_cast<Eigen::Index>(dim));
  psi(static_cast<Eigen::Index>(b)) = 1.0;
  return psi;
}

ComplexVector plus_state(int n) {
  if (n < 1 || n > kMaxStatevectorQubits) {
    throw std::invalid_argument("qubit count out of range");
  }
  const std::uint64_t dim = std::uint64_t{1} << n;
  const double amp = std::pow(2.0, -0.5 * n);
  return ComplexVector::Constant(static_cast<Eigen::Index>(dim), Complex{amp, 0.0});
}

}  // namespace paulistar
