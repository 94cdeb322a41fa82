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

#include "paulistar/dense.hpp"

#include <stdexcept>

namespace paulistar {

namespace {
constexpr Complex kI{0.0, 1.0};
}

Eigen::Matrix2cd pauli_matrix(PauliLetter p) {
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
  switch (p) {
    case PauliLetter::I:
      m(0, 0) = 1.0;
      m(1, 1) = 1.0;
      break;
    case PauliLetter::X:
      m(0, 1) = 1.0;
      m(1, 0) = 1.0;
      break;
    case PauliLetter::Y:
      m(0, 1) = -kI;
      m(1, 0) = kI;
      break;
    case PauliLetter::Z:
      m(0, 0) = 1.0;
      m(1, 1) = -1.0;
      break;
  }
  return m;
}

ComplexMatrix dense(const PauliString& sigma) {
  const int n = sigma.size();
  if (n > 26) {
    throw std::invalid_argument("dense Pauli matrix limited to 26 qubits");
  }
  const std::uint64_t dim = std::uint64_t{1} << n;

  // Each letter matrix has one nonzero per row, so row i of the Kronecker
  // product has its nonzero at column i ^ flip_mask with value equal to the
  // product of the per-letter entries.
  std::uint64_t flip_mask = 0;
  for (int j = 1; j <= n; ++j) {
    PauliLetter p = sigma.letter(j);
    if (p == PauliLetter::X || p == PauliLetter::Y) {
      flip_mask |= std::uint64_t{1} << (n - j);
    }
  }

  ComplexMatrix m = ComplexMatrix::Zero(static_cast<Eigen::Index>(dim),
                                        static_cast<Eigen::Index>(dim));
  for (std::uint64_t i = 0; i < dim; ++i) {
    Complex v{1.0, 0.0};
    for (int j = 1; j <= n; ++j) {
      const bool bit = (i >> (n - j)) & 1;
      switch (sigma.letter(j)) {
        case PauliLetter::I:
        case PauliLetter::X:
          break;
        case PauliLetter::Y:
          // Y(0,1) = -i when the row bit is 0; Y(1,0) = i when it is 1.
          v *= bit ? kI : -kI;
          break;
        case PauliLetter::Z:
          if (bit) v = -v;
          break;
      }
    }
    m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i ^ flip_mask)) = v;
  }
  return m;
}

ComplexMatrix exp_hermitian(const ComplexMatrix& a, double theta) {
  if (a.rows() != a.cols()) {
    throw std::invalid_argument("exp_hermitian requires a square matrix");
  }
  if (!is_hermitian(a)) {
    throw std::invalid_argument("exp_hermitian requires a Hermitian matrix");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(a);
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("eigendecomposition failed");
  }
  const Eigen::VectorXd& lambda = es.eigenvalues();
  ComplexVector phases(lambda.size());
  for (Eigen::Index k = 0; k < lambda.size(); ++k) {
    phases(k) = std::exp(kI * theta * lambda(k));
  }
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("frobenius_distance requires equal shapes");
  }
  return (a - b).norm();
}

bool is_hermitian(const ComplexMatrix& a, double tol) {
  if (a.rows() != a.cols()) return false;
  return (a - a.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool is_unitary(const ComplexMatrix& a, double tol) {
  if (a.rows() != a.cols()) return false;
  ComplexMatrix g = a.adjoint() * a;
  g -= ComplexMatrix::Identity(a.rows(), a.cols());
  return g.cwiseAbs().maxCoeff() <= tol;
}

}  // namespace paulistar
