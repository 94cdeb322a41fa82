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

#include <complex>

#include <Eigen/Dense>

#include "paulistar/pauli.hpp"

namespace paulistar {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

// Single-letter 2x2 matrix.
Eigen::Matrix2cd pauli_matrix(PauliLetter p);

// Kronecker product of the letter matrices, qubit 1 as the leftmost factor.
// The result is a 2^n x 2^n matrix with exactly one nonzero per row, each
// from {1, -1, i, -i}, so it is exact in floating point.
ComplexMatrix dense(const PauliString& sigma);

// exp(i * theta * a) for Hermitian a, via eigendecomposition.
// Throws std::invalid_argument if a is not square or not Hermitian.
ComplexMatrix exp_hermitian(const ComplexMatrix& a, double theta);

// Frobenius distance ||a - b||_F; throws on dimension mismatch.
double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b);

bool is_hermitian(const ComplexMatrix& a, double tol = 1e-12);
bool is_unitary(const ComplexMatrix& a, double tol = 1e-12);

}  // namespace paulistar
