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

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <doctest.h>

#include "paulistar/dense.hpp"
#include "paulistar/pauli.hpp"
#include "test_helpers.hpp"

using namespace paulistar;
using paulistar::testing::kron_dense;
using paulistar::testing::max_abs_diff;
using paulistar::testing::random_string;

TEST_SUITE_BEGIN("pauli");

TEST_CASE("parse and print round-trip") {
  for (const char* word : {"I", "X", "XZ", "XXII", "IZYX", "ZZZZZZ"}) {
    CHECK(PauliString::parse(word).str() == word);
  }
  CHECK(PauliString::parse("XXII").size() == 4);
  CHECK(PauliString::parse("XZ").letter(1) == PauliLetter::X);
  CHECK(PauliString::parse("XZ").letter(2) == PauliLetter::Z);
}

TEST_CASE("parse rejects malformed words") {
  CHECK_THROWS_AS(PauliString::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(PauliString::parse("AB"), std::invalid_argument);
  CHECK_THROWS_AS(PauliString::parse("XxZ"), std::invalid_argument);
  CHECK_THROWS_AS(PauliString::parse("X Z"), std::invalid_argument);
}

TEST_CASE("predicates and counts") {
  const PauliString s = PauliString::parse("IXYZ");
  CHECK(s.count(PauliLetter::I) == 1);
  CHECK(s.count(PauliLetter::X) == 1);
  CHECK(s.count(PauliLetter::Y) == 1);
  CHECK(s.count(PauliLetter::Z) == 1);
  CHECK_FALSE(s.is_identity());
  CHECK_FALSE(s.is_ix_type());
  CHECK_FALSE(s.is_diagonal());
  CHECK(PauliString::parse("III").is_identity());
  CHECK(PauliString::parse("IXI").is_ix_type());
  CHECK(PauliString::parse("ZIZ").is_diagonal());
  CHECK(PauliString::parse("III").is_ix_type());
  CHECK(PauliString::parse("III").is_diagonal());
}

TEST_CASE("IX index fixtures") {
  // Qubit 1 is the most significant position.
  CHECK(PauliString::parse("IIIX").ix_index() == 1);
  CHECK(PauliString::parse("XXII").ix_index() == 12);
  CHECK(PauliString::parse("XI").ix_index() == 2);
  CHECK(PauliString::parse("II").ix_index() == 0);
  CHECK(PauliString::parse("X").ix_index() == 1);
  CHECK_THROWS_AS(PauliString::parse("XY").ix_index(), std::invalid_argument);
  CHECK_THROWS_AS(PauliString::parse("ZI").ix_index(), std::invalid_argument);
}

TEST_CASE("IX index round-trips exhaustively") {
  for (int n = 1; n <= 8; ++n) {
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
      const PauliString s = PauliString::from_ix_index(n, b);
      CHECK(s.size() == n);
      CHECK(s.is_ix_type());
      CHECK(s.ix_index() == b);
    }
  }
  CHECK_THROWS_AS(PauliString::from_ix_index(3, 8), std::invalid_argument);
}

TEST_CASE("letter matrices") {
  const Eigen::Matrix2cd x = pauli_matrix(PauliLetter::X);
  CHECK(x(0, 1) == Complex{1.0, 0.0});
  CHECK(x(1, 0) == Complex{1.0, 0.0});
  CHECK(x(0, 0) == Complex{0.0, 0.0});
  const Eigen::Matrix2cd y = pauli_matrix(PauliLetter::Y);
  CHECK(y(0, 1) == Complex{0.0, -1.0});
  CHECK(y(1, 0) == Complex{0.0, 1.0});
  const Eigen::Matrix2cd z = pauli_matrix(PauliLetter::Z);
  CHECK(z(0, 0) == Complex{1.0, 0.0});
  CHECK(z(1, 1) == Complex{-1.0, 0.0});
}

TEST_CASE("dense equals the naive Kronecker product") {
  SplitMix64 gen(11);
  for (int n = 1; n <= 3; ++n) {
    for (std::uint64_t code = 0; code < std::uint64_t(std::pow(4, n)); ++code) {
      std::vector<PauliLetter> letters;
      std::uint64_t c = code;
      for (int j = 0; j < n; ++j) {
        letters.push_back(static_cast<PauliLetter>(c % 4));
        c /= 4;
      }
      const PauliString s(letters);
      CHECK(max_abs_diff(dense(s), kron_dense(s)) == 0.0);
    }
  }
  for (int trial = 0; trial < 25; ++trial) {
    const PauliString s = random_string(gen, 5);
    CHECK(max_abs_diff(dense(s), kron_dense(s)) == 0.0);
  }
}

TEST_CASE("dense strings are involutions") {
  SplitMix64 gen(12);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + static_cast<int>(gen.below(6));
    const ComplexMatrix m = dense(random_string(gen, n));
    const Eigen::Index dim = m.rows();
    CHECK(max_abs_diff(m * m, ComplexMatrix::Identity(dim, dim)) == 0.0);
    CHECK(is_hermitian(m));
    CHECK(is_unitary(m));
  }
}

TEST_CASE("exp of X is the full-angle rotation matrix") {
  const double theta = 0.31;
  const ComplexMatrix u = exp_hermitian(dense(PauliString::parse("X")), theta);
  CHECK(std::abs(u(0, 0) - Complex{std::cos(theta), 0.0}) < 1e-14);
  CHECK(std::abs(u(0, 1) - Complex{0.0, std::sin(theta)}) < 1e-14);
  CHECK(std::abs(u(1, 0) - Complex{0.0, std::sin(theta)}) < 1e-14);
  CHECK(std::abs(u(1, 1) - Complex{std::cos(theta), 0.0}) < 1e-14);
}

TEST_CASE("exp fixtures") {
  const ComplexMatrix z = dense(PauliString::parse("Z"));
  CHECK(max_abs_diff(exp_hermitian(z, 0.0), ComplexMatrix::Identity(2, 2)) == 0.0);
  // exp(i pi Z) = -I.
  CHECK(max_abs_diff(exp_hermitian(z, std::numbers::pi),
                     -ComplexMatrix::Identity(2, 2)) < 1e-14);
}

TEST_CASE("exp on a Pauli string equals cos + i sin form") {
  SplitMix64 gen(13);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + static_cast<int>(gen.below(4));
    const PauliString s = random_string(gen, n);
    const double theta = 3.0 * gen.uniform_symmetric();
    const ComplexMatrix m = dense(s);
    const Eigen::Index dim = m.rows();
    const ComplexMatrix expected =
        std::cos(theta) * ComplexMatrix::Identity(dim, dim) +
        Complex{0.0, 1.0} * std::sin(theta) * m;
    CHECK(max_abs_diff(exp_hermitian(m, theta), expected) < 1e-13);
  }
}

TEST_CASE("exp is unitary with exp(-theta) as inverse") {
  SplitMix64 gen(14);
  for (int trial = 0; trial < 20; ++trial) {
    const PauliString s = random_string(gen, 3);
    const double theta = 2.0 * gen.uniform_symmetric();
    const ComplexMatrix u = exp_hermitian(dense(s), theta);
    const ComplexMatrix v = exp_hermitian(dense(s), -theta);
    CHECK(is_unitary(u, 1e-13));
    CHECK(max_abs_diff(u * v, ComplexMatrix::Identity(u.rows(), u.cols())) < 1e-13);
  }
}

TEST_CASE("exp rejects non-Hermitian and non-square input") {
  ComplexMatrix bad(2, 2);
  bad << Complex{0, 0}, Complex{1, 0}, Complex{0, 0}, Complex{0, 0};
  CHECK_THROWS_AS(exp_hermitian(bad, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(exp_hermitian(ComplexMatrix::Zero(2, 3), 1.0),
                  std::invalid_argument);
}

TEST_CASE("frobenius distance") {
  const ComplexMatrix i2 = ComplexMatrix::Identity(2, 2);
  const ComplexMatrix x = dense(PauliString::parse("X"));
  CHECK(frobenius_distance(x, x) == 0.0);
  CHECK(frobenius_distance(i2, x) == 2.0);

  // Entrywise expansion for a small rotation away from identity.
  const double theta = 0.001;
  const double expected = std::sqrt(2.0 * std::pow(1.0 - std::cos(theta), 2) +
                                    2.0 * std::pow(std::sin(theta), 2));
  CHECK(std::abs(frobenius_distance(i2, exp_hermitian(x, theta)) - expected) <
        1e-15);

  CHECK_THROWS_AS(frobenius_distance(i2, ComplexMatrix::Identity(4, 4)),
                  std::invalid_argument);
}

TEST_SUITE_END();
