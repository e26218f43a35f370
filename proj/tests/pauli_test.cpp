// Copyright 2026 The stabgs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "stabgs/pauli.hpp"

#include <random>

#include <gtest/gtest.h>

using namespace stabgs;
using C = std::complex<double>;

namespace {

PauliString random_pauli(std::mt19937_64& rng, int n) {
    const uint64_t mask = (uint64_t{1} << n) - 1;
    return PauliString::from_bits(n, rng() & mask, rng() & mask, static_cast<int>(rng() % 4));
}

}  // namespace

TEST(Pauli, XTimesYIsIZ) {
    PauliString r = PauliString::parse("X1") * PauliString::parse("Y1");
    EXPECT_EQ(r, PauliString::parse("+iZ1"));
}

TEST(Pauli, InvolutionGivesIdentity) {
    PauliString p = PauliString::parse("X1X2");
    PauliString r = p * p;
    EXPECT_TRUE(r.is_identity());
    EXPECT_EQ(r.phase_exponent(), 0);
}

TEST(Pauli, ThreeQubitProductMatchesDense) {
    PauliString a = PauliString::parse("Z1Z2Z3");
    PauliString b = PauliString::parse("X1X3", 3);
    Eigen::MatrixXcd expect = dense_matrix(a) * dense_matrix(b);
    EXPECT_EQ((dense_matrix(a * b) - expect).cwiseAbs().maxCoeff(), 0.0);
    // Z1X1 = iY1 and Z3X3 = iY3, so the product is -Y1 Z2 Y3.
    EXPECT_EQ(a * b, PauliString::parse("-Y1Z2Y3"));
}

TEST(Pauli, Commutation) {
    EXPECT_FALSE(commutes(PauliString::parse("X1"), PauliString::parse("Z1")));
    EXPECT_TRUE(commutes(PauliString::parse("X1X2"), PauliString::parse("Z1Z2")));
    EXPECT_TRUE(commutes(PauliString::parse("X1X3"), PauliString::parse("X2X3")));
}

TEST(Pauli, DenseMatrices) {
    EXPECT_TRUE(dense_matrix(PauliString(2)).isApprox(Eigen::MatrixXcd::Identity(4, 4)));
    Eigen::MatrixXcd y(2, 2);
    y << 0, C(0, -1), C(0, 1), 0;
    EXPECT_EQ(dense_matrix(PauliString::parse("Y1")), y);
    Eigen::Matrix2cd x, z;
    x << 0, 1, 1, 0;
    z << 1, 0, 0, -1;
    Eigen::MatrixXcd xz(4, 4);
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) xz(r, c) = x(r / 2, c / 2) * z(r % 2, c % 2);
    EXPECT_EQ(dense_matrix(PauliString::parse("X1Z2")), xz);
}

TEST(Pauli, DenseGuard) { EXPECT_THROW(dense_matrix(PauliString(15)), ResourceError); }

TEST(Pauli, SizeMismatch) {
    EXPECT_THROW(PauliString(2) * PauliString(3), std::invalid_argument);
    EXPECT_THROW(commutes(PauliString(2), PauliString(3)), std::invalid_argument);
}

TEST(Pauli, RandomProductsAndCommutationAgreeWithDense) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 400; ++trial) {
        const int n = 1 + trial % 4;
        PauliString p = random_pauli(rng, n), q = random_pauli(rng, n);
        Eigen::MatrixXcd dp = dense_matrix(p), dq = dense_matrix(q);
        EXPECT_EQ((dense_matrix(p * q) - dp * dq).cwiseAbs().maxCoeff(), 0.0);
        const bool dense_commute = (dp * dq - dq * dp).cwiseAbs().maxCoeff() == 0.0;
        EXPECT_EQ(commutes(p, q), dense_commute);
    }
}

TEST(Pauli, GroupLaws) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + trial % 6;
        PauliString a = random_pauli(rng, n), b = random_pauli(rng, n), c = random_pauli(rng, n);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * PauliString(n), a);
        PauliString sq = a * a;
        EXPECT_TRUE(sq.is_identity());
        if (a.is_hermitian()) EXPECT_EQ(sq.phase_exponent(), 0);
    }
}

TEST(Pauli, HermitianStringsAreHermitianMatrices) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        PauliString p = random_pauli(rng, 3);
        Eigen::MatrixXcd m = dense_matrix(p);
        EXPECT_EQ(p.is_hermitian(), (m - m.adjoint()).cwiseAbs().maxCoeff() == 0.0);
    }
}

TEST(Pauli, TextRoundTrip) {
    for (const char* s : {"+X1X2", "-Z1Z2Z3", "+iY2", "-iX1", "+I"}) {
        PauliString p = PauliString::parse(s, 3);
        EXPECT_EQ(PauliString::parse(p.str(), 3), p) << s;
    }
    EXPECT_EQ(PauliString::parse("-Z1Z2Z3").str(), "-Z1Z2Z3");
    EXPECT_EQ(PauliString::parse("+iY2").str(), "+iY2");
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        PauliString p = random_pauli(rng, 5);
        EXPECT_EQ(PauliString::parse(p.str(), 5), p);
    }
    EXPECT_THROW(PauliString::parse("X0", 2), std::invalid_argument);
    EXPECT_THROW(PauliString::parse("Q1", 2), std::invalid_argument);
}
