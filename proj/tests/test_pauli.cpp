// Copyright 2026 The colorsurg Authors
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


#include <gtest/gtest.h>

#include <random>

#include "colorsurg/pauli.hpp"
#include "dense_oracle.hpp"

using namespace colorsurg;

namespace {

PauliOperator random_pauli(std::mt19937_64 &g, size_t n) {
    PauliOperator p(n);
    for (size_t q = 0; q < n; q++) p.set(q, "IXYZ"[g() % 4]);
    p.set_negative(g() & 1);
    return p;
}

}  // namespace

TEST(Pauli, DenseAndSparseParsing) {
    auto p = PauliOperator::from_dense("-XIZY");
    EXPECT_EQ(p.size(), 4u);
    EXPECT_EQ(p.sign(), -1);
    EXPECT_EQ(p.at(0), 'X');
    EXPECT_EQ(p.at(1), 'I');
    EXPECT_EQ(p.at(3), 'Y');
    EXPECT_EQ(p.weight(), 3u);
    EXPECT_EQ(p.str(), "-X_ZY");
    EXPECT_EQ(PauliOperator::from_dense(p.str()), p);
    EXPECT_EQ(PauliOperator::from_sparse(4, "-X0 Z2 Y3"), p);
    EXPECT_THROW(PauliOperator::from_dense("XQ"), ValidationError);
}

TEST(Pauli, ProductMatchesMatrices) {
    std::mt19937_64 g(7);
    const oracle::cd minus_i(0, -1);
    for (int rep = 0; rep < 300; rep++) {
        size_t n = 1 + g() % 3;
        PauliOperator p = random_pauli(g, n), q = random_pauli(g, n);
        auto pq = oracle::mul(oracle::matrix(p), oracle::matrix(q));
        auto qp = oracle::mul(oracle::matrix(q), oracle::matrix(p));
        bool comm = oracle::close(pq, qp);
        EXPECT_EQ(commutes(p, q), comm);
        auto expected = comm ? pq : oracle::scale(pq, minus_i);
        EXPECT_TRUE(oracle::close(oracle::matrix(pauli_mul(p, q)), expected)) << p.str() << " * " << q.str();
    }
}

TEST(Pauli, ConventionOnSingleQubit) {
    auto X = PauliOperator::from_dense("X"), Z = PauliOperator::from_dense("Z");
    EXPECT_EQ(pauli_mul(X, Z).str(), "-Y");
    EXPECT_EQ(pauli_mul(Z, X).str(), "+Y");
}

TEST(Pauli, WideOperatorsCrossWordBoundaries) {
    std::mt19937_64 g(11);
    for (int rep = 0; rep < 50; rep++) {
        size_t n = 60 + g() % 140;
        PauliOperator p = random_pauli(g, n), q = random_pauli(g, n);
        // Commutation equals the parity of positions where both are
        // non-identity and differ.
        size_t clash = 0;
        for (size_t i = 0; i < n; i++) clash += p.at(i) != 'I' && q.at(i) != 'I' && p.at(i) != q.at(i);
        EXPECT_EQ(commutes(p, q), clash % 2 == 0);
        PauliOperator r = pauli_mul(p, q);
        for (size_t i = 0; i < n; i++) {
            EXPECT_EQ(r.x(i), p.x(i) != q.x(i));
            EXPECT_EQ(r.z(i), p.z(i) != q.z(i));
        }
    }
}

TEST(Pauli, LengthMismatchThrows) {
    EXPECT_THROW(pauli_mul(PauliOperator(3), PauliOperator(4)), ValidationError);
}

TEST(Pauli, PauliOnHelper) {
    auto p = pauli_on(5, {0, 4}, 'Z');
    EXPECT_EQ(p.str(), "+Z___Z");
    EXPECT_EQ(p.support(), (std::vector<size_t>{0, 4}));
}
