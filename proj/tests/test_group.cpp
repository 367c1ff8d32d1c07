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

#include "colorsurg/gf2.hpp"
#include "colorsurg/group.hpp"
#include "dense_oracle.hpp"

using namespace colorsurg;

TEST(Gf2, RankAndKernel) {
    std::mt19937_64 g(3);
    for (int rep = 0; rep < 50; rep++) {
        size_t nbits = 5 + g() % 70, rows = 1 + g() % 12;
        size_t words = (nbits + 63) / 64;
        std::vector<BitVec> m(rows, BitVec(words));
        for (auto &r : m)
            for (size_t i = 0; i < nbits; i++)
                if (g() % 3 == 0) bit_flip(r, i);
        if (rows > 2) {
            // Force a dependency.
            m[rows - 1] = m[0];
            bits_xor(m[rows - 1], m[1]);
        }
        size_t rank = gf2_rank(m, nbits);
        auto ker = gf2_left_kernel(m, nbits);
        EXPECT_EQ(rank + ker.size(), rows);
        for (const auto &c : ker) {
            BitVec acc(words);
            for (size_t i = 0; i < rows; i++)
                if (bit_get(c, i)) bits_xor(acc, m[i]);
            EXPECT_TRUE(bits_zero(acc));
        }
    }
}

TEST(Gf2, ReduceReturnsCertificate) {
    Gf2Basis b(8);
    BitVec v1{0b1011}, v2{0b0110}, v3{0b1111};
    EXPECT_TRUE(b.add(v1, 10));
    EXPECT_TRUE(b.add(v2, 20));
    EXPECT_FALSE(b.add(BitVec{0b1101}, 30));
    std::vector<size_t> combo;
    EXPECT_TRUE(bits_zero(b.reduce(BitVec{0b1101}, &combo)));
    std::sort(combo.begin(), combo.end());
    EXPECT_EQ(combo, (std::vector<size_t>{10, 20}));
    EXPECT_FALSE(b.contains(v3));
}

// Membership with signs against explicit enumeration of the group using
// dense matrices.
TEST(Group, MembershipMatchesEnumeration) {
    std::vector<PauliOperator> gens = {PauliOperator::from_dense("XXI"), PauliOperator::from_dense("-ZZI"),
                                       PauliOperator::from_dense("IIZ")};
    GeneratorSet s(gens);
    ASSERT_TRUE(s.is_abelian());
    EXPECT_EQ(s.rank(), 3u);
    std::vector<oracle::Mat> elems;
    for (unsigned mask = 0; mask < 8; mask++) {
        oracle::Mat m = oracle::matrix(PauliOperator(3));
        for (unsigned i = 0; i < 3; i++)
            if (mask >> i & 1) m = oracle::mul(m, oracle::matrix(gens[i]));
        elems.push_back(m);
    }
    for (unsigned code = 0; code < 64; code++) {
        for (bool neg : {false, true}) {
            PauliOperator p(3);
            for (size_t q = 0; q < 3; q++) p.set(q, "IXYZ"[(code >> (2 * q)) & 3]);
            p.set_negative(neg);
            auto mp = oracle::matrix(p);
            bool plus = false, minus = false;
            for (const auto &e : elems) {
                plus |= oracle::close(e, mp);
                minus |= oracle::close(e, oracle::scale(mp, -1));
            }
            Membership want = plus ? Membership::MemberWithSign
                              : minus ? Membership::MemberUpToSign
                                      : Membership::NotMember;
            EXPECT_EQ(s.in_group(p), want) << p.str();
            std::vector<size_t> idx;
            EXPECT_EQ(s.decompose(p, idx), plus || minus);
        }
    }
}

TEST(Group, NonAbelianDetected) {
    GeneratorSet s({PauliOperator::from_dense("XI"), PauliOperator::from_dense("ZI")});
    EXPECT_FALSE(s.is_abelian());
}
