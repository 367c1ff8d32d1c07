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

#include "colorsurg/tableau.hpp"
#include "dense_oracle.hpp"

using namespace colorsurg;

namespace {

PauliOperator random_pauli(std::mt19937_64 &g, size_t n) {
    PauliOperator p(n);
    for (size_t q = 0; q < n; q++) p.set(q, "IXYZ"[g() % 4]);
    p.set_negative(g() & 1);
    return p;
}

class FixedBits : public BitSource {
   public:
    explicit FixedBits(bool b) : b_(b) {}
    bool next_bit() override {
        return b_;
    }

   private:
    bool b_;
};

}  // namespace

TEST(Tableau, StartsInAllZeros) {
    StabilizerTableau t(3);
    EXPECT_EQ(t.expectation(PauliOperator::from_dense("ZII")), Expectation::Plus);
    EXPECT_EQ(t.expectation(PauliOperator::from_dense("-IZI")), Expectation::Minus);
    EXPECT_EQ(t.expectation(PauliOperator::from_dense("XII")), Expectation::Undetermined);
    EXPECT_TRUE(t.check_invariants().empty());
}

// Random Pauli measurement sequences against a dense state vector.
TEST(Tableau, MeasurementsMatchStateVector) {
    std::mt19937_64 g(99);
    for (int run = 0; run < 30; run++) {
        size_t n = 1 + run % 4;
        StabilizerTableau t(n);
        oracle::Vec psi(size_t{1} << n);
        psi[0] = 1;
        SeededBits bits(run);
        for (int step = 0; step < 25; step++) {
            PauliOperator p = random_pauli(g, n);
            if (p.is_identity_up_to_sign()) {
                continue;
            }
            auto m = oracle::matrix(p);
            double ev = oracle::expectation(m, psi);
            Expectation e = t.expectation(p);
            if (ev > 1 - 1e-9) {
                EXPECT_EQ(e, Expectation::Plus);
            } else if (ev < -1 + 1e-9) {
                EXPECT_EQ(e, Expectation::Minus);
            } else {
                EXPECT_NEAR(ev, 0.0, 1e-9);
                EXPECT_EQ(e, Expectation::Undetermined);
            }
            MeasureResult r = t.measure(p, bits);
            EXPECT_EQ(r.deterministic, std::abs(ev) > 1 - 1e-9);
            double prob = oracle::project(m, psi, r.outcome);
            EXPECT_GT(prob, 0.49) << "outcome " << r.outcome << " had probability " << prob;
            ASSERT_TRUE(t.check_invariants().empty());
        }
    }
}

TEST(Tableau, ForcedMeasurementAndPauliFrame) {
    StabilizerTableau t(2);
    auto xx = PauliOperator::from_dense("XX");
    auto r = t.measure_forced(xx, -1);
    EXPECT_FALSE(r.deterministic);
    EXPECT_EQ(r.outcome, -1);
    EXPECT_EQ(t.expectation(xx), Expectation::Minus);
    t.apply_pauli(PauliOperator::from_dense("ZI"));
    EXPECT_EQ(t.expectation(xx), Expectation::Plus);
    EXPECT_EQ(t.expectation(PauliOperator::from_dense("ZZ")), Expectation::Plus);
    auto again = t.measure_forced(xx, -1);
    EXPECT_TRUE(again.deterministic);
    EXPECT_EQ(again.outcome, 1);
}

TEST(Tableau, BitSourceDecidesRandomOutcomes) {
    for (bool b : {false, true}) {
        StabilizerTableau t(1);
        FixedBits bits(b);
        auto r = t.measure(PauliOperator::from_dense("X"), bits);
        EXPECT_FALSE(r.deterministic);
        EXPECT_EQ(t.expectation(PauliOperator::from_dense("X")), r.outcome == 1 ? Expectation::Plus : Expectation::Minus);
    }
}

TEST(Tableau, SeededBitsAreReproducible) {
    SeededBits a(5), b(5);
    for (int i = 0; i < 200; i++) EXPECT_EQ(a.next_bit(), b.next_bit());
}
