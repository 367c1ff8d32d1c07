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

#include "colorsurg/kernels.hpp"

using namespace colorsurg;

namespace {

std::vector<uint64_t> random_words(std::mt19937_64 &g, size_t n) {
    std::vector<uint64_t> v(n);
    for (auto &w : v) w = g();
    return v;
}

}  // namespace

TEST(Kernels, ScalarIsAlwaysAvailable) {
    auto all = available_kernels();
    ASSERT_FALSE(all.empty());
    EXPECT_EQ(all.front(), &scalar_kernels());
    EXPECT_NE(active_kernels().name, nullptr);
}

TEST(Kernels, EveryVariantMatchesScalar) {
    const Kernels &ref = scalar_kernels();
    std::mt19937_64 g(2024);
    for (const Kernels *k : available_kernels()) {
        SCOPED_TRACE(k->name);
        for (size_t n = 1; n <= 11; n++) {
            for (int rep = 0; rep < 40; rep++) {
                auto x1 = random_words(g, n), z1 = random_words(g, n);
                auto x2 = random_words(g, n), z2 = random_words(g, n);
                if (rep % 4 == 0) {
                    // Sparse rows exercise the carry-free paths.
                    for (size_t i = 0; i < n; i++) {
                        x1[i] &= g() & g();
                        z2[i] &= g() & g();
                    }
                }
                EXPECT_EQ(k->anticommutes(x1.data(), z1.data(), x2.data(), z2.data(), n),
                          ref.anticommutes(x1.data(), z1.data(), x2.data(), z2.data(), n));
                EXPECT_EQ(k->popcount(x1.data(), n), ref.popcount(x1.data(), n));

                auto a = x1, b = x1;
                k->xor_words(a.data(), x2.data(), n);
                ref.xor_words(b.data(), x2.data(), n);
                EXPECT_EQ(a, b);

                auto xa = x1, za = z1, xb = x1, zb = z1;
                unsigned pa = k->mul_phase(xa.data(), za.data(), x2.data(), z2.data(), n);
                unsigned pb = ref.mul_phase(xb.data(), zb.data(), x2.data(), z2.data(), n);
                EXPECT_EQ(pa % 4, pb % 4);
                EXPECT_EQ(xa, xb);
                EXPECT_EQ(za, zb);
            }
        }
    }
}

TEST(Kernels, ScalarPhaseOfSingleQubitProducts) {
    // X*Z = -iY, Z*X = iY, X*Y = iZ, Y*X = -iZ: exponents 3, 1, 1, 3.
    const Kernels &k = scalar_kernels();
    auto phase = [&](bool ax, bool az, bool bx, bool bz) {
        uint64_t x1 = ax, z1 = az, x2 = bx, z2 = bz;
        return k.mul_phase(&x1, &z1, &x2, &z2, 1) % 4;
    };
    EXPECT_EQ(phase(1, 0, 0, 1), 3u);
    EXPECT_EQ(phase(0, 1, 1, 0), 1u);
    EXPECT_EQ(phase(1, 0, 1, 1), 1u);
    EXPECT_EQ(phase(1, 1, 1, 0), 3u);
    EXPECT_EQ(phase(1, 1, 1, 1), 0u);
}
