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

#include "colorsurg/lattice.hpp"

using namespace colorsurg;

TEST(ThinCode, ThreeBySeven) {
    CodePatch p = build_thin_code(3, 7);
    EXPECT_EQ(p.k, 2u);
    EXPECT_EQ(code_dimension(p.lattice), 2u);
    EXPECT_EQ(brute_force_distance(p.lattice, 'X', 7), 3);
    EXPECT_EQ(brute_force_distance(p.lattice, 'Z', 7), 7);
    EXPECT_TRUE(verify_lattice(p.lattice).ok());
    ASSERT_EQ(p.logical_x.size(), 2u);
    for (size_t i = 0; i < 2; i++)
        for (size_t j = 0; j < 2; j++) EXPECT_EQ(commutes(p.logical_x[i], p.logical_z[j]), i != j);
}

TEST(ThinCode, OtherShapes) {
    for (auto [dx, dz] : std::vector<std::pair<int, int>>{{3, 3}, {3, 5}, {5, 3}}) {
        CodePatch p = build_thin_code(dx, dz);
        EXPECT_EQ(p.k, 2u);
        EXPECT_EQ(brute_force_distance(p.lattice, 'X', std::max(dx, dz)), dx);
        EXPECT_EQ(brute_force_distance(p.lattice, 'Z', std::max(dx, dz)), dz);
    }
}

TEST(ThinCode, RejectsEvenDistances) {
    EXPECT_THROW(build_thin_code(4, 7), ValidationError);
    EXPECT_THROW(build_thin_code(3, 6), ValidationError);
}
