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

#include <algorithm>
#include <numeric>
#include <random>

#include "colorsurg/layout.hpp"

using namespace colorsurg;

TEST(LogicalParsing, OneBasedTokens) {
    auto p = parse_logical("X1 X3 Z4", 4);
    EXPECT_EQ(p, (LogicalPauli{'X', 'I', 'X', 'Z'}));
    EXPECT_EQ(logical_str(p), "X1 X3 Z4");
    EXPECT_EQ(parse_logical("I", 2), (LogicalPauli{'I', 'I'}));
    EXPECT_THROW(parse_logical("X0", 2), ValidationError);
    EXPECT_THROW(parse_logical("X3", 2), ValidationError);
    EXPECT_THROW(parse_logical("Q1", 2), ValidationError);
    EXPECT_FALSE(logicals_commute(parse_logical("X1", 1), parse_logical("Z1", 1)));
    EXPECT_TRUE(logicals_commute(parse_logical("X1 X2", 2), parse_logical("Z1 Z2", 2)));
}

TEST(LayoutBuild, FigureOneInstance) {
    SurgeryLayout lay = build_layout(3, parse_logical("X1 X3 Z4", 4), parse_logical("Z1 Z2 Z3 Z4", 4));
    LayoutCheck c = check_layout(lay);
    EXPECT_EQ(c.noncommuting_pairs, 0u);
    EXPECT_EQ(c.lost_data_stabilizers, 0u);
    EXPECT_EQ(c.measured, c.expected);
    EXPECT_EQ(c.expected.size(), 3u);  // L_A, L_B, L_A L_B
    // Patches 1 and 3 anticommute locally; each contributes one odd red face.
    EXPECT_EQ(lay.odd_red_faces.size(), 2u);
    EXPECT_FALSE(lay.removed_edges.empty());
    auto ops = lay.merged_ops();
    for (size_t i = 0; i < ops.size(); i++)
        for (size_t j = i + 1; j < ops.size(); j++) ASSERT_TRUE(commutes(ops[i], ops[j]));
}

TEST(LayoutBuild, Rejections) {
    auto la = parse_logical("X1", 1), lb = parse_logical("Z1", 1);
    EXPECT_THROW(build_layout(3, la, lb), ValidationError);  // anticommuting
    EXPECT_THROW(build_layout(4, la, la), ValidationError);  // even distance
    EXPECT_THROW(build_layout(3, parse_logical("I", 1), la), ValidationError);
}

TEST(LayoutBuild, RandomCommutingPairsMeasureExactlyTheirSpan) {
    std::mt19937_64 g(17);
    int built = 0;
    while (built < 12) {
        size_t n = 2 + g() % 2;
        LogicalPauli a(n), b(n);
        for (size_t j = 0; j < n; j++) {
            a[j] = "IXYZ"[g() % 4];
            b[j] = "IXYZ"[g() % 4];
        }
        if (std::all_of(a.begin(), a.end(), [](char c) { return c == 'I'; }) ||
            std::all_of(b.begin(), b.end(), [](char c) { return c == 'I'; }) || !logicals_commute(a, b) ||
            logical_bits(a) == logical_bits(b)) {
            continue;
        }
        SurgeryLayout lay = build_layout(3, a, b);
        LayoutCheck c = check_layout(lay);
        EXPECT_TRUE(c.ok()) << logical_str(a) << " / " << logical_str(b);
        built++;
    }
}

// Exact matching against all permutations.
TEST(ExactMatching, AgreesWithBruteForce) {
    std::mt19937_64 g(5);
    for (int rep = 0; rep < 30; rep++) {
        size_t n = 2 * (1 + g() % 4);
        std::vector<std::vector<long>> cost(n, std::vector<long>(n));
        for (size_t i = 0; i < n; i++)
            for (size_t j = i + 1; j < n; j++) cost[i][j] = cost[j][i] = static_cast<long>(g() % 50);
        auto mate = min_weight_perfect_matching_exact(cost);
        long got = 0;
        for (size_t i = 0; i < n; i++) {
            ASSERT_EQ(mate[mate[i]], i);
            if (mate[i] > i) got += cost[i][mate[i]];
        }
        std::vector<size_t> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        long best = 1L << 40;
        do {
            long c = 0;
            for (size_t i = 0; i < n; i += 2) c += cost[perm[i]][perm[i + 1]];
            best = std::min(best, c);
        } while (std::next_permutation(perm.begin(), perm.end()));
        EXPECT_EQ(got, best);
    }
}
