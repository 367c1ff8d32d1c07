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

#include <functional>
#include <random>

#include "colorsurg/blossom.hpp"

using namespace colorsurg;

namespace {

// Best (cardinality, weight) over all matchings by recursion on vertex 0.
std::pair<int, int64_t> brute(size_t n, const std::vector<WeightedEdge> &edges, bool maxcard) {
    std::pair<int, int64_t> best{0, 0};
    std::vector<char> used(n, 0);
    std::function<void(size_t, int, int64_t)> rec = [&](size_t start, int card, int64_t w) {
        std::pair<int, int64_t> cur{card, w};
        if (maxcard ? cur > best : (w > best.second)) best = maxcard ? cur : std::make_pair(card, w);
        for (size_t i = start; i < edges.size(); i++) {
            const auto &e = edges[i];
            if (!used[e.u] && !used[e.v] && e.u != e.v) {
                used[e.u] = used[e.v] = 1;
                rec(i + 1, card + 1, w + e.weight);
                used[e.u] = used[e.v] = 0;
            }
        }
    };
    rec(0, 0, 0);
    return best;
}

}  // namespace

TEST(Blossom, MatchesBruteForceOnRandomGraphs) {
    std::mt19937_64 g(123);
    for (int rep = 0; rep < 400; rep++) {
        size_t n = 2 + g() % 8;
        std::vector<WeightedEdge> edges;
        for (size_t i = 0; i < n; i++)
            for (size_t j = i + 1; j < n; j++)
                if (g() % 3) edges.push_back({i, j, static_cast<int64_t>(g() % 30) - (rep % 5 == 0 ? 10 : 0)});
        for (bool maxcard : {false, true}) {
            auto mate = max_weight_matching(n, edges, maxcard);
            ASSERT_EQ(mate.size(), n);
            int card = 0;
            int64_t w = 0;
            for (size_t v = 0; v < n; v++) {
                if (mate[v] < 0) continue;
                ASSERT_EQ(mate[static_cast<size_t>(mate[v])], static_cast<long>(v));
                if (static_cast<size_t>(mate[v]) > v) {
                    card++;
                    int64_t ew = INT64_MIN;
                    for (const auto &e : edges)
                        if ((e.u == v && e.v == static_cast<size_t>(mate[v])) ||
                            (e.v == v && e.u == static_cast<size_t>(mate[v])))
                            ew = std::max(ew, e.weight);
                    ASSERT_NE(ew, INT64_MIN) << "matched a non-edge";
                    w += ew;
                }
            }
            auto b = brute(n, edges, maxcard);
            if (maxcard) EXPECT_EQ(card, b.first);
            EXPECT_EQ(w, b.second) << "n=" << n << " maxcard=" << maxcard;
        }
    }
}

TEST(Blossom, OddCycleNeedsBlossom) {
    // Triangle plus pendant: the optimum uses the pendant edge.
    std::vector<WeightedEdge> e = {{0, 1, 6}, {1, 2, 6}, {0, 2, 6}, {2, 3, 5}};
    auto mate = max_weight_matching(4, e, false);
    EXPECT_EQ(mate[3], 2);
    EXPECT_TRUE(mate[0] == 1 && mate[1] == 0);
}

TEST(Blossom, EmptyGraph) {
    auto mate = max_weight_matching(3, {}, true);
    EXPECT_EQ(mate, (std::vector<long>{-1, -1, -1}));
}
