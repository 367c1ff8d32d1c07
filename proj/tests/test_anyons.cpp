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

#include <set>

#include "colorsurg/anyons.hpp"
#include "colorsurg/pauli.hpp"

using namespace colorsurg;

namespace {

Anyon A(const char *s) {
    return Anyon::parse(s);
}

std::vector<Anyon> all() {
    std::vector<Anyon> v;
    for (unsigned i = 0; i < 16; i++) v.push_back(Anyon(static_cast<uint8_t>(i)));
    return v;
}

}  // namespace

TEST(Anyons, FusionExamples) {
    EXPECT_EQ(fuse(A("rx"), A("gx")), A("bx"));
    EXPECT_EQ(fuse(A("rx"), A("ry")), A("rz"));
    EXPECT_EQ(fuse(A("rx"), A("rx")), Anyon::vacuum());
    EXPECT_TRUE(fuse(A("rx"), A("gz")).is_fermion());
}

TEST(Anyons, BraidExamples) {
    EXPECT_EQ(braid_phase(A("rx"), A("gx")), 1);
    EXPECT_EQ(braid_phase(A("rx"), A("rz")), 1);
    EXPECT_EQ(braid_phase(A("rx"), A("gz")), -1);
    for (Anyon a : all()) EXPECT_EQ(braid_phase(a, Anyon::vacuum()), 1);
}

// Grid rules: same row or column braid trivially and fuse to the third;
// anything else braids nontrivially and fuses to a fermion.
TEST(Anyons, GridRules) {
    auto bs = Anyon::bosons();
    std::set<Anyon> distinct(bs.begin(), bs.end());
    EXPECT_EQ(distinct.size(), 9u);
    for (int i = 0; i < 3; i++) {
        for (int j = 0; j < 3; j++) {
            for (int k = 0; k < 3; k++) {
                for (int l = 0; l < 3; l++) {
                    Anyon a = Anyon::boson(i, j), b = Anyon::boson(k, l);
                    if (a == b) continue;
                    if (i == k) {
                        EXPECT_EQ(braid_phase(a, b), 1);
                        EXPECT_EQ(fuse(a, b), Anyon::boson(i, 3 - j - l));
                    } else if (j == l) {
                        EXPECT_EQ(braid_phase(a, b), 1);
                        EXPECT_EQ(fuse(a, b), Anyon::boson(3 - i - k, j));
                    } else {
                        EXPECT_EQ(braid_phase(a, b), -1);
                        EXPECT_TRUE(fuse(a, b).is_fermion());
                    }
                }
            }
        }
    }
    EXPECT_EQ(Anyon::fermions().size(), 6u);
}

TEST(Anyons, GroupLawsAndBilinearity) {
    for (Anyon a : all()) {
        EXPECT_EQ(fuse(a, a), Anyon::vacuum());
        EXPECT_EQ(fuse(a, Anyon::vacuum()), a);
        for (Anyon b : all()) {
            EXPECT_EQ(fuse(a, b), fuse(b, a));
            EXPECT_EQ(braid_phase(a, b), braid_phase(b, a));
            for (Anyon c : all()) {
                EXPECT_EQ(fuse(fuse(a, b), c), fuse(a, fuse(b, c)));
                EXPECT_EQ(braid_phase(a, fuse(b, c)), braid_phase(a, b) * braid_phase(a, c));
            }
        }
    }
}

TEST(Anyons, NamesRoundTrip) {
    for (Anyon a : all()) EXPECT_EQ(Anyon::parse(a.name()), a) << a.name();
    EXPECT_THROW(Anyon::parse("qx"), ValidationError);
}

TEST(Boundaries, SixRowsAndColumns) {
    auto bs = enumerate_boundaries();
    ASSERT_EQ(bs.size(), 6u);
    std::set<std::string> descr;
    for (const auto &b : bs) {
        EXPECT_TRUE(validate_boundary(b));
        descr.insert(b.describe());
        auto g0 = *b.condensed[0].grid(), g1 = *b.condensed[1].grid(), g2 = *b.condensed[2].grid();
        bool row = g0.first == g1.first && g1.first == g2.first;
        bool col = g0.second == g1.second && g1.second == g2.second;
        EXPECT_TRUE(row || col);
    }
    EXPECT_EQ(descr.size(), 6u);
}

TEST(Boundaries, ValidatorRejectsBraidingSet) {
    BoundarySpec bad{{A("rx"), A("gz"), A("by")}};
    std::string why;
    EXPECT_FALSE(validate_boundary(bad, &why));
    EXPECT_FALSE(why.empty());
    EXPECT_FALSE(validate_condensate({A("rx"), A("rx*gz")}));
    EXPECT_FALSE(validate_condensate({A("rx"), A("ry")}));  // not closed
}

TEST(Walls, TransparentCountAndIdentity) {
    auto ws = enumerate_transparent_walls();
    ASSERT_EQ(ws.size(), 72u);
    bool identity = false;
    std::set<std::string> descr;
    for (const auto &w : ws) {
        EXPECT_TRUE(validate_wall(w));
        descr.insert(w.describe());
        identity |= w.columns == std::array<uint8_t, 4>{1, 2, 4, 8};
    }
    EXPECT_TRUE(identity);
    EXPECT_EQ(descr.size(), 72u);
}

TEST(Walls, SemiTransparentCountAndConfinement) {
    auto ws = enumerate_semitransparent_walls();
    ASSERT_EQ(ws.size(), 162u);
    std::set<std::string> descr;
    for (const auto &w : ws) {
        std::string why;
        EXPECT_TRUE(validate_wall(w, &why)) << why;
        descr.insert(w.describe());
        for (Side s : {Side::Left, Side::Right}) {
            int confined = 0;
            for (Anyon b : Anyon::bosons()) confined += wall_action(w, b, s).outcome == WallOutcome::Confine;
            EXPECT_EQ(confined, 4);
        }
    }
    EXPECT_EQ(descr.size(), 162u);
}

TEST(Walls, SemiTransparentActions) {
    WallSpec w;
    w.kind = WallKind::SemiTransparent;
    w.c_left = A("rx");
    w.c_right = A("gz");
    EXPECT_EQ(wall_action(w, A("rx"), Side::Left).outcome, WallOutcome::Condense);
    EXPECT_EQ(wall_action(w, A("gz"), Side::Right).outcome, WallOutcome::Condense);
    EXPECT_EQ(wall_action(w, A("gy"), Side::Left).outcome, WallOutcome::Confine);
    // Same-row partners of C pass to same-row partners of C on the far side.
    auto t = wall_action(w, A("ry"), Side::Left);
    ASSERT_EQ(t.outcome, WallOutcome::Transmit);
    EXPECT_EQ(t.image.grid()->first, A("gz").grid()->first);
    // Fusing with the condensed charge does not change the image.
    EXPECT_EQ(wall_action(w, A("rz"), Side::Left).image, t.image);
    w.swap_labels = true;
    auto s = wall_action(w, A("ry"), Side::Left);
    EXPECT_EQ(s.image.grid()->second, A("gz").grid()->second);
}

TEST(Walls, OpaqueCount) {
    auto ws = enumerate_opaque_walls();
    ASSERT_EQ(ws.size(), 36u);
    for (const auto &w : ws) {
        EXPECT_TRUE(validate_wall(w));
        for (Anyon b : w.left.condensed) EXPECT_EQ(wall_action(w, b, Side::Left).outcome, WallOutcome::Condense);
    }
}
