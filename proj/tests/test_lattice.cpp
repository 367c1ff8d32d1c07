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

#include <map>
#include <set>

#include "colorsurg/json_io.hpp"
#include "colorsurg/lattice.hpp"

using namespace colorsurg;

class TriangularCode : public ::testing::TestWithParam<int> {};

TEST_P(TriangularCode, CountsAndStructure) {
    int d = GetParam();
    CodePatch p = build_triangular_code(d);
    size_t n = static_cast<size_t>((3 * d * d + 1) / 4);
    EXPECT_EQ(p.lattice.num_qubits(), n);
    EXPECT_EQ(p.lattice.faces.size(), (n - 1) / 2);
    EXPECT_EQ(p.k, 1u);
    EXPECT_EQ(code_dimension(p.lattice), 1u);
    EXPECT_EQ(p.distance_x, d);
    EXPECT_EQ(p.distance_z, d);
    LatticeReport rep = verify_lattice(p.lattice);
    EXPECT_TRUE(rep.ok()) << (rep.violations.empty() ? "" : rep.violations.front());

    // Faces of weight 4 or 6; each qubit in at most three faces of distinct
    // colors; faces sharing an edge differ in color.
    std::map<size_t, std::set<Color>> colors_at;
    for (const Face &f : p.lattice.faces) {
        EXPECT_TRUE(f.vertices.size() == 4 || f.vertices.size() == 6);
        for (size_t v : f.vertices) {
            EXPECT_TRUE(colors_at[v].insert(f.color).second);
        }
    }
    for (const Edge &e : p.lattice.edges) {
        std::set<Color> shared;
        for (const Face &f : p.lattice.faces) {
            bool hu = std::count(f.vertices.begin(), f.vertices.end(), e.u) > 0;
            bool hv = std::count(f.vertices.begin(), f.vertices.end(), e.v) > 0;
            if (hu && hv) {
                EXPECT_TRUE(shared.insert(f.color).second);
                EXPECT_NE(f.color, e.color);
            }
        }
    }

    // Stabilizers commute; logicals commute with them and anticommute with
    // each other.
    auto stabs = p.lattice.stabilizers();
    for (size_t i = 0; i < stabs.size(); i++)
        for (size_t j = i + 1; j < stabs.size(); j++) EXPECT_TRUE(commutes(stabs[i], stabs[j]));
    ASSERT_EQ(p.logical_x.size(), 1u);
    for (const auto &s : stabs) {
        EXPECT_TRUE(commutes(s, p.logical_x[0]));
        EXPECT_TRUE(commutes(s, p.logical_z[0]));
    }
    EXPECT_FALSE(commutes(p.logical_x[0], p.logical_z[0]));

    // One boundary segment per color.
    std::set<BoundaryLabel> labels;
    for (const auto &b : p.lattice.boundaries) labels.insert(b.label);
    EXPECT_EQ(labels, (std::set<BoundaryLabel>{BoundaryLabel::Red, BoundaryLabel::Green, BoundaryLabel::Blue}));
}

INSTANTIATE_TEST_SUITE_P(Distances, TriangularCode, ::testing::Values(3, 5, 7, 9));

TEST(TriangularCodeDistance, BruteForceMatches) {
    for (int d : {3, 5}) {
        CodePatch p = build_triangular_code(d);
        EXPECT_EQ(brute_force_distance(p.lattice, 'X', d), d);
        EXPECT_EQ(brute_force_distance(p.lattice, 'Z', d), d);
        EXPECT_EQ(brute_force_distance(p.lattice, 'X', d - 1), std::nullopt);
    }
}

TEST(TriangularCodeDistance, RejectsEvenAndSmall) {
    EXPECT_THROW(build_triangular_code(4), ValidationError);
    EXPECT_THROW(build_triangular_code(1), ValidationError);
}

TEST(TriangularCodeDistance, QubitsPerDistanceSquaredApproachThreeQuarters) {
    double prev = 1e9;
    for (int d : {11, 31, 101, 301}) {
        double ratio = static_cast<double>(triangle_points(d, 0).size()) / (d * d);
        EXPECT_LT(std::abs(ratio - 0.75), std::abs(prev - 0.75) + 1e-15);
        prev = ratio;
    }
    EXPECT_NEAR(prev, 0.75, 1e-4);
}

TEST(TriangularCodeDistance, MirrorOrientation) {
    CodePatch a = build_triangular_code(5, 0), b = build_triangular_code(5, 2);
    EXPECT_EQ(a.lattice.num_qubits(), b.lattice.num_qubits());
    EXPECT_TRUE(verify_lattice(b.lattice).ok());
    EXPECT_EQ(code_dimension(b.lattice), 1u);
}

TEST(PatchJson, RoundTrip) {
    CodePatch p = build_triangular_code(5);
    Json j = patch_to_json(p);
    CodePatch q = patch_from_json(Json::parse(j.dump()));
    EXPECT_EQ(patch_to_json(q), j);
    EXPECT_EQ(q.lattice.vertices, p.lattice.vertices);
    ASSERT_EQ(q.lattice.faces.size(), p.lattice.faces.size());
    EXPECT_EQ(q.logical_x[0], p.logical_x[0]);
}

TEST(PatchJson, RejectsBrokenDocuments) {
    Json j = patch_to_json(build_triangular_code(3));
    j["faces"][0]["vertices"][0] = 999;
    EXPECT_THROW(patch_from_json(j), ValidationError);
    EXPECT_THROW(patch_from_json(Json::object()), ValidationError);
}
