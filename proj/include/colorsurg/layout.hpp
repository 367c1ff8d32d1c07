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

#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "colorsurg/geometry.hpp"
#include "colorsurg/lattice.hpp"
#include "colorsurg/pauli.hpp"

namespace colorsurg {

// A logical Pauli on N patches, one letter in {I,X,Y,Z} per patch.
using LogicalPauli = std::vector<char>;

// Parses "X1 X3 Z4" (1-based patch indices). If num_patches is zero the
// highest index mentioned sets the size.
LogicalPauli parse_logical(const std::string &text, size_t num_patches = 0);
std::string logical_str(const LogicalPauli &p);
bool logicals_commute(const LogicalPauli &a, const LogicalPauli &b);

struct LayoutOptions {
    std::optional<int> ancilla_depth;  // rows of ancilla below the patches
    std::optional<int> gap;            // columns between neighbouring patches
    std::optional<int> margin;         // ancilla overhang on each side
    bool fix_parity = true;
};

// One generator of the merged code together with where it came from.
struct MergedGenerator {
    enum class Kind { RedFace, DataFace, AncillaFace } kind;
    Point face;
    char type;  // 'X' or 'Z' for red and ancilla faces, option index otherwise
    PauliOperator op;
};

struct LayoutCheck {
    size_t noncommuting_pairs = 0;
    // Nonzero logical combinations (bit 2j = X of patch j, 2j+1 = Z) that lie
    // in the span of merged, data and ancilla-pair generators.
    std::set<uint64_t> measured;
    std::set<uint64_t> expected;
    size_t lost_data_stabilizers = 0;
    bool ok() const {
        return noncommuting_pairs == 0 && measured == expected && lost_data_stabilizers == 0;
    }
};

struct SurgeryLayout {
    int d = 0;
    int b = 0;  // last row of each triangle
    size_t num_patches = 0;
    LogicalPauli la, lb;

    std::vector<char> orientation;  // 'R' or 'L' per patch
    std::vector<size_t> order;      // left to right
    std::vector<int> c0;            // column offset per patch
    std::vector<std::vector<Point>> patch_vertices;
    std::map<Point, size_t> owner;  // data vertex -> patch
    std::set<Point> ancilla;
    std::vector<Point> odd_red_faces;  // before the parity fix
    std::vector<std::pair<Point, Point>> removed_edges;

    // Qubit order: data vertices sorted, then ancilla vertices sorted.
    std::vector<Point> qubits;
    std::map<Point, size_t> index;
    size_t num_data = 0;

    std::vector<Point> red_faces;
    std::vector<MergedGenerator> merged;                // S_M, red faces first
    std::vector<std::pair<Point, Point>> red_edges;     // ancilla pairs
    std::vector<std::vector<Face>> patch_faces;         // per patch, vertex indices local to the patch
    std::vector<PauliOperator> data_stabilizers;        // X then Z per face, patch by patch
    std::vector<PauliOperator> ancilla_stabilizers;     // XX then ZZ per red edge
    std::vector<PauliOperator> patch_x, patch_z, patch_y;  // transversal logicals

    size_t num_qubits() const {
        return qubits.size();
    }
    std::vector<PauliOperator> merged_ops() const;
    // Physical representative of a logical Pauli.
    PauliOperator physical(const LogicalPauli &p) const;
    PauliOperator red_x_product() const;
    PauliOperator red_z_product() const;
};

SurgeryLayout build_layout(int d, const LogicalPauli &la, const LogicalPauli &lb, const LayoutOptions &opts = {});

LayoutCheck check_layout(const SurgeryLayout &lay);

uint64_t logical_bits(const LogicalPauli &p);

// Exact minimum-weight perfect matching over an even number of nodes given a
// dense cost matrix. Returns the partner of every node.
std::vector<size_t> min_weight_perfect_matching_exact(const std::vector<std::vector<long>> &cost);

}  // namespace colorsurg
