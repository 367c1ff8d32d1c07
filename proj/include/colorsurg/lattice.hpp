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

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "colorsurg/geometry.hpp"
#include "colorsurg/pauli.hpp"

namespace colorsurg {

enum class StabType { Both, XOnly, ZOnly };
enum class BoundaryLabel { Red, Green, Blue, PauliX, PauliZ };

std::string stab_type_name(StabType t);
StabType stab_type_from_name(const std::string &s);
std::string boundary_label_name(BoundaryLabel b);
BoundaryLabel boundary_label_from_name(const std::string &s);

struct Face {
    Point center;
    Color color;
    std::vector<size_t> vertices;  // indices into ColorLattice::vertices
    StabType type = StabType::Both;
};

struct Edge {
    size_t u;
    size_t v;
    Color color;
};

struct BoundarySegment {
    BoundaryLabel label;
    std::vector<size_t> vertices;
};

// Qubits on vertices of a three-colourable lattice with colored faces and
// edges. Vertices keep their lattice coordinates for export and geometry.
struct ColorLattice {
    std::vector<Point> vertices;
    std::vector<Edge> edges;
    std::vector<Face> faces;
    std::vector<BoundarySegment> boundaries;

    size_t num_qubits() const {
        return vertices.size();
    }
    std::optional<size_t> index_of(Point p) const;
    // X-type face operators followed by Z-type ones, in face order.
    std::vector<PauliOperator> stabilizers() const;
    std::vector<PauliOperator> x_stabilizers() const;
    std::vector<PauliOperator> z_stabilizers() const;
};

// Builds edges for all adjacent vertex pairs with geometric colours.
void fill_edges(ColorLattice &lat);

struct CodePatch {
    ColorLattice lattice;
    std::vector<PauliOperator> logical_x;
    std::vector<PauliOperator> logical_z;
    size_t k = 0;
    int distance_x = 0;
    int distance_z = 0;
    std::string family;
};

// Triangular 6.6.6 colour code of odd distance d >= 3 with one boundary of
// each colour. The patch occupies rows 0..B, B = 3(d-1)/2, with qubit
// (r, c0 + c) for 0 <= c <= r; row B is the red boundary. c0 = 0 mod 3 gives
// the standard orientation and c0 = 2 mod 3 its mirror image.
CodePatch build_triangular_code(int d, int c0 = 0);
std::vector<Point> triangle_points(int d, int c0);

// Rectangular colour code with Pauli boundaries encoding two qubits with X
// distance dx and Z distance dz (both odd, >= 3).
CodePatch build_thin_code(int dx, int dz);

struct LatticeReport {
    std::vector<std::string> violations;
    std::vector<std::string> notes;
    bool ok() const {
        return violations.empty();
    }
};

LatticeReport verify_lattice(const ColorLattice &lat);

// Dimension of the code: n minus rank of the stabilizer generators.
size_t code_dimension(const ColorLattice &lat);

// Minimum weight of a Pauli-`type` operator ('X' or 'Z') that commutes with
// every stabilizer and is not itself in the stabilizer group. Searches
// weights up to max_weight; returns nullopt if none is found.
std::optional<int> brute_force_distance(const ColorLattice &lat, char type, int max_weight);

// Logical operator basis of a CSS code (X-type and Z-type), paired so that
// logical_x[i] anticommutes exactly with logical_z[i].
void css_logicals(const ColorLattice &lat, std::vector<PauliOperator> &lx, std::vector<PauliOperator> &lz);

}  // namespace colorsurg
