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

#include <algorithm>
#include <map>
#include <set>

#include "colorsurg/lattice.hpp"

namespace colorsurg {

namespace {

// Rows 0..h-1 of a sheared strip. Row r spans columns [r/2, r/2 + w + step(r)),
// where odd rows and the last row stick out by one column on the right.
ColorLattice thin_strip(int h, int w, StabType rows_type, StabType ends_type) {
    ColorLattice lat;
    for (int r = 0; r < h; r++) {
        int step = (r % 2 == 1 || r == h - 1) ? 1 : 0;
        for (int c = r / 2; c < r / 2 + w + step; c++) {
            if (!is_plaquette({r, c})) {
                lat.vertices.push_back({r, c});
            }
        }
    }
    std::map<Point, size_t> idx;
    for (size_t i = 0; i < lat.vertices.size(); i++) {
        idx[lat.vertices[i]] = i;
    }
    std::set<Point> centers;
    for (Point v : lat.vertices) {
        for (Point q : plaquettes_of(v)) {
            centers.insert(q);
        }
    }
    for (Point f : centers) {
        Face face{f, plaquette_color(f), {}, StabType::Both};
        bool hits_rows = false;
        for (Point q : neighbors(f)) {
            auto it = idx.find(q);
            if (it != idx.end()) {
                face.vertices.push_back(it->second);
            } else if (q.r < 0 || q.r >= h) {
                hits_rows = true;
            }
        }
        if (face.vertices.size() < 2) {
            continue;
        }
        std::sort(face.vertices.begin(), face.vertices.end());
        if (face.vertices.size() < 6) {
            face.type = hits_rows ? rows_type : ends_type;
        }
        lat.faces.push_back(face);
    }
    fill_edges(lat);

    std::vector<size_t> top, bottom, left, right;
    for (int r = 0; r < h; r++) {
        std::vector<size_t> row;
        for (size_t i = 0; i < lat.vertices.size(); i++) {
            if (lat.vertices[i].r == r) {
                row.push_back(i);
            }
        }
        if (r == 0) {
            top = row;
        }
        if (r == h - 1) {
            bottom = row;
        }
        left.push_back(row.front());
        right.push_back(row.back());
    }
    BoundaryLabel rows_label = rows_type == StabType::XOnly ? BoundaryLabel::PauliX : BoundaryLabel::PauliZ;
    BoundaryLabel ends_label = ends_type == StabType::XOnly ? BoundaryLabel::PauliX : BoundaryLabel::PauliZ;
    lat.boundaries = {{rows_label, top}, {rows_label, bottom}, {ends_label, left}, {ends_label, right}};
    return lat;
}

}  // namespace

CodePatch build_thin_code(int dx, int dz) {
    if (dx < 3 || dz < 3 || dx % 2 == 0 || dz % 2 == 0) {
        throw ValidationError("thin code distances must be odd and >= 3");
    }
    int lo = std::min(dx, dz);
    int hi = std::max(dx, dz);
    // The short direction sets the height, the long one the width. Truncated
    // faces on the long sides keep only the operator type of the short
    // distance's logical partner.
    bool x_short = dx <= dz;
    StabType rows_type = x_short ? StabType::XOnly : StabType::ZOnly;
    StabType ends_type = x_short ? StabType::ZOnly : StabType::XOnly;
    CodePatch patch;
    patch.family = "thin";
    patch.lattice = thin_strip(2 * lo - 1, (3 * hi + 1) / 2, rows_type, ends_type);
    const ColorLattice &lat = patch.lattice;
    patch.k = code_dimension(lat);
    if (patch.k != 2) {
        throw ValidationError("thin code (" + std::to_string(dx) + "," + std::to_string(dz) +
                              ") geometry does not encode two qubits");
    }
    auto mx = brute_force_distance(lat, 'X', dx);
    auto mz = brute_force_distance(lat, 'Z', dz);
    if (!mx || !mz || *mx != dx || *mz != dz) {
        throw ValidationError("thin code (" + std::to_string(dx) + "," + std::to_string(dz) +
                              ") geometry does not reach the requested distances");
    }
    patch.distance_x = dx;
    patch.distance_z = dz;
    css_logicals(lat, patch.logical_x, patch.logical_z);
    return patch;
}

}  // namespace colorsurg
