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

#include "colorsurg/lattice.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "colorsurg/gf2.hpp"

namespace colorsurg {

std::string stab_type_name(StabType t) {
    switch (t) {
        case StabType::XOnly:
            return "x";
        case StabType::ZOnly:
            return "z";
        default:
            return "both";
    }
}

StabType stab_type_from_name(const std::string &s) {
    if (s == "x") {
        return StabType::XOnly;
    }
    if (s == "z") {
        return StabType::ZOnly;
    }
    if (s == "both") {
        return StabType::Both;
    }
    throw ValidationError("unknown stabilizer type '" + s + "'");
}

std::string boundary_label_name(BoundaryLabel b) {
    switch (b) {
        case BoundaryLabel::Red:
            return "red";
        case BoundaryLabel::Green:
            return "green";
        case BoundaryLabel::Blue:
            return "blue";
        case BoundaryLabel::PauliX:
            return "pauli-x";
        default:
            return "pauli-z";
    }
}

BoundaryLabel boundary_label_from_name(const std::string &s) {
    if (s == "red") {
        return BoundaryLabel::Red;
    }
    if (s == "green") {
        return BoundaryLabel::Green;
    }
    if (s == "blue") {
        return BoundaryLabel::Blue;
    }
    if (s == "pauli-x") {
        return BoundaryLabel::PauliX;
    }
    if (s == "pauli-z") {
        return BoundaryLabel::PauliZ;
    }
    throw ValidationError("unknown boundary label '" + s + "'");
}

std::optional<size_t> ColorLattice::index_of(Point p) const {
    auto it = std::find(vertices.begin(), vertices.end(), p);
    if (it == vertices.end()) {
        return std::nullopt;
    }
    return static_cast<size_t>(it - vertices.begin());
}

std::vector<PauliOperator> ColorLattice::x_stabilizers() const {
    std::vector<PauliOperator> out;
    for (const Face &f : faces) {
        if (f.type != StabType::ZOnly) {
            out.push_back(pauli_on(num_qubits(), f.vertices, 'X'));
        }
    }
    return out;
}

std::vector<PauliOperator> ColorLattice::z_stabilizers() const {
    std::vector<PauliOperator> out;
    for (const Face &f : faces) {
        if (f.type != StabType::XOnly) {
            out.push_back(pauli_on(num_qubits(), f.vertices, 'Z'));
        }
    }
    return out;
}

std::vector<PauliOperator> ColorLattice::stabilizers() const {
    auto out = x_stabilizers();
    auto z = z_stabilizers();
    out.insert(out.end(), z.begin(), z.end());
    return out;
}

void fill_edges(ColorLattice &lat) {
    lat.edges.clear();
    std::map<Point, size_t> idx;
    for (size_t i = 0; i < lat.vertices.size(); i++) {
        idx[lat.vertices[i]] = i;
    }
    for (size_t i = 0; i < lat.vertices.size(); i++) {
        for (Point q : neighbors(lat.vertices[i])) {
            auto it = idx.find(q);
            if (it != idx.end() && it->second > i) {
                lat.edges.push_back({i, it->second, edge_color(lat.vertices[i], q)});
            }
        }
    }
}

std::vector<Point> triangle_points(int d, int c0) {
    int b = 3 * (d - 1) / 2;
    std::vector<Point> out;
    for (int r = 0; r <= b; r++) {
        for (int c = 0; c <= r; c++) {
            Point p{r, c0 + c};
            if (!is_plaquette(p)) {
                out.push_back(p);
            }
        }
    }
    return out;
}

namespace {

// Colour of the faces missing along a side, judged from the side's
// non-corner vertices.
std::optional<Color> missing_color(const ColorLattice &lat, const std::vector<size_t> &side) {
    std::set<Point> centers;
    for (const Face &f : lat.faces) {
        centers.insert(f.center);
    }
    std::set<Color> missing;
    for (size_t k = 1; k + 1 < side.size(); k++) {
        for (Point q : plaquettes_of(lat.vertices[side[k]])) {
            if (!centers.count(q)) {
                missing.insert(plaquette_color(q));
            }
        }
    }
    if (missing.size() != 1) {
        return std::nullopt;
    }
    return *missing.begin();
}

BoundaryLabel as_label(Color c) {
    return static_cast<BoundaryLabel>(static_cast<int>(c));
}

}  // namespace

CodePatch build_triangular_code(int d, int c0) {
    if (d < 3 || d % 2 == 0) {
        throw ValidationError("triangular code distance must be odd and >= 3, got " + std::to_string(d));
    }
    if (mod3(c0) == 1) {
        throw ValidationError("triangle offset must not be 1 mod 3");
    }
    CodePatch patch;
    patch.family = "triangular";
    ColorLattice &lat = patch.lattice;
    lat.vertices = triangle_points(d, c0);
    std::set<Point> pts(lat.vertices.begin(), lat.vertices.end());
    int b = 3 * (d - 1) / 2;
    for (int r = 0; r <= b; r++) {
        for (int c = 0; c <= r; c++) {
            Point p{r, c0 + c};
            if (!is_plaquette(p)) {
                continue;
            }
            Face f{p, plaquette_color(p), {}, StabType::Both};
            for (Point q : neighbors(p)) {
                if (pts.count(q)) {
                    f.vertices.push_back(*lat.index_of(q));
                }
            }
            std::sort(f.vertices.begin(), f.vertices.end());
            if (!f.vertices.empty()) {
                lat.faces.push_back(f);
            }
        }
    }
    fill_edges(lat);

    std::vector<size_t> bottom, left, diag;
    for (size_t i = 0; i < lat.vertices.size(); i++) {
        Point p = lat.vertices[i];
        if (p.r == b) {
            bottom.push_back(i);
        }
        if (p.c == c0) {
            left.push_back(i);
        }
        if (p.c - c0 == p.r) {
            diag.push_back(i);
        }
    }
    for (auto *side : {&bottom, &left, &diag}) {
        auto col = missing_color(lat, *side);
        if (!col) {
            throw std::logic_error("triangle side without a unique boundary colour");
        }
        lat.boundaries.push_back({as_label(*col), *side});
    }

    size_t n = lat.num_qubits();
    std::vector<size_t> all(n);
    for (size_t i = 0; i < n; i++) {
        all[i] = i;
    }
    patch.logical_x = {pauli_on(n, all, 'X')};
    patch.logical_z = {pauli_on(n, all, 'Z')};
    patch.k = code_dimension(lat);
    patch.distance_x = d;
    patch.distance_z = d;
    return patch;
}

size_t code_dimension(const ColorLattice &lat) {
    std::vector<BitVec> rows;
    for (const auto &s : lat.stabilizers()) {
        rows.push_back(symplectic_vector(s));
    }
    return lat.num_qubits() - gf2_rank(rows, 2 * lat.num_qubits());
}

namespace {

std::vector<BitVec> face_rows(const ColorLattice &lat, char type) {
    std::vector<BitVec> rows;
    size_t n = lat.num_qubits();
    for (const Face &f : lat.faces) {
        bool keep = type == 'X' ? f.type != StabType::ZOnly : f.type != StabType::XOnly;
        if (!keep) {
            continue;
        }
        BitVec v(words_for(n), 0);
        for (size_t q : f.vertices) {
            bit_flip(v, q);
        }
        rows.push_back(v);
    }
    return rows;
}

// Columns of the check matrix: for each qubit, the set of checks touching it.
std::vector<BitVec> check_columns(const std::vector<BitVec> &checks, size_t n) {
    std::vector<BitVec> cols(n, BitVec(words_for(checks.size() + 1), 0));
    for (size_t i = 0; i < checks.size(); i++) {
        for (size_t q = 0; q < n; q++) {
            if (bit_get(checks[i], q)) {
                bit_flip(cols[q], i);
            }
        }
    }
    return cols;
}

bool dot(const BitVec &a, const BitVec &b) {
    unsigned acc = 0;
    for (size_t k = 0; k < a.size(); k++) {
        acc ^= static_cast<unsigned>(__builtin_popcountll(a[k] & b[k]) & 1);
    }
    return acc;
}

}  // namespace

std::optional<int> brute_force_distance(const ColorLattice &lat, char type, int max_weight) {
    size_t n = lat.num_qubits();
    // An X-type operator must commute with the Z-type checks and vice versa.
    auto checks = face_rows(lat, type == 'X' ? 'Z' : 'X');
    auto same = face_rows(lat, type);
    auto cols = check_columns(checks, n);
    Gf2Basis span(n);
    for (const auto &s : same) {
        span.add(s);
    }
    size_t sw = words_for(checks.size() + 1);
    for (int w = 1; w <= max_weight; w++) {
        std::vector<size_t> chosen;
        BitVec syndrome(sw, 0);
        bool found = false;
        std::function<void(size_t)> rec = [&](size_t start) {
            if (found) {
                return;
            }
            if (static_cast<int>(chosen.size()) == w) {
                if (!bits_zero(syndrome)) {
                    return;
                }
                BitVec v(words_for(n), 0);
                for (size_t q : chosen) {
                    bit_flip(v, q);
                }
                if (!span.contains(v)) {
                    found = true;
                }
                return;
            }
            size_t remaining = static_cast<size_t>(w) - chosen.size();
            for (size_t q = start; q + remaining <= n; q++) {
                chosen.push_back(q);
                bits_xor(syndrome, cols[q]);
                rec(q + 1);
                bits_xor(syndrome, cols[q]);
                chosen.pop_back();
                if (found) {
                    return;
                }
            }
        };
        rec(0);
        if (found) {
            return w;
        }
    }
    return std::nullopt;
}

void css_logicals(const ColorLattice &lat, std::vector<PauliOperator> &lx, std::vector<PauliOperator> &lz) {
    size_t n = lat.num_qubits();
    auto logical_vectors = [&](char type) {
        auto checks = face_rows(lat, type == 'X' ? 'Z' : 'X');
        auto same = face_rows(lat, type);
        auto kernel = gf2_left_kernel(check_columns(checks, n), checks.size() + 1);
        Gf2Basis basis(n);
        for (const auto &s : same) {
            basis.add(s);
        }
        std::vector<BitVec> out;
        for (const auto &k : kernel) {
            BitVec v(words_for(n), 0);
            for (size_t q = 0; q < n; q++) {
                if (bit_get(k, q)) {
                    bit_flip(v, q);
                }
            }
            if (basis.add(v)) {
                out.push_back(v);
            }
        }
        return out;
    };
    auto xs = logical_vectors('X');
    auto zs = logical_vectors('Z');
    // Symplectic Gram-Schmidt so that xs[i].zs[j] = delta_ij.
    for (size_t i = 0; i < xs.size(); i++) {
        size_t j = i;
        while (j < zs.size() && !dot(xs[i], zs[j])) {
            j++;
        }
        if (j == zs.size()) {
            throw std::logic_error("logical operators fail to pair");
        }
        std::swap(zs[i], zs[j]);
        for (size_t m = 0; m < zs.size(); m++) {
            if (m != i && dot(xs[i], zs[m])) {
                bits_xor(zs[m], zs[i]);
            }
        }
        for (size_t m = 0; m < xs.size(); m++) {
            if (m != i && dot(xs[m], zs[i])) {
                bits_xor(xs[m], xs[i]);
            }
        }
    }
    auto to_pauli = [&](const BitVec &v, char letter) {
        PauliOperator p(n);
        for (size_t q = 0; q < n; q++) {
            if (bit_get(v, q)) {
                p.set(q, letter);
            }
        }
        return p;
    };
    lx.clear();
    lz.clear();
    for (const auto &v : xs) {
        lx.push_back(to_pauli(v, 'X'));
    }
    for (const auto &v : zs) {
        lz.push_back(to_pauli(v, 'Z'));
    }
}

LatticeReport verify_lattice(const ColorLattice &lat) {
    LatticeReport rep;
    size_t n = lat.num_qubits();
    std::set<Point> seen;
    for (Point p : lat.vertices) {
        if (is_plaquette(p)) {
            rep.violations.push_back("vertex at plaquette position (" + std::to_string(p.r) + "," +
                                     std::to_string(p.c) + ")");
        }
        if (!seen.insert(p).second) {
            rep.violations.push_back("duplicate vertex");
        }
    }
    std::vector<std::vector<size_t>> faces_of(n);
    for (size_t f = 0; f < lat.faces.size(); f++) {
        for (size_t q : lat.faces[f].vertices) {
            if (q >= n) {
                rep.violations.push_back("face vertex index out of range");
                return rep;
            }
            faces_of[q].push_back(f);
        }
    }
    auto face_tag = [&](size_t f) {
        const Face &fc = lat.faces[f];
        return color_name(fc.color) + " face (" + std::to_string(fc.center.r) + "," + std::to_string(fc.center.c) +
               ")";
    };
    for (const Edge &e : lat.edges) {
        std::vector<size_t> shared;
        for (size_t f : faces_of[e.u]) {
            if (std::find(faces_of[e.v].begin(), faces_of[e.v].end(), f) != faces_of[e.v].end()) {
                shared.push_back(f);
            }
        }
        for (size_t f : shared) {
            if (lat.faces[f].color == e.color) {
                rep.violations.push_back("edge colour equals colour of containing " + face_tag(f));
            }
        }
        for (size_t a = 0; a < shared.size(); a++) {
            for (size_t b = a + 1; b < shared.size(); b++) {
                if (lat.faces[shared[a]].color == lat.faces[shared[b]].color) {
                    rep.violations.push_back("adjacent faces share colour: " + face_tag(shared[a]) + " and " +
                                             face_tag(shared[b]));
                }
            }
        }
    }
    std::set<size_t> pauli_x_vertices, pauli_z_vertices;
    for (const BoundarySegment &b : lat.boundaries) {
        if (b.label == BoundaryLabel::PauliX || b.label == BoundaryLabel::PauliZ) {
            (b.label == BoundaryLabel::PauliX ? pauli_x_vertices : pauli_z_vertices)
                .insert(b.vertices.begin(), b.vertices.end());
            continue;
        }
        Color c = static_cast<Color>(static_cast<int>(b.label));
        for (size_t q : b.vertices) {
            for (size_t f : faces_of[q]) {
                if (lat.faces[f].color == c) {
                    rep.violations.push_back(boundary_label_name(b.label) + " boundary supports " + face_tag(f));
                }
            }
        }
    }
    for (size_t f = 0; f < lat.faces.size(); f++) {
        const Face &fc = lat.faces[f];
        if (fc.type == StabType::Both) {
            continue;
        }
        if (fc.vertices.size() == 6) {
            rep.violations.push_back("bulk " + face_tag(f) + " carries a single stabilizer type");
            continue;
        }
        const auto &pool = fc.type == StabType::XOnly ? pauli_x_vertices : pauli_z_vertices;
        bool touches = std::any_of(fc.vertices.begin(), fc.vertices.end(), [&](size_t q) { return pool.count(q); });
        if (!touches) {
            rep.violations.push_back(face_tag(f) + " is single-type away from a matching Pauli boundary");
        } else {
            rep.notes.push_back(face_tag(f) + " intentionally " + stab_type_name(fc.type) + "-only");
        }
    }
    auto xs = lat.x_stabilizers();
    auto zs = lat.z_stabilizers();
    for (const auto &a : xs) {
        for (const auto &b : zs) {
            if (!commutes(a, b)) {
                rep.violations.push_back("stabilizers " + a.str() + " and " + b.str() + " anticommute");
            }
        }
    }
    return rep;
}

}  // namespace colorsurg
