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


#include "colorsurg/json_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace colorsurg {

namespace {

Json point_json(Point p) {
    return Json::array({p.r, p.c});
}

Point point_from(const Json &j) {
    return {j.at(0).get<int>(), j.at(1).get<int>()};
}

std::vector<std::string> pauli_strings(const std::vector<PauliOperator> &ops) {
    std::vector<std::string> out;
    for (const auto &p : ops) {
        out.push_back(p.str());
    }
    return out;
}

std::vector<PauliOperator> paulis_from(const Json &j, size_t n) {
    std::vector<PauliOperator> out;
    for (const auto &s : j) {
        PauliOperator p = PauliOperator::from_dense(s.get<std::string>());
        if (p.size() != n) {
            throw ValidationError("logical operator length does not match the qubit count");
        }
        out.push_back(p);
    }
    return out;
}

}  // namespace

Json patch_to_json(const CodePatch &p) {
    const ColorLattice &lat = p.lattice;
    Json j;
    j["format"] = "colorsurg.patch";
    j["version"] = 1;
    j["family"] = p.family;
    j["num_qubits"] = lat.num_qubits();
    j["k"] = p.k;
    j["distance_x"] = p.distance_x;
    j["distance_z"] = p.distance_z;
    Json verts = Json::array();
    for (Point v : lat.vertices) {
        verts.push_back(point_json(v));
    }
    j["vertices"] = verts;
    Json edges = Json::array();
    for (const Edge &e : lat.edges) {
        edges.push_back(Json::array({e.u, e.v, color_name(e.color)}));
    }
    j["edges"] = edges;
    Json faces = Json::array();
    for (const Face &f : lat.faces) {
        faces.push_back({{"center", point_json(f.center)},
                         {"color", color_name(f.color)},
                         {"type", stab_type_name(f.type)},
                         {"vertices", f.vertices}});
    }
    j["faces"] = faces;
    Json bounds = Json::array();
    for (const BoundarySegment &b : lat.boundaries) {
        bounds.push_back({{"label", boundary_label_name(b.label)}, {"vertices", b.vertices}});
    }
    j["boundaries"] = bounds;
    j["logical_x"] = pauli_strings(p.logical_x);
    j["logical_z"] = pauli_strings(p.logical_z);
    return j;
}

CodePatch patch_from_json(const Json &j) {
    try {
        if (j.at("format").get<std::string>() != "colorsurg.patch") {
            throw ValidationError("not a patch document");
        }
        CodePatch p;
        p.family = j.at("family").get<std::string>();
        p.k = j.at("k").get<size_t>();
        p.distance_x = j.at("distance_x").get<int>();
        p.distance_z = j.at("distance_z").get<int>();
        ColorLattice &lat = p.lattice;
        for (const auto &v : j.at("vertices")) {
            lat.vertices.push_back(point_from(v));
        }
        size_t n = lat.vertices.size();
        auto check_index = [&](size_t v) {
            if (v >= n) {
                throw ValidationError("vertex index " + std::to_string(v) + " out of range");
            }
            return v;
        };
        for (const auto &e : j.at("edges")) {
            lat.edges.push_back({check_index(e.at(0).get<size_t>()), check_index(e.at(1).get<size_t>()),
                                 color_from_name(e.at(2).get<std::string>())});
        }
        for (const auto &f : j.at("faces")) {
            Face face;
            face.center = point_from(f.at("center"));
            face.color = color_from_name(f.at("color").get<std::string>());
            face.type = stab_type_from_name(f.at("type").get<std::string>());
            for (const auto &v : f.at("vertices")) {
                face.vertices.push_back(check_index(v.get<size_t>()));
            }
            lat.faces.push_back(face);
        }
        for (const auto &b : j.at("boundaries")) {
            BoundarySegment seg;
            seg.label = boundary_label_from_name(b.at("label").get<std::string>());
            for (const auto &v : b.at("vertices")) {
                seg.vertices.push_back(check_index(v.get<size_t>()));
            }
            lat.boundaries.push_back(seg);
        }
        p.logical_x = paulis_from(j.at("logical_x"), n);
        p.logical_z = paulis_from(j.at("logical_z"), n);
        if (j.contains("num_qubits") && j["num_qubits"].get<size_t>() != n) {
            throw ValidationError("num_qubits does not match the vertex list");
        }
        return p;
    } catch (const nlohmann::json::exception &e) {
        throw ValidationError(std::string("malformed patch document: ") + e.what());
    }
}

Json layout_to_json(const SurgeryLayout &lay) {
    Json j;
    j["format"] = "colorsurg.layout";
    j["distance"] = lay.d;
    j["num_patches"] = lay.num_patches;
    j["la"] = logical_str(lay.la);
    j["lb"] = logical_str(lay.lb);
    j["placement_order"] = lay.order;
    j["patch_columns"] = lay.c0;
    j["num_data_qubits"] = lay.num_data;
    j["num_ancilla_qubits"] = lay.qubits.size() - lay.num_data;
    j["num_red_edges"] = lay.red_edges.size();
    j["num_merged_generators"] = lay.merged.size();
    Json removed = Json::array();
    for (const auto &e : lay.removed_edges) {
        removed.push_back(Json::array({point_json(e.first), point_json(e.second)}));
    }
    j["blue_segment_edges"] = removed;
    Json gens = Json::array();
    for (const auto &g : lay.merged) {
        const char *kind = g.kind == MergedGenerator::Kind::RedFace    ? "red_face"
                           : g.kind == MergedGenerator::Kind::DataFace ? "data_face"
                                                                       : "ancilla_face";
        gens.push_back({{"kind", kind}, {"face", point_json(g.face)}, {"op", g.op.str()}});
    }
    j["merged_generators"] = gens;
    return j;
}

size_t CsvTable::column(const std::string &name) const {
    for (size_t i = 0; i < header.size(); i++) {
        if (header[i] == name) {
            return i;
        }
    }
    throw ValidationError("CSV has no column '" + name + "'");
}

CsvTable parse_csv(const std::string &text) {
    CsvTable t;
    std::istringstream in(text);
    std::string line;
    auto split = [](const std::string &s) {
        std::vector<std::string> out;
        std::string cell;
        std::istringstream ls(s);
        while (std::getline(ls, cell, ',')) {
            out.push_back(cell);
        }
        if (!s.empty() && s.back() == ',') {
            out.emplace_back();
        }
        return out;
    };
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        if (t.header.empty() && line[0] == '#') {
            t.comments.push_back(line.substr(line.size() > 1 && line[1] == ' ' ? 2 : 1));
            continue;
        }
        auto cells = split(line);
        if (t.header.empty()) {
            t.header = cells;
        } else {
            if (cells.size() != t.header.size()) {
                throw ValidationError("CSV row has " + std::to_string(cells.size()) + " cells, header has " +
                                      std::to_string(t.header.size()));
            }
            t.rows.push_back(cells);
        }
    }
    if (t.header.empty()) {
        throw ValidationError("CSV input has no header");
    }
    return t;
}

std::string read_text_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open '" + path + "' for reading");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open '" + path + "' for writing");
    }
    out << text;
    if (!out) {
        throw std::runtime_error("write to '" + path + "' failed");
    }
}

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

}  // namespace colorsurg
