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

#include "colorsurg/geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace colorsurg {

namespace {
constexpr std::array<std::array<int, 2>, 6> kSteps{{{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {-1, -1}}};
}

char color_letter(Color c) {
    return "RGB"[static_cast<int>(c)];
}

std::string color_name(Color c) {
    static const char *names[] = {"red", "green", "blue"};
    return names[static_cast<int>(c)];
}

Color color_from_name(const std::string &s) {
    if (s == "red" || s == "R") {
        return Color::Red;
    }
    if (s == "green" || s == "G") {
        return Color::Green;
    }
    if (s == "blue" || s == "B") {
        return Color::Blue;
    }
    throw std::invalid_argument("unknown colour '" + s + "'");
}

Color plaquette_color(Point p) {
    switch (mod3(p.r)) {
        case 1:
            return Color::Red;
        case 0:
            return Color::Green;
        default:
            return Color::Blue;
    }
}

std::array<Point, 6> neighbors(Point p) {
    std::array<Point, 6> out;
    for (size_t k = 0; k < 6; k++) {
        out[k] = Point{p.r + kSteps[k][0], p.c + kSteps[k][1]};
    }
    return out;
}

std::vector<Point> plaquettes_of(Point v) {
    std::vector<Point> out;
    for (Point q : neighbors(v)) {
        if (is_plaquette(q)) {
            out.push_back(q);
        }
    }
    return out;
}

Point plaquette_of_color(Point v, Color c) {
    for (Point q : plaquettes_of(v)) {
        if (plaquette_color(q) == c) {
            return q;
        }
    }
    throw std::logic_error("qubit without a plaquette of every colour");
}

Point partner(Point v, Color c) {
    std::vector<Point> other;
    for (Point q : plaquettes_of(v)) {
        if (plaquette_color(q) != c) {
            other.push_back(q);
        }
    }
    auto na = neighbors(other.at(0));
    auto nb = neighbors(other.at(1));
    for (Point a : na) {
        if (a != v && std::find(nb.begin(), nb.end(), a) != nb.end()) {
            return a;
        }
    }
    throw std::logic_error("partner not found");
}

Color edge_color(Point u, Point v) {
    for (int k = 0; k < 3; k++) {
        Color c = static_cast<Color>(k);
        if (partner(u, c) == v) {
            return c;
        }
    }
    throw std::invalid_argument("points are not adjacent qubits");
}

}  // namespace colorsurg
