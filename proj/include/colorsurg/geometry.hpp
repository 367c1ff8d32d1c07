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
#include <compare>
#include <string>
#include <vector>

namespace colorsurg {

// Points of the hexagonal lattice in skewed integer coordinates. The six
// neighbours of (r, c) are (r+-1, c), (r, c+-1), (r+1, c+1) and (r-1, c-1).
// Points with (r + c) mod 3 == 1 are face centres (plaquettes); all other
// points are qubits. Plaquette colour depends on r mod 3.
struct Point {
    int r = 0;
    int c = 0;
    auto operator<=>(const Point &) const = default;
};

enum class Color { Red = 0, Green = 1, Blue = 2 };

char color_letter(Color c);
std::string color_name(Color c);
Color color_from_name(const std::string &s);

inline int mod3(int v) {
    return ((v % 3) + 3) % 3;
}

inline bool is_plaquette(Point p) {
    return mod3(p.r + p.c) == 1;
}

Color plaquette_color(Point p);
std::array<Point, 6> neighbors(Point p);
// The three plaquettes around a qubit point.
std::vector<Point> plaquettes_of(Point v);
// The other endpoint of the c-coloured edge at qubit v. An edge's colour is
// the colour of the two faces it connects, i.e. the one colour not present
// among the two faces that contain it.
Point partner(Point v, Color c);
// Colour of the edge between adjacent qubits u and v.
Color edge_color(Point u, Point v);
// The red plaquette that contains qubit v.
Point plaquette_of_color(Point v, Color c);

}  // namespace colorsurg
