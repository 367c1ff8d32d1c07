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
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace colorsurg {

// Abelian anyons of the color code as 4-bit labels (e1, e2, m1, m2) in bits
// 0..3. Fusion is XOR. The braiding phase is (-1)^(e.m' + m.e') and the
// topological spin is (-1)^(e.m).
//
// Bosons sit on a 3x3 grid: color c in {r, g, b} and Pauli type in {x, y, z}.
// With r = (1,0), g = (0,1), b = (1,1) as two-bit vectors and J the swap of
// the two bits:
//   cx = (c, 0)    cz = (0, Jc)    cy = cx * cz
class Anyon {
   public:
    constexpr Anyon() = default;
    constexpr explicit Anyon(uint8_t bits) : bits_(bits & 15) {}

    static Anyon vacuum() {
        return Anyon(0);
    }
    // color index 0..2 (r, g, b), pauli index 0..2 (x, y, z).
    static Anyon boson(int color, int pauli);
    // Parses names like "rx", "gz", "1" (vacuum) or "f:rx*gz" style composites
    // written as "rx*gz".
    static Anyon parse(const std::string &name);
    static std::array<Anyon, 9> bosons();
    static std::array<Anyon, 6> fermions();

    uint8_t bits() const {
        return bits_;
    }
    unsigned e() const {
        return bits_ & 3u;
    }
    unsigned m() const {
        return (bits_ >> 2) & 3u;
    }
    bool is_vacuum() const {
        return bits_ == 0;
    }
    int spin() const;
    bool is_boson() const {
        return !is_vacuum() && spin() == 1;
    }
    bool is_fermion() const {
        return spin() == -1;
    }
    // Grid position of a boson, or nullopt.
    std::optional<std::pair<int, int>> grid() const;
    // "1", a boson name such as "rx", or a fermion written as a product of two
    // bosons of different rows and columns, e.g. "rx*gz".
    std::string name() const;

    auto operator<=>(const Anyon &) const = default;

   private:
    uint8_t bits_ = 0;
};

Anyon fuse(Anyon a, Anyon b);
int braid_phase(Anyon a, Anyon b);

struct BoundarySpec {
    std::vector<Anyon> condensed;  // nontrivial condensed anyons, sorted
    std::string describe() const;  // e.g. "row r" or "column x"
};

// Checks rules: bosons only, fusion closed, mutually trivial braiding.
bool validate_condensate(const std::vector<Anyon> &set, std::string *why = nullptr);
bool validate_boundary(const BoundarySpec &b, std::string *why = nullptr);

enum class WallKind { Transparent, SemiTransparent, Opaque };
std::string wall_kind_name(WallKind k);
WallKind wall_kind_from_name(const std::string &s);

struct WallSpec {
    WallKind kind = WallKind::Transparent;
    // Transparent: image of each basis label 1, 2, 4, 8 under the left-to-right
    // map, plus its grid description.
    std::array<uint8_t, 4> columns{};
    std::array<int, 3> row_perm{0, 1, 2};
    std::array<int, 3> col_perm{0, 1, 2};
    bool transpose = false;
    // Semi-transparent.
    Anyon c_left, c_right;
    bool swap_labels = false;  // pairs same-row partners with same-column partners
    // Opaque.
    BoundarySpec left, right;

    std::string describe() const;
};

enum class WallOutcome { Condense, Confine, Transmit };
enum class Side { Left, Right };

struct WallAction {
    WallOutcome outcome;
    Anyon image;  // meaningful for Transmit
};

WallAction wall_action(const WallSpec &w, Anyon a, Side side);

std::vector<BoundarySpec> enumerate_boundaries();
std::vector<WallSpec> enumerate_transparent_walls();
std::vector<WallSpec> enumerate_semitransparent_walls();
std::vector<WallSpec> enumerate_opaque_walls();

bool validate_wall(const WallSpec &w, std::string *why = nullptr);

// Least label in the class a * <c>.
Anyon canonical_mod(Anyon a, Anyon c);

}  // namespace colorsurg
