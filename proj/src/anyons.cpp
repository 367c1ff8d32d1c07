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


#include "colorsurg/anyons.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

#include "colorsurg/pauli.hpp"

namespace colorsurg {

namespace {

const char kColors[] = {'r', 'g', 'b'};
const char kPaulis[] = {'x', 'y', 'z'};

unsigned swap2(unsigned v) {
    return ((v & 1u) << 1) | ((v >> 1) & 1u);
}

uint8_t map_label(const std::array<uint8_t, 4> &cols, uint8_t a) {
    uint8_t out = 0;
    for (int i = 0; i < 4; i++) {
        if ((a >> i) & 1) {
            out ^= cols[i];
        }
    }
    return out;
}

bool invertible(const std::array<uint8_t, 4> &cols) {
    std::set<uint8_t> seen;
    for (unsigned a = 0; a < 16; a++) {
        seen.insert(map_label(cols, static_cast<uint8_t>(a)));
    }
    return seen.size() == 16;
}

bool same_row(Anyon a, Anyon b) {
    return a.grid()->first == b.grid()->first;
}

bool same_col(Anyon a, Anyon b) {
    return a.grid()->second == b.grid()->second;
}

// Representative of the class a * <c> of the given type: 'A' for bosons in
// c's row, 'B' for bosons in c's column, 'F' for the fermion class.
Anyon class_rep(Anyon c, char type) {
    for (Anyon b : Anyon::bosons()) {
        if (b == c) {
            continue;
        }
        if ((type == 'A' && same_row(b, c)) || (type == 'B' && same_col(b, c))) {
            return canonical_mod(b, c);
        }
    }
    auto [i, j] = *c.grid();
    Anyon f = fuse(Anyon::boson(i, (j + 1) % 3), Anyon::boson((i + 1) % 3, j));
    return canonical_mod(f, c);
}

char class_type(Anyon a, Anyon c) {
    if (a.is_fermion()) {
        return 'F';
    }
    return same_row(a, c) ? 'A' : 'B';
}

WallAction semi_action(Anyon here, Anyon there, bool swap, Anyon a) {
    if (a == here) {
        return {WallOutcome::Condense, Anyon()};
    }
    if (braid_phase(a, here) == -1) {
        return {WallOutcome::Confine, Anyon()};
    }
    char t = class_type(a, here);
    if (swap && t != 'F') {
        t = t == 'A' ? 'B' : 'A';
    }
    return {WallOutcome::Transmit, class_rep(there, t)};
}

}  // namespace

Anyon Anyon::boson(int color, int pauli) {
    if (color < 0 || color > 2 || pauli < 0 || pauli > 2) {
        throw ValidationError("boson grid index out of range");
    }
    unsigned c = static_cast<unsigned>(color) + 1;
    unsigned x = c, z = swap2(c) << 2;
    switch (pauli) {
        case 0:
            return Anyon(static_cast<uint8_t>(x));
        case 1:
            return Anyon(static_cast<uint8_t>(x ^ z));
        default:
            return Anyon(static_cast<uint8_t>(z));
    }
}

std::array<Anyon, 9> Anyon::bosons() {
    std::array<Anyon, 9> out;
    for (int i = 0; i < 3; i++) {
        for (int j = 0; j < 3; j++) {
            out[3 * i + j] = boson(i, j);
        }
    }
    return out;
}

std::array<Anyon, 6> Anyon::fermions() {
    std::array<Anyon, 6> out;
    size_t k = 0;
    for (unsigned v = 1; v < 16; v++) {
        Anyon a(static_cast<uint8_t>(v));
        if (a.is_fermion()) {
            out[k++] = a;
        }
    }
    return out;
}

Anyon Anyon::parse(const std::string &name) {
    if (name == "1" || name == "vac" || name == "vacuum") {
        return vacuum();
    }
    auto star = name.find('*');
    if (star != std::string::npos) {
        return fuse(parse(name.substr(0, star)), parse(name.substr(star + 1)));
    }
    if (name.size() == 2) {
        const char *ci = std::find(std::begin(kColors), std::end(kColors), name[0]);
        const char *pj = std::find(std::begin(kPaulis), std::end(kPaulis), name[1]);
        if (ci != std::end(kColors) && pj != std::end(kPaulis)) {
            return boson(static_cast<int>(ci - kColors), static_cast<int>(pj - kPaulis));
        }
    }
    throw ValidationError("unknown anyon name '" + name + "'");
}

int Anyon::spin() const {
    return std::popcount(e() & m()) % 2 ? -1 : 1;
}

std::optional<std::pair<int, int>> Anyon::grid() const {
    for (int i = 0; i < 3; i++) {
        for (int j = 0; j < 3; j++) {
            if (boson(i, j) == *this) {
                return std::make_pair(i, j);
            }
        }
    }
    return std::nullopt;
}

std::string Anyon::name() const {
    if (is_vacuum()) {
        return "1";
    }
    if (auto g = grid()) {
        return std::string{kColors[g->first], kPaulis[g->second]};
    }
    for (Anyon a : bosons()) {
        for (Anyon b : bosons()) {
            if (a < b && fuse(a, b) == *this) {
                return a.name() + "*" + b.name();
            }
        }
    }
    throw std::logic_error("anyon without a name");
}

Anyon fuse(Anyon a, Anyon b) {
    return Anyon(static_cast<uint8_t>(a.bits() ^ b.bits()));
}

int braid_phase(Anyon a, Anyon b) {
    return std::popcount((a.e() & b.m()) ^ (a.m() & b.e())) % 2 ? -1 : 1;
}

Anyon canonical_mod(Anyon a, Anyon c) {
    return std::min(a, fuse(a, c));
}

bool validate_condensate(const std::vector<Anyon> &set, std::string *why) {
    auto fail = [&](const std::string &msg) {
        if (why) {
            *why = msg;
        }
        return false;
    };
    std::set<Anyon> members(set.begin(), set.end());
    for (Anyon a : set) {
        if (!a.is_boson()) {
            return fail(a.name() + " is not a boson");
        }
    }
    for (Anyon a : set) {
        for (Anyon b : set) {
            if (braid_phase(a, b) != 1) {
                return fail(a.name() + " and " + b.name() + " braid nontrivially");
            }
            Anyon f = fuse(a, b);
            if (!f.is_vacuum() && !members.count(f)) {
                return fail("fusion of " + a.name() + " and " + b.name() + " leaves the set");
            }
        }
    }
    return true;
}

bool validate_boundary(const BoundarySpec &b, std::string *why) {
    if (!validate_condensate(b.condensed, why)) {
        return false;
    }
    if (b.condensed.size() != 3) {
        if (why) {
            *why = "a gapped boundary condenses exactly three bosons";
        }
        return false;
    }
    return true;
}

std::string BoundarySpec::describe() const {
    if (condensed.size() == 3) {
        auto g0 = *condensed[0].grid(), g1 = *condensed[1].grid();
        if (g0.first == g1.first) {
            return std::string("row ") + kColors[g0.first];
        }
        if (g0.second == g1.second) {
            return std::string("column ") + kPaulis[g0.second];
        }
    }
    std::string s = "{";
    for (size_t i = 0; i < condensed.size(); i++) {
        s += (i ? "," : "") + condensed[i].name();
    }
    return s + "}";
}

std::vector<BoundarySpec> enumerate_boundaries() {
    std::vector<std::vector<Anyon>> valid;
    for (unsigned mask = 1; mask < (1u << 15); mask++) {
        std::vector<Anyon> set;
        for (unsigned v = 1; v < 16; v++) {
            if ((mask >> (v - 1)) & 1) {
                set.push_back(Anyon(static_cast<uint8_t>(v)));
            }
        }
        if (validate_condensate(set)) {
            valid.push_back(set);
        }
    }
    std::vector<BoundarySpec> out;
    for (const auto &s : valid) {
        bool maximal = std::none_of(valid.begin(), valid.end(), [&](const std::vector<Anyon> &t) {
            return t.size() > s.size() && std::includes(t.begin(), t.end(), s.begin(), s.end());
        });
        if (maximal) {
            out.push_back({s});
        }
    }
    // Rows r, g, b first, then columns x, y, z.
    auto key = [](const BoundarySpec &b) {
        auto g0 = *b.condensed[0].grid(), g1 = *b.condensed[1].grid();
        return g0.first == g1.first ? g0.first : 3 + g0.second;
    };
    std::sort(out.begin(), out.end(), [&](const BoundarySpec &a, const BoundarySpec &b) { return key(a) < key(b); });
    return out;
}

std::string wall_kind_name(WallKind k) {
    switch (k) {
        case WallKind::Transparent:
            return "transparent";
        case WallKind::SemiTransparent:
            return "semitransparent";
        default:
            return "opaque";
    }
}

WallKind wall_kind_from_name(const std::string &s) {
    if (s == "transparent") {
        return WallKind::Transparent;
    }
    if (s == "semitransparent" || s == "semi-transparent") {
        return WallKind::SemiTransparent;
    }
    if (s == "opaque") {
        return WallKind::Opaque;
    }
    throw ValidationError("unknown wall kind '" + s + "'");
}

std::string WallSpec::describe() const {
    switch (kind) {
        case WallKind::Transparent: {
            std::string s = transpose ? "transpose;" : "";
            s += "rows ";
            for (int i = 0; i < 3; i++) {
                s += std::string{kColors[i], '>', kColors[row_perm[i]]} + (i < 2 ? "," : "");
            }
            s += ";cols ";
            for (int j = 0; j < 3; j++) {
                s += std::string{kPaulis[j], '>', kPaulis[col_perm[j]]} + (j < 2 ? "," : "");
            }
            return s;
        }
        case WallKind::SemiTransparent:
            return "C=" + c_left.name() + "|" + c_right.name() + (swap_labels ? ";swap" : ";keep");
        default:
            return left.describe() + "|" + right.describe();
    }
}

WallAction wall_action(const WallSpec &w, Anyon a, Side side) {
    if (a.is_vacuum()) {
        throw ValidationError("wall_action needs a nontrivial anyon");
    }
    switch (w.kind) {
        case WallKind::Transparent: {
            if (side == Side::Left) {
                return {WallOutcome::Transmit, Anyon(map_label(w.columns, a.bits()))};
            }
            for (unsigned v = 1; v < 16; v++) {
                if (map_label(w.columns, static_cast<uint8_t>(v)) == a.bits()) {
                    return {WallOutcome::Transmit, Anyon(static_cast<uint8_t>(v))};
                }
            }
            throw ValidationError("transparent wall map is not invertible");
        }
        case WallKind::SemiTransparent:
            return side == Side::Left ? semi_action(w.c_left, w.c_right, w.swap_labels, a)
                                      : semi_action(w.c_right, w.c_left, w.swap_labels, a);
        default: {
            const auto &c = side == Side::Left ? w.left.condensed : w.right.condensed;
            bool cond = std::find(c.begin(), c.end(), a) != c.end();
            return {cond ? WallOutcome::Condense : WallOutcome::Confine, Anyon()};
        }
    }
}

std::vector<WallSpec> enumerate_transparent_walls() {
    std::vector<WallSpec> out;
    for (unsigned m = 0; m < (1u << 16); m++) {
        std::array<uint8_t, 4> cols{};
        for (int i = 0; i < 4; i++) {
            cols[i] = static_cast<uint8_t>((m >> (4 * i)) & 15u);
        }
        if (!invertible(cols)) {
            continue;
        }
        bool keeps_spin = true;
        for (unsigned v = 0; v < 16 && keeps_spin; v++) {
            keeps_spin = Anyon(static_cast<uint8_t>(v)).spin() == Anyon(map_label(cols, static_cast<uint8_t>(v))).spin();
        }
        if (!keeps_spin) {
            continue;
        }
        WallSpec w;
        w.kind = WallKind::Transparent;
        w.columns = cols;
        auto img = [&](int i, int j) { return *Anyon(map_label(cols, Anyon::boson(i, j).bits())).grid(); };
        w.transpose = img(0, 0).first != img(0, 1).first;
        for (int k = 0; k < 3; k++) {
            // Without transpose boson (i, j) lands on (row_perm[i], col_perm[j]);
            // with it, on (row_perm[j], col_perm[i]).
            w.row_perm[k] = w.transpose ? img(0, k).first : img(k, 0).first;
            w.col_perm[k] = w.transpose ? img(k, 0).second : img(0, k).second;
        }
        out.push_back(w);
    }
    std::sort(out.begin(), out.end(), [](const WallSpec &a, const WallSpec &b) {
        return std::tie(a.transpose, a.row_perm, a.col_perm) < std::tie(b.transpose, b.row_perm, b.col_perm);
    });
    return out;
}

std::vector<WallSpec> enumerate_semitransparent_walls() {
    std::vector<WallSpec> out;
    for (Anyon l : Anyon::bosons()) {
        for (Anyon r : Anyon::bosons()) {
            for (bool swap : {false, true}) {
                WallSpec w;
                w.kind = WallKind::SemiTransparent;
                w.c_left = l;
                w.c_right = r;
                w.swap_labels = swap;
                out.push_back(w);
            }
        }
    }
    return out;
}

std::vector<WallSpec> enumerate_opaque_walls() {
    std::vector<WallSpec> out;
    auto bs = enumerate_boundaries();
    for (const auto &l : bs) {
        for (const auto &r : bs) {
            WallSpec w;
            w.kind = WallKind::Opaque;
            w.left = l;
            w.right = r;
            out.push_back(w);
        }
    }
    return out;
}

bool validate_wall(const WallSpec &w, std::string *why) {
    auto fail = [&](const std::string &msg) {
        if (why) {
            *why = msg;
        }
        return false;
    };
    switch (w.kind) {
        case WallKind::Transparent: {
            if (!invertible(w.columns)) {
                return fail("map is not invertible");
            }
            for (unsigned a = 0; a < 16; a++) {
                for (unsigned b = 0; b < 16; b++) {
                    Anyon x(static_cast<uint8_t>(a)), y(static_cast<uint8_t>(b));
                    Anyon fx(map_label(w.columns, x.bits())), fy(map_label(w.columns, y.bits()));
                    if (braid_phase(x, y) != braid_phase(fx, fy)) {
                        return fail("braiding of " + x.name() + " and " + y.name() + " is not preserved");
                    }
                    if (fuse(fx, fy) != Anyon(map_label(w.columns, fuse(x, y).bits()))) {
                        return fail("fusion is not preserved");
                    }
                }
                Anyon x(static_cast<uint8_t>(a));
                if (x.spin() != Anyon(map_label(w.columns, x.bits())).spin()) {
                    return fail("spin of " + x.name() + " is not preserved");
                }
            }
            for (int i = 0; i < 3; i++) {
                for (int j = 0; j < 3; j++) {
                    auto g = *Anyon(map_label(w.columns, Anyon::boson(i, j).bits())).grid();
                    std::pair<int, int> want = w.transpose ? std::make_pair(w.row_perm[j], w.col_perm[i])
                                                           : std::make_pair(w.row_perm[i], w.col_perm[j]);
                    if (g != want) {
                        return fail("grid description does not match the map");
                    }
                }
            }
            return true;
        }
        case WallKind::SemiTransparent: {
            if (!w.c_left.is_boson() || !w.c_right.is_boson()) {
                return fail("condensed charges must be bosons");
            }
            for (Side side : {Side::Left, Side::Right}) {
                Anyon c = side == Side::Left ? w.c_left : w.c_right;
                Anyon other = side == Side::Left ? w.c_right : w.c_left;
                Side back = side == Side::Left ? Side::Right : Side::Left;
                int confined_bosons = 0;
                for (unsigned v = 1; v < 16; v++) {
                    Anyon a(static_cast<uint8_t>(v));
                    WallAction act = wall_action(w, a, side);
                    if (act.outcome == WallOutcome::Confine) {
                        confined_bosons += a.is_boson();
                        continue;
                    }
                    if (act.outcome == WallOutcome::Condense) {
                        if (a != c) {
                            return fail(a.name() + " condenses but is not the condensed charge");
                        }
                        continue;
                    }
                    if (braid_phase(act.image, other) != 1) {
                        return fail("transmitted image of " + a.name() + " is confined on the far side");
                    }
                    if (act.image.spin() != a.spin()) {
                        return fail("transmission of " + a.name() + " changes spin");
                    }
                    WallAction ret = wall_action(w, act.image, back);
                    if (ret.outcome != WallOutcome::Transmit || ret.image != canonical_mod(a, c)) {
                        return fail("transmission of " + a.name() + " does not round-trip");
                    }
                    Anyon ac = fuse(a, c);
                    if (!ac.is_vacuum()) {
                        WallAction eq = wall_action(w, ac, side);
                        if (eq.outcome != WallOutcome::Transmit || eq.image != act.image) {
                            return fail("transmission is not constant on classes mod the condensed charge");
                        }
                    }
                    for (unsigned u = 1; u < 16; u++) {
                        Anyon b(static_cast<uint8_t>(u));
                        WallAction bt = wall_action(w, b, side);
                        if (bt.outcome == WallOutcome::Transmit &&
                            braid_phase(a, b) != braid_phase(act.image, bt.image)) {
                            return fail("transmission breaks braiding of " + a.name() + " and " + b.name());
                        }
                    }
                }
                if (confined_bosons != 4) {
                    return fail("expected four confined bosons per side");
                }
            }
            return true;
        }
        default:
            return validate_boundary(w.left, why) && validate_boundary(w.right, why);
    }
}

}  // namespace colorsurg
