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

#include "colorsurg/layout.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <sstream>

#include "colorsurg/gf2.hpp"

namespace colorsurg {

namespace {

bool letters_anticommute(char a, char b) {
    auto xb = [](char p) { return p == 'X' || p == 'Y'; };
    auto zb = [](char p) { return p == 'Z' || p == 'Y'; };
    return ((xb(a) && zb(b)) != (zb(a) && xb(b)));
}

using Part = std::pair<Point, char>;
using Option = std::vector<Part>;

}  // namespace

LogicalPauli parse_logical(const std::string &text, size_t num_patches) {
    std::istringstream in(text);
    std::string tok;
    std::map<size_t, char> letters;
    while (in >> tok) {
        if (tok == "I") {
            continue;
        }
        if (tok.size() < 2 || std::string("IXYZ").find(tok[0]) == std::string::npos) {
            throw ValidationError("bad logical factor '" + tok + "'");
        }
        size_t pos = 0;
        unsigned long idx = 0;
        try {
            idx = std::stoul(tok.substr(1), &pos);
        } catch (const std::exception &) {
            throw ValidationError("bad logical factor '" + tok + "'");
        }
        if (pos != tok.size() - 1 || idx == 0) {
            throw ValidationError("bad logical factor '" + tok + "'");
        }
        if (letters.count(idx)) {
            throw ValidationError("patch " + std::to_string(idx) + " named twice in '" + text + "'");
        }
        letters[idx] = tok[0];
    }
    size_t n = num_patches;
    if (n == 0) {
        n = letters.empty() ? 0 : letters.rbegin()->first;
    }
    LogicalPauli out(n, 'I');
    for (auto [idx, p] : letters) {
        if (idx > n) {
            throw ValidationError("patch index " + std::to_string(idx) + " exceeds patch count " + std::to_string(n));
        }
        out[idx - 1] = p;
    }
    return out;
}

std::string logical_str(const LogicalPauli &p) {
    std::string out;
    for (size_t j = 0; j < p.size(); j++) {
        if (p[j] != 'I') {
            if (!out.empty()) {
                out += ' ';
            }
            out += p[j];
            out += std::to_string(j + 1);
        }
    }
    return out.empty() ? "I" : out;
}

bool logicals_commute(const LogicalPauli &a, const LogicalPauli &b) {
    size_t count = 0;
    for (size_t j = 0; j < a.size() && j < b.size(); j++) {
        count += letters_anticommute(a[j], b[j]);
    }
    return count % 2 == 0;
}

uint64_t logical_bits(const LogicalPauli &p) {
    uint64_t v = 0;
    for (size_t j = 0; j < p.size(); j++) {
        if (p[j] == 'X' || p[j] == 'Y') {
            v |= uint64_t{1} << (2 * j);
        }
        if (p[j] == 'Z' || p[j] == 'Y') {
            v |= uint64_t{1} << (2 * j + 1);
        }
    }
    return v;
}

std::vector<size_t> min_weight_perfect_matching_exact(const std::vector<std::vector<long>> &cost) {
    size_t k = cost.size();
    if (k % 2 != 0) {
        throw std::logic_error("perfect matching needs an even node count");
    }
    if (k > 26) {
        throw std::runtime_error("too many nodes for exact matching: " + std::to_string(k));
    }
    size_t full = (size_t{1} << k) - 1;
    const long inf = std::numeric_limits<long>::max() / 4;
    std::vector<long> best(full + 1, inf);
    std::vector<uint8_t> pick(full + 1, 0);
    best[full] = 0;
    for (size_t mask = full; mask-- > 0;) {
        size_t i = 0;
        while (mask >> i & 1) {
            i++;
        }
        for (size_t j = i + 1; j < k; j++) {
            if (mask >> j & 1) {
                continue;
            }
            size_t next = mask | (size_t{1} << i) | (size_t{1} << j);
            if (best[next] >= inf) {
                continue;
            }
            long c = cost[i][j] + best[next];
            if (c < best[mask]) {
                best[mask] = c;
                pick[mask] = static_cast<uint8_t>(j);
            }
        }
    }
    std::vector<size_t> mate(k);
    size_t mask = 0;
    while (mask != full) {
        size_t i = 0;
        while (mask >> i & 1) {
            i++;
        }
        size_t j = pick[mask];
        mate[i] = j;
        mate[j] = i;
        mask |= (size_t{1} << i) | (size_t{1} << j);
    }
    return mate;
}

std::vector<PauliOperator> SurgeryLayout::merged_ops() const {
    std::vector<PauliOperator> out;
    for (const auto &g : merged) {
        out.push_back(g.op);
    }
    return out;
}

PauliOperator SurgeryLayout::physical(const LogicalPauli &p) const {
    PauliOperator out(num_qubits());
    for (size_t j = 0; j < p.size(); j++) {
        if (p[j] == 'X') {
            pauli_mul_inplace(out, patch_x[j]);
        } else if (p[j] == 'Z') {
            pauli_mul_inplace(out, patch_z[j]);
        } else if (p[j] == 'Y') {
            pauli_mul_inplace(out, patch_y[j]);
        }
    }
    return out;
}

PauliOperator SurgeryLayout::red_x_product() const {
    PauliOperator out(num_qubits());
    for (const auto &g : merged) {
        if (g.kind == MergedGenerator::Kind::RedFace && g.type == 'X') {
            pauli_mul_inplace(out, g.op);
        }
    }
    return out;
}

PauliOperator SurgeryLayout::red_z_product() const {
    PauliOperator out(num_qubits());
    for (const auto &g : merged) {
        if (g.kind == MergedGenerator::Kind::RedFace && g.type == 'Z') {
            pauli_mul_inplace(out, g.op);
        }
    }
    return out;
}

namespace {

class Builder {
   public:
    Builder(SurgeryLayout &lay) : s(lay) {}

    void place(const LayoutOptions &opts) {
        int d = s.d;
        int b = s.b;
        size_t n = s.num_patches;
        int depth = opts.ancilla_depth.value_or(3 * ((d + 2) / 3) + 3);
        int gap = opts.gap.value_or(b + 3);
        int margin = opts.margin.value_or(b + 6);
        std::vector<size_t> mixed;
        for (size_t j = 0; j < n; j++) {
            if (letters_anticommute(s.la[j], s.lb[j])) {
                mixed.push_back(j);
            }
        }
        s.orientation.assign(n, 'L');
        for (size_t t = 0; t < mixed.size(); t += 2) {
            s.orientation[mixed[t]] = 'R';
        }
        // Anticommuting patches are placed in adjacent pairs.
        std::vector<bool> placed(n, false);
        for (size_t j = 0; j < n; j++) {
            if (placed[j]) {
                continue;
            }
            s.order.push_back(j);
            placed[j] = true;
            auto it = std::find(mixed.begin(), mixed.end(), j);
            if (it != mixed.end() && (it - mixed.begin()) % 2 == 0) {
                size_t mate = *(it + 1);
                s.order.push_back(mate);
                placed[mate] = true;
            }
        }
        s.c0.assign(n, 0);
        int c = 0;
        for (size_t j : s.order) {
            int want = s.orientation[j] == 'R' ? 2 : 0;
            while (mod3(c) != want) {
                c++;
            }
            s.c0[j] = c;
            c += b + 1 + gap;
        }
        s.patch_vertices.resize(n);
        s.patch_faces.resize(n);
        for (size_t j = 0; j < n; j++) {
            CodePatch patch = build_triangular_code(d, s.c0[j]);
            s.patch_vertices[j] = patch.lattice.vertices;
            s.patch_faces[j] = patch.lattice.faces;
            for (Point v : patch.lattice.vertices) {
                s.owner[v] = j;
            }
        }
        int cl = -margin;
        while (mod3(cl) != 1) {
            cl--;
        }
        int ch = *std::max_element(s.c0.begin(), s.c0.end()) + b + margin;
        while (mod3(ch) != 1) {
            ch++;
        }
        for (int r = b + 1; r <= b + depth; r++) {
            for (int col = cl; col <= ch; col++) {
                if (!is_plaquette({r, col})) {
                    s.ancilla.insert({r, col});
                }
            }
        }
        bool changed = true;
        while (changed) {
            changed = false;
            for (auto it = s.ancilla.begin(); it != s.ancilla.end();) {
                if (!s.ancilla.count(partner(*it, Color::Red))) {
                    it = s.ancilla.erase(it);
                    changed = true;
                } else {
                    ++it;
                }
            }
        }
    }

    std::vector<Point> red_plaquettes() const {
        std::set<Point> out;
        for (Point v : s.ancilla) {
            out.insert(plaquette_of_color(v, Color::Red));
        }
        return {out.begin(), out.end()};
    }

    bool parity(Point r) const {
        int count = 0;
        for (Point v : neighbors(r)) {
            if (s.ancilla.count(v)) {
                count++;
            }
            auto it = s.owner.find(v);
            if (it != s.owner.end()) {
                count += letters_anticommute(s.la[it->second], s.lb[it->second]);
            }
        }
        return count & 1;
    }

    bool under_patch(Point x) const {
        for (int c0 : s.c0) {
            if (x.r <= s.b + 2 && x.c >= c0 && x.c <= c0 + s.b) {
                return true;
            }
        }
        return false;
    }

    // Removes a minimum-weight set of red ancilla pairs so that every red
    // face acquires an even number of anticommuting factors.
    void fix_parity() {
        struct Arc {
            Point to;
            long w;
            std::pair<Point, Point> edge;
        };
        std::map<Point, std::vector<Arc>> graph;
        for (Point v : s.ancilla) {
            Point w = partner(v, Color::Red);
            if (!(v < w)) {
                continue;
            }
            Point rv = plaquette_of_color(v, Color::Red);
            Point rw = plaquette_of_color(w, Color::Red);
            long wt = (under_patch(v) || under_patch(w)) ? 50 : 1;
            graph[rv].push_back({rw, wt, {v, w}});
            graph[rw].push_back({rv, wt, {v, w}});
        }
        for (Point r : red_plaquettes()) {
            if (parity(r)) {
                s.odd_red_faces.push_back(r);
            }
        }
        size_t k = s.odd_red_faces.size();
        if (k == 0) {
            return;
        }
        // Shortest paths from each odd face.
        std::vector<std::map<Point, long>> dist(k);
        std::vector<std::map<Point, Arc>> via(k);
        for (size_t i = 0; i < k; i++) {
            using Item = std::pair<long, Point>;
            std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
            dist[i][s.odd_red_faces[i]] = 0;
            pq.push({0, s.odd_red_faces[i]});
            while (!pq.empty()) {
                auto [dd, u] = pq.top();
                pq.pop();
                if (dd > dist[i][u]) {
                    continue;
                }
                for (const Arc &a : graph[u]) {
                    auto it = dist[i].find(a.to);
                    if (it == dist[i].end() || dd + a.w < it->second) {
                        dist[i][a.to] = dd + a.w;
                        via[i][a.to] = {u, a.w, a.edge};
                        pq.push({dd + a.w, a.to});
                    }
                }
            }
        }
        const long unreachable = 1L << 40;
        std::vector<std::vector<long>> cost(k, std::vector<long>(k, 0));
        for (size_t i = 0; i < k; i++) {
            for (size_t j = 0; j < k; j++) {
                auto it = dist[i].find(s.odd_red_faces[j]);
                cost[i][j] = it == dist[i].end() ? unreachable : it->second;
            }
        }
        auto mate = min_weight_perfect_matching_exact(cost);
        std::set<std::pair<Point, Point>> removed;
        for (size_t i = 0; i < k; i++) {
            size_t j = mate[i];
            if (j < i) {
                continue;
            }
            if (cost[i][j] >= unreachable) {
                throw std::runtime_error("odd red faces cannot be paired inside the ancilla region");
            }
            Point cur = s.odd_red_faces[j];
            while (cur != s.odd_red_faces[i]) {
                const Arc &a = via[i].at(cur);
                if (!removed.insert(a.edge).second) {
                    removed.erase(a.edge);
                }
                cur = a.to;
            }
        }
        for (const auto &e : removed) {
            s.ancilla.erase(e.first);
            s.ancilla.erase(e.second);
            s.removed_edges.push_back(e);
        }
    }

    PauliOperator op(const Option &parts) const {
        PauliOperator p(s.num_qubits());
        for (const auto &[v, letter] : parts) {
            p.set(s.index.at(v), letter);
        }
        return p;
    }

    void build() {
        for (const auto &tri : s.patch_vertices) {
            s.qubits.insert(s.qubits.end(), tri.begin(), tri.end());
        }
        std::sort(s.qubits.begin(), s.qubits.end());
        s.num_data = s.qubits.size();
        s.qubits.insert(s.qubits.end(), s.ancilla.begin(), s.ancilla.end());
        for (size_t i = 0; i < s.qubits.size(); i++) {
            s.index[s.qubits[i]] = i;
        }
        size_t n = s.num_qubits();

        std::vector<PauliOperator> gens;
        s.red_faces = red_plaquettes();
        for (Point r : s.red_faces) {
            for (char t : {'X', 'Z'}) {
                const LogicalPauli &lp = t == 'X' ? s.la : s.lb;
                Option parts;
                for (Point v : neighbors(r)) {
                    if (s.ancilla.count(v)) {
                        parts.push_back({v, t});
                    }
                }
                for (Point v : neighbors(r)) {
                    auto it = s.owner.find(v);
                    if (it != s.owner.end() && lp[it->second] != 'I') {
                        parts.push_back({v, lp[it->second]});
                    }
                }
                s.merged.push_back({MergedGenerator::Kind::RedFace, r, t, op(parts)});
                gens.push_back(s.merged.back().op);
            }
        }

        std::set<Point> touched;
        for (Point v : s.ancilla) {
            for (Point q : plaquettes_of(v)) {
                touched.insert(q);
            }
        }
        std::set<Point> data_face_centers;
        auto accept = [&](MergedGenerator::Kind kind, Point face, char type, const std::vector<Option> &set) {
            std::vector<PauliOperator> gs;
            for (const auto &o : set) {
                gs.push_back(op(o));
            }
            for (const auto &g : gs) {
                for (const auto &h : gens) {
                    if (!commutes(g, h)) {
                        return false;
                    }
                }
                for (const auto &h : gs) {
                    if (!commutes(g, h)) {
                        return false;
                    }
                }
            }
            for (size_t i = 0; i < gs.size(); i++) {
                gens.push_back(gs[i]);
                char t = gs.size() == 1 ? type : static_cast<char>(type + i);
                s.merged.push_back({kind, face, t, gs[i]});
            }
            return true;
        };

        for (size_t j = 0; j < s.num_patches; j++) {
            for (const Face &f : s.patch_faces[j]) {
                data_face_centers.insert(f.center);
                std::vector<Point> sup;
                for (size_t li : f.vertices) {
                    sup.push_back(s.patch_vertices[j][li]);
                }
                auto plain = [&](char t) {
                    Option o;
                    for (Point v : sup) {
                        o.push_back({v, t});
                    }
                    return o;
                };
                std::vector<std::vector<Option>> sets;
                bool trivial = s.la[j] == 'I' && s.lb[j] == 'I';
                if (touched.count(f.center) && !trivial) {
                    std::vector<Point> anc;
                    for (Point v : neighbors(f.center)) {
                        if (s.ancilla.count(v)) {
                            anc.push_back(v);
                        }
                    }
                    std::vector<std::pair<char, char>> singles;
                    for (char t : {'X', 'Z', 'Y'}) {
                        for (char dt : {'X', 'Z', 'Y'}) {
                            singles.push_back({dt, t});
                        }
                    }
                    for (char dt : {'X', 'Z', 'Y'}) {
                        singles.push_back({dt, 0});
                    }
                    struct Scored {
                        int merged;
                        int y_anc;
                        std::vector<Option> set;
                    };
                    std::vector<Scored> scored;
                    for (size_t a = 0; a < singles.size(); a++) {
                        for (size_t c = a + 1; c < singles.size(); c++) {
                            if (singles[a].first == singles[c].first) {
                                continue;
                            }
                            Scored sc{0, 0, {}};
                            for (auto [dt, at] : {singles[a], singles[c]}) {
                                Option o = plain(dt);
                                if (at) {
                                    for (Point v : anc) {
                                        o.push_back({v, at});
                                    }
                                    if (!anc.empty()) {
                                        sc.merged++;
                                    }
                                    if (at == 'Y') {
                                        sc.y_anc += static_cast<int>(anc.size());
                                    }
                                }
                                sc.set.push_back(o);
                            }
                            scored.push_back(sc);
                        }
                    }
                    std::stable_sort(scored.begin(), scored.end(), [](const Scored &x, const Scored &y) {
                        if (x.merged != y.merged) {
                            return x.merged > y.merged;
                        }
                        return x.y_anc < y.y_anc;
                    });
                    for (auto &sc : scored) {
                        sets.push_back(std::move(sc.set));
                    }
                } else {
                    sets.push_back({plain('X'), plain('Z')});
                }
                bool ok = false;
                for (const auto &set : sets) {
                    if (accept(MergedGenerator::Kind::DataFace, f.center, '0', set)) {
                        ok = true;
                        break;
                    }
                }
                (void)ok;
            }
        }

        for (Point p : touched) {
            if (plaquette_color(p) == Color::Red || data_face_centers.count(p)) {
                continue;
            }
            std::vector<Point> anc, data;
            std::vector<size_t> js;
            for (Point v : neighbors(p)) {
                if (s.ancilla.count(v)) {
                    anc.push_back(v);
                }
                auto it = s.owner.find(v);
                if (it != s.owner.end()) {
                    data.push_back(v);
                    if (std::find(js.begin(), js.end(), it->second) == js.end()) {
                        js.push_back(it->second);
                    }
                }
            }
            std::sort(js.begin(), js.end());
            for (char t : {'X', 'Z'}) {
                size_t total = 1;
                for (size_t i = 0; i < js.size(); i++) {
                    total *= 4;
                }
                for (size_t code = 0; code < total; code++) {
                    std::map<size_t, char> letter;
                    size_t rest = code;
                    for (size_t i = js.size(); i-- > 0;) {
                        letter[js[i]] = "IXYZ"[rest % 4];
                        rest /= 4;
                    }
                    Option o;
                    for (Point v : anc) {
                        o.push_back({v, t});
                    }
                    for (Point v : data) {
                        char l = letter[s.owner.at(v)];
                        if (l != 'I') {
                            o.push_back({v, l});
                        }
                    }
                    if (accept(MergedGenerator::Kind::AncillaFace, p, t, {o})) {
                        break;
                    }
                }
            }
        }

        std::set<std::pair<Point, Point>> edges;
        for (Point v : s.ancilla) {
            Point w = partner(v, Color::Red);
            edges.insert(v < w ? std::make_pair(v, w) : std::make_pair(w, v));
        }
        s.red_edges.assign(edges.begin(), edges.end());
        for (size_t j = 0; j < s.num_patches; j++) {
            for (const Face &f : s.patch_faces[j]) {
                std::vector<size_t> q;
                for (size_t li : f.vertices) {
                    q.push_back(s.index.at(s.patch_vertices[j][li]));
                }
                s.data_stabilizers.push_back(pauli_on(n, q, 'X'));
                s.data_stabilizers.push_back(pauli_on(n, q, 'Z'));
            }
        }
        for (const auto &[u, v] : s.red_edges) {
            std::vector<size_t> q{s.index.at(u), s.index.at(v)};
            s.ancilla_stabilizers.push_back(pauli_on(n, q, 'X'));
            s.ancilla_stabilizers.push_back(pauli_on(n, q, 'Z'));
        }
        for (size_t j = 0; j < s.num_patches; j++) {
            std::vector<size_t> q;
            for (Point v : s.patch_vertices[j]) {
                q.push_back(s.index.at(v));
            }
            s.patch_x.push_back(pauli_on(n, q, 'X'));
            s.patch_z.push_back(pauli_on(n, q, 'Z'));
            s.patch_y.push_back(pauli_mul(s.patch_z.back(), s.patch_x.back()));
        }
    }

   private:
    SurgeryLayout &s;
};

}  // namespace

SurgeryLayout build_layout(int d, const LogicalPauli &la, const LogicalPauli &lb, const LayoutOptions &opts) {
    if (d < 3 || d % 2 == 0) {
        throw ValidationError("distance must be odd and >= 3, got " + std::to_string(d));
    }
    if (la.size() != lb.size() || la.empty()) {
        throw ValidationError("logical operators must act on the same nonzero number of patches");
    }
    if (la.size() > 16) {
        throw ValidationError("at most 16 patches are supported");
    }
    auto identity = [](const LogicalPauli &p) { return std::all_of(p.begin(), p.end(), [](char c) { return c == 'I'; }); };
    if (identity(la)) {
        throw ValidationError("L_A must be a non-identity logical operator");
    }
    if (!logicals_commute(la, lb)) {
        throw ValidationError("logical operators " + logical_str(la) + " and " + logical_str(lb) + " anticommute");
    }
    SurgeryLayout lay;
    lay.d = d;
    lay.b = 3 * (d - 1) / 2;
    lay.num_patches = la.size();
    lay.la = la;
    lay.lb = lb;
    Builder builder(lay);
    builder.place(opts);
    if (opts.fix_parity) {
        builder.fix_parity();
    }
    builder.build();
    return lay;
}

LayoutCheck check_layout(const SurgeryLayout &lay) {
    LayoutCheck out;
    auto sm = lay.merged_ops();
    for (size_t i = 0; i < sm.size(); i++) {
        for (size_t j = i + 1; j < sm.size(); j++) {
            out.noncommuting_pairs += !commutes(sm[i], sm[j]);
        }
    }
    size_t n = lay.num_qubits();
    Gf2Basis all(2 * n);
    Gf2Basis merged_only(2 * n);
    for (const auto &g : sm) {
        all.add(symplectic_vector(g));
        merged_only.add(symplectic_vector(g));
    }
    for (const auto &g : lay.ancilla_stabilizers) {
        all.add(symplectic_vector(g));
        merged_only.add(symplectic_vector(g));
    }
    for (const auto &g : lay.data_stabilizers) {
        all.add(symplectic_vector(g));
        out.lost_data_stabilizers += !merged_only.contains(symplectic_vector(g));
    }
    // Residuals modulo the stabilizer span are linear in the operator, so the
    // measured logicals are the kernel of the residual map.
    size_t np = lay.num_patches;
    std::vector<BitVec> residuals;
    for (size_t j = 0; j < np; j++) {
        residuals.push_back(all.reduce(symplectic_vector(lay.patch_x[j])));
        residuals.push_back(all.reduce(symplectic_vector(lay.patch_z[j])));
    }
    auto kernel = gf2_left_kernel(residuals, 2 * n);
    if (kernel.size() > 12) {
        throw std::runtime_error("merged code measures too many logical operators to enumerate");
    }
    for (uint64_t sel = 1; sel < (uint64_t{1} << kernel.size()); sel++) {
        BitVec acc(words_for(2 * np), 0);
        for (size_t i = 0; i < kernel.size(); i++) {
            if (sel >> i & 1) {
                bits_xor(acc, kernel[i]);
            }
        }
        out.measured.insert(acc[0]);
    }
    uint64_t a = logical_bits(lay.la);
    uint64_t b = logical_bits(lay.lb);
    for (uint64_t v : {a, b, a ^ b}) {
        if (v) {
            out.expected.insert(v);
        }
    }
    return out;
}

}  // namespace colorsurg
