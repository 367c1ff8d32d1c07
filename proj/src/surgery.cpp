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

#include "colorsurg/surgery.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

#include "colorsurg/gf2.hpp"

namespace colorsurg {

namespace {

bool logical_symplectic(uint64_t u, uint64_t v) {
    uint64_t ex = 0x5555555555555555ULL;
    uint64_t ux = u & ex, uz = (u >> 1) & ex;
    uint64_t vx = v & ex, vz = (v >> 1) & ex;
    return std::popcount((ux & vz) ^ (uz & vx)) & 1;
}

LogicalPauli logical_from_bits(uint64_t v, size_t n) {
    LogicalPauli out(n, 'I');
    for (size_t j = 0; j < n; j++) {
        bool x = v >> (2 * j) & 1;
        bool z = v >> (2 * j + 1) & 1;
        out[j] = x ? (z ? 'Y' : 'X') : (z ? 'Z' : 'I');
    }
    return out;
}

// Syndrome of p against a list of operators, as a bit vector.
BitVec syndrome(const PauliOperator &p, const std::vector<PauliOperator> &checks) {
    BitVec v(words_for(checks.size() + 1), 0);
    for (size_t i = 0; i < checks.size(); i++) {
        if (!commutes(p, checks[i])) {
            bit_flip(v, i);
        }
    }
    return v;
}

int product(const MeasurementRecord &rec, const std::vector<size_t> &ids) {
    int s = 1;
    for (size_t id : ids) {
        s *= rec.entries.at(id).outcome;
    }
    return s;
}

std::vector<PauliOperator> split_ops(const SurgeryLayout &lay) {
    std::vector<PauliOperator> out = lay.ancilla_stabilizers;
    out.insert(out.end(), lay.data_stabilizers.begin(), lay.data_stabilizers.end());
    return out;
}

uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

}  // namespace

uint64_t trial_seed(uint64_t seed0, uint64_t index) {
    return splitmix64(splitmix64(seed0) ^ index);
}

PauliOperator logical_operator(const LogicalPauli &p) {
    PauliOperator out(p.size());
    for (size_t j = 0; j < p.size(); j++) {
        out.set(j, p[j]);
    }
    return out;
}

std::string initial_state_name(InitialState s) {
    switch (s) {
        case InitialState::Zero:
            return "zero";
        case InitialState::Plus:
            return "plus";
        case InitialState::Random:
            return "random";
        default:
            return "eigen-ab";
    }
}

InitialState initial_state_from_name(const std::string &s) {
    if (s == "zero") {
        return InitialState::Zero;
    }
    if (s == "plus") {
        return InitialState::Plus;
    }
    if (s == "random") {
        return InitialState::Random;
    }
    if (s == "eigen-ab") {
        return InitialState::EigenAB;
    }
    throw ValidationError("unknown initial state '" + s + "'");
}

bool LeakageReport::ok() const {
    if (measured != expected || noncommuting_pairs != 0 || lost_data_stabilizers != 0) {
        return false;
    }
    return std::none_of(witnesses.begin(), witnesses.end(), [](const LeakageWitness &w) { return w.u_in_stabilizer; });
}

LeakageReport verify_no_leakage(const SurgeryLayout &lay) {
    LeakageReport rep;
    LayoutCheck chk = check_layout(lay);
    rep.measured = chk.measured;
    rep.expected = chk.expected;
    rep.noncommuting_pairs = chk.noncommuting_pairs;
    rep.lost_data_stabilizers = chk.lost_data_stabilizers;

    size_t n = lay.num_qubits();
    size_t nd = lay.num_data;
    auto sm = lay.merged_ops();
    // Restriction to the data qubits, in symplectic form.
    auto data_part = [&](const PauliOperator &p) {
        BitVec v(words_for(2 * nd), 0);
        for (size_t q = 0; q < nd; q++) {
            if (p.x(q)) {
                bit_flip(v, q);
            }
            if (p.z(q)) {
                bit_flip(v, nd + q);
            }
        }
        return v;
    };
    Gf2Basis restricted(2 * nd);
    for (size_t i = 0; i < sm.size(); i++) {
        restricted.add(data_part(sm[i]), i);
    }
    for (size_t i = 0; i < lay.data_stabilizers.size(); i++) {
        restricted.add(data_part(lay.data_stabilizers[i]), sm.size() + i);
    }
    Gf2Basis stab(2 * n);
    for (const auto &g : lay.data_stabilizers) {
        stab.add(symplectic_vector(g));
    }
    for (const auto &g : lay.ancilla_stabilizers) {
        stab.add(symplectic_vector(g));
    }
    uint64_t a = logical_bits(lay.la), b = logical_bits(lay.lb);
    for (size_t j = 0; j < lay.num_patches; j++) {
        for (int kind = 1; kind <= 3; kind++) {
            uint64_t v = static_cast<uint64_t>(kind) << (2 * j);
            if (v == a || v == b || v == (a ^ b)) {
                continue;
            }
            LeakageWitness w;
            w.logical = logical_from_bits(v, lay.num_patches);
            PauliOperator l = lay.physical(w.logical);
            std::vector<size_t> combo;
            BitVec res = restricted.reduce(data_part(l), &combo);
            if (bits_zero(res)) {
                // U = L * (chosen merged generators) agrees with S on the data.
                PauliOperator u = l;
                for (size_t t : combo) {
                    if (t < sm.size()) {
                        pauli_mul_inplace(u, sm[t]);
                    }
                }
                w.in_merged_span = true;
                for (const auto &e : lay.ancilla_stabilizers) {
                    w.anticommuting_edges += !commutes(u, e);
                }
                w.u_in_stabilizer = stab.contains(symplectic_vector(u));
            }
            rep.witnesses.push_back(w);
        }
    }
    return rep;
}

SurgeryProtocol::SurgeryProtocol(SurgeryLayout layout) : lay_(std::move(layout)) {
    for (size_t i = 0; i < lay_.merged.size(); i++) {
        const auto &g = lay_.merged[i];
        if (g.kind == MergedGenerator::Kind::RedFace) {
            (g.type == 'X' ? red_x_ids_ : red_z_ids_).push_back(i);
        }
    }
    recipe_a_ = logical_recipe(lay_.physical(lay_.la), true);
    recipe_b_ = logical_recipe(lay_.physical(lay_.lb), false);

    size_t n = lay_.num_qubits();
    // Pure errors: per patch, a Pauli of the opposite type hitting exactly one
    // face and commuting with the transversal logicals.
    size_t offset = 0;
    for (size_t j = 0; j < lay_.num_patches; j++) {
        const auto &faces = lay_.patch_faces[j];
        const auto &verts = lay_.patch_vertices[j];
        size_t nf = faces.size();
        Gf2Basis basis(nf + 1);
        for (size_t q = 0; q < verts.size(); q++) {
            BitVec col(words_for(nf + 1), 0);
            for (size_t f = 0; f < nf; f++) {
                if (std::find(faces[f].vertices.begin(), faces[f].vertices.end(), q) != faces[f].vertices.end()) {
                    bit_flip(col, f);
                }
            }
            bit_flip(col, nf);
            basis.add(col, q);
        }
        for (size_t f = 0; f < nf; f++) {
            BitVec target(words_for(nf + 1), 0);
            bit_flip(target, f);
            std::vector<size_t> combo;
            if (!bits_zero(basis.reduce(target, &combo))) {
                throw std::logic_error("no pure error for a data face");
            }
            std::vector<size_t> qs;
            for (size_t q : combo) {
                qs.push_back(lay_.index.at(verts[q]));
            }
            pure_errors_.push_back(pauli_on(n, qs, 'Z'));  // flips the X-type face
            pure_errors_.push_back(pauli_on(n, qs, 'X'));  // flips the Z-type face
        }
        offset += 2 * nf;
    }
    if (offset != lay_.data_stabilizers.size()) {
        throw std::logic_error("pure error count mismatch");
    }

    // Frame logicals: complement of <L_A, L_B> inside their commutant.
    size_t np = lay_.num_patches;
    uint64_t a = logical_bits(lay_.la), b = logical_bits(lay_.lb);
    std::vector<BitVec> cols;
    for (size_t i = 0; i < 2 * np; i++) {
        BitVec c(1, 0);
        uint64_t e = uint64_t{1} << i;
        c[0] = (logical_symplectic(e, a) ? 1u : 0u) | (logical_symplectic(e, b) ? 2u : 0u);
        cols.push_back(c);
    }
    auto kernel = gf2_left_kernel(cols, 2);
    Gf2Basis span(2 * np);
    auto sm = lay_.merged_ops();
    auto sp = split_ops(lay_);
    Gf2Basis fixers(sm.size() + 1);
    for (size_t i = 0; i < sp.size(); i++) {
        fixers.add(syndrome(sp[i], sm), i);
    }
    // Split-group elements that dress a logical into an operator commuting with
    // every merged generator. The dressed operator keeps its value throughout.
    auto dressing = [&](const LogicalPauli &q) {
        std::vector<size_t> combo;
        if (!bits_zero(fixers.reduce(syndrome(lay_.physical(q), sm), &combo))) {
            throw std::runtime_error("logical " + logical_str(q) + " cannot be carried through the merge");
        }
        return combo;
    };
    for (uint64_t v : {a, b}) {
        BitVec bv{v};
        if (span.add(bv)) {
            fixed_logicals_.push_back(logical_from_bits(v, np));
            fixed_split_ids_.push_back(dressing(fixed_logicals_.back()));
        }
    }
    dress_a_ = dressing(lay_.la);
    dress_b_ = dressing(lay_.lb);
    for (const auto &k : kernel) {
        if (!span.add(k)) {
            continue;
        }
        frame_logicals_.push_back(logical_from_bits(k[0], np));
        frame_split_ids_.push_back(dressing(frame_logicals_.back()));
    }
}

SurgeryProtocol::Recipe SurgeryProtocol::logical_recipe(const PauliOperator &target, bool red_x) const {
    Recipe r;
    r.merged = red_x ? red_x_ids_ : red_z_ids_;
    PauliOperator acc = red_x ? lay_.red_x_product() : lay_.red_z_product();
    for (size_t k = 0; k < lay_.red_edges.size(); k++) {
        size_t id = 2 * k + (red_x ? 0 : 1);
        r.split.push_back(id);
        pauli_mul_inplace(acc, lay_.ancilla_stabilizers[id]);
    }
    for (size_t q = lay_.num_data; q < lay_.num_qubits(); q++) {
        if (acc.at(q) != 'I') {
            throw std::logic_error("red-face product leaves support on the ancilla");
        }
    }
    size_t nd = lay_.data_stabilizers.size();
    Gf2Basis basis(2 * lay_.num_qubits());
    for (size_t i = 0; i < nd; i++) {
        basis.add(symplectic_vector(lay_.data_stabilizers[i]), i);
    }
    basis.add(symplectic_vector(target), nd);
    std::vector<size_t> combo;
    bool trivial = target.is_identity_up_to_sign();
    if (!bits_zero(basis.reduce(symplectic_vector(acc), &combo)) ||
        (!trivial && std::find(combo.begin(), combo.end(), nd) == combo.end())) {
        throw std::logic_error("Q*S does not restrict to the logical operator");
    }
    PauliOperator prod = target;
    for (size_t t : combo) {
        if (t < nd) {
            pauli_mul_inplace(prod, lay_.data_stabilizers[t]);
            r.split.push_back(lay_.ancilla_stabilizers.size() + t);
        }
    }
    r.negative = prod.negative() != acc.negative();
    return r;
}

std::vector<size_t> SurgeryProtocol::observable_edges(char which) const {
    const Recipe &rc = which == 'A' ? recipe_a_ : recipe_b_;
    const auto &dress = which == 'A' ? dress_a_ : dress_b_;
    size_t na = lay_.ancilla_stabilizers.size();
    std::vector<uint8_t> odd(na, 0);
    for (const auto *ids : {&rc.split, &dress}) {
        for (size_t id : *ids) {
            if (id < na) {
                odd[id] ^= 1;
            }
        }
    }
    std::vector<size_t> out;
    for (size_t i = 0; i < na; i++) {
        if (odd[i]) {
            out.push_back(i);
        }
    }
    return out;
}

void SurgeryProtocol::encode(StabilizerTableau &t) const {
    for (const auto &s : lay_.data_stabilizers) {
        t.measure_forced(s, +1);
    }
}

void SurgeryProtocol::load_logical_state(StabilizerTableau &t, const StabilizerTableau &ref, BitSource &bits) const {
    size_t np = lay_.num_patches;
    std::vector<PauliOperator> phys;
    for (size_t i = 0; i < np; i++) {
        PauliOperator g = ref.stabilizer(i);
        LogicalPauli letters(np);
        for (size_t j = 0; j < np; j++) {
            letters[j] = g.at(j);
        }
        PauliOperator p = lay_.physical(letters);
        p.set_negative(p.negative() != g.negative());
        t.measure(p, bits);
        phys.push_back(p);
    }
    for (size_t i = 0; i < np; i++) {
        if (t.expectation(phys[i]) == Expectation::Minus) {
            PauliOperator d = ref.destabilizer(i);
            LogicalPauli letters(np);
            for (size_t j = 0; j < np; j++) {
                letters[j] = d.at(j);
            }
            t.apply_pauli(lay_.physical(letters));
        }
    }
}

void SurgeryProtocol::prepare_ancilla(StabilizerTableau &t) const {
    for (const auto &s : lay_.ancilla_stabilizers) {
        t.measure_forced(s, +1);
    }
}

MeasurementRecord SurgeryProtocol::merge(StabilizerTableau &t, BitSource &bits) const {
    MeasurementRecord rec{"merge", {}};
    for (size_t i = 0; i < lay_.merged.size(); i++) {
        MeasureResult m = t.measure(lay_.merged[i].op, bits);
        rec.entries.push_back({i, lay_.merged[i].op, m.outcome, m.deterministic});
    }
    return rec;
}

MeasurementRecord SurgeryProtocol::split(StabilizerTableau &t, BitSource &bits) const {
    MeasurementRecord rec{"split", {}};
    auto ops = split_ops(lay_);
    for (size_t i = 0; i < ops.size(); i++) {
        MeasureResult m = t.measure(ops[i], bits);
        rec.entries.push_back({i, ops[i], m.outcome, m.deterministic});
    }
    return rec;
}

SurgeryResult SurgeryProtocol::infer_outcomes(const MeasurementRecord &merge_rec,
                                              const MeasurementRecord &split_rec) const {
    if (merge_rec.phase != "merge" || split_rec.phase != "split" ||
        merge_rec.entries.size() != lay_.merged.size() || split_rec.entries.size() != split_size()) {
        throw ValidationError("measurement records do not match the layout");
    }
    SurgeryResult r;
    size_t na = lay_.ancilla_stabilizers.size();
    auto fill = [&](const Recipe &rc, const std::vector<size_t> &dress, int &q, int &s, int &sign, int &f, int &out) {
        q = product(merge_rec, rc.merged);
        s = 1;
        f = 1;
        for (size_t id : rc.split) {
            (id < na ? s : f) *= split_rec.entries.at(id).outcome;
        }
        f *= product(split_rec, dress);
        sign = rc.negative ? -1 : 1;
        out = sign * q * s * f;
    };
    fill(recipe_a_, dress_a_, r.q_a, r.s_a, r.sign_a, r.f_a, r.outcome_a);
    fill(recipe_b_, dress_b_, r.q_b, r.s_b, r.sign_b, r.f_b, r.outcome_b);
    return r;
}

PauliOperator SurgeryProtocol::correction(const MeasurementRecord &split_rec) const {
    size_t na = lay_.ancilla_stabilizers.size();
    PauliOperator out(lay_.num_qubits());
    for (size_t i = 0; i < pure_errors_.size(); i++) {
        if (split_rec.entries.at(na + i).outcome < 0) {
            pauli_mul_inplace(out, pure_errors_[i]);
        }
    }
    // Logical byproduct: anticommutes with frame logical k iff its recorded
    // sign is -1, commutes with L_A and L_B.
    size_t np = lay_.num_patches;
    std::vector<uint64_t> rows;
    uint64_t target = 0;
    for (size_t k = 0; k < frame_logicals_.size(); k++) {
        rows.push_back(logical_bits(frame_logicals_[k]));
        if (product(split_rec, frame_split_ids_[k]) < 0) {
            target |= uint64_t{1} << k;
        }
    }
    for (size_t k = 0; k < fixed_logicals_.size(); k++) {
        if (product(split_rec, fixed_split_ids_[k]) < 0) {
            target |= uint64_t{1} << rows.size();
        }
        rows.push_back(logical_bits(fixed_logicals_[k]));
    }
    Gf2Basis basis(rows.size() + 1);
    for (size_t i = 0; i < 2 * np; i++) {
        BitVec col(words_for(rows.size() + 1), 0);
        for (size_t k = 0; k < rows.size(); k++) {
            if (logical_symplectic(uint64_t{1} << i, rows[k])) {
                bit_flip(col, k);
            }
        }
        basis.add(col, i);
    }
    BitVec tv(words_for(rows.size() + 1), 0);
    tv[0] = target;
    std::vector<size_t> combo;
    if (!bits_zero(basis.reduce(tv, &combo))) {
        throw std::logic_error("no logical byproduct matches the recorded frame");
    }
    uint64_t bvec = 0;
    for (size_t i : combo) {
        bvec ^= uint64_t{1} << i;
    }
    pauli_mul_inplace(out, lay_.physical(logical_from_bits(bvec, np)));
    out.set_negative(false);
    return out;
}

TrialReport run_reference_trial(const SurgeryProtocol &proto, uint64_t seed, InitialState init) {
    const SurgeryLayout &lay = proto.layout();
    size_t np = lay.num_patches;
    TrialReport rep;
    rep.seed = seed;
    SeededBits bits(seed);
    StabilizerTableau ref(np);
    PauliOperator la = logical_operator(lay.la), lb = logical_operator(lay.lb);
    switch (init) {
        case InitialState::Zero:
            break;
        case InitialState::Plus:
            for (size_t j = 0; j < np; j++) {
                ref.measure_forced(logical_operator(parse_logical("X" + std::to_string(j + 1), np)), +1);
            }
            break;
        case InitialState::Random:
            for (size_t r = 0; r < 2 * np; r++) {
                LogicalPauli p(np);
                for (size_t j = 0; j < np; j++) {
                    p[j] = "IXYZ"[(bits.next_bit() ? 2 : 0) + (bits.next_bit() ? 1 : 0)];
                }
                if (std::any_of(p.begin(), p.end(), [](char c) { return c != 'I'; })) {
                    ref.measure(logical_operator(p), bits);
                }
            }
            break;
        case InitialState::EigenAB:
            ref.measure_forced(la, +1);
            ref.measure_forced(lb, +1);
            break;
    }

    StabilizerTableau t(lay.num_qubits());
    proto.encode(t);
    rep.trace.push_back("encode");
    proto.load_logical_state(t, ref, bits);
    rep.trace.push_back("load-logical");
    proto.prepare_ancilla(t);
    rep.trace.push_back("prepare-ancilla");
    bool det_a = t.expectation(lay.physical(lay.la)) != Expectation::Undetermined;
    bool det_b = t.expectation(lay.physical(lay.lb)) != Expectation::Undetermined;
    MeasurementRecord m = proto.merge(t, bits);
    rep.trace.push_back("merge");
    rep.merge_windows++;
    MeasurementRecord s = proto.split(t, bits);
    rep.trace.push_back("split");
    rep.result = proto.infer_outcomes(m, s);
    rep.result.deterministic_a = det_a;
    rep.result.deterministic_b = det_b;
    t.apply_pauli(proto.correction(s));
    rep.trace.push_back("correct");

    std::string diff;
    auto reference_measure = [&](const PauliOperator &l, int lattice, const char *name) {
        Expectation e = ref.expectation(l);
        if (e == Expectation::Undetermined) {
            ref.measure_forced(l, lattice);
            return lattice;
        }
        int v = e == Expectation::Plus ? 1 : -1;
        if (v != lattice) {
            diff += std::string(name) + " outcome differs from the deterministic reference; ";
        }
        return v;
    };
    rep.reference_a = reference_measure(la, rep.result.outcome_a, "L_A");
    rep.reference_b = reference_measure(lb, rep.result.outcome_b, "L_B");

    for (const auto &st : lay.data_stabilizers) {
        if (t.expectation(st) != Expectation::Plus) {
            diff += "data stabilizer not restored; ";
            break;
        }
    }
    uint64_t a = logical_bits(lay.la), b = logical_bits(lay.lb);
    auto compare = [&](uint64_t v) {
        if (logical_symplectic(v, a) || logical_symplectic(v, b)) {
            return;
        }
        LogicalPauli p = logical_from_bits(v, np);
        Expectation er = ref.expectation(logical_operator(p));
        Expectation ep = t.expectation(lay.physical(p));
        rep.compared_logicals++;
        if (er != ep) {
            diff += "expectation of " + logical_str(p) + " differs; ";
        }
    };
    if (np <= 5) {
        for (uint64_t v = 1; v < (uint64_t{1} << (2 * np)); v++) {
            compare(v);
        }
    } else {
        for (size_t i = 0; i < 2 * np; i++) {
            for (size_t k = i; k < 2 * np; k++) {
                compare((uint64_t{1} << i) ^ (k == i ? 0 : uint64_t{1} << k));
            }
        }
    }
    rep.diff = diff;
    rep.agree = diff.empty();
    return rep;
}

ReferenceSummary verify_against_reference(const SurgeryProtocol &proto, uint64_t seed0, size_t trials, unsigned threads,
                                          InitialState init) {
    ReferenceSummary sum;
    sum.trials.resize(trials);
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (size_t i = next++; i < trials; i = next++) {
            sum.trials[i] = run_reference_trial(proto, trial_seed(seed0, i), init);
        }
    };
    threads = std::max(1u, threads);
    std::vector<std::thread> pool;
    for (unsigned k = 1; k < threads; k++) {
        pool.emplace_back(worker);
    }
    worker();
    for (auto &th : pool) {
        th.join();
    }
    for (const auto &t : sum.trials) {
        sum.agreements += t.agree;
    }
    return sum;
}

}  // namespace colorsurg
