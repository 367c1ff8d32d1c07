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

#include "colorsurg/tableau.hpp"

#include <algorithm>

#include "colorsurg/kernels.hpp"

namespace colorsurg {

bool SeededBits::next_bit() {
    if (left_ == 0) {
        buffer_ = gen_();
        left_ = 64;
    }
    bool b = buffer_ & 1;
    buffer_ >>= 1;
    left_--;
    return b;
}

StabilizerTableau::StabilizerTableau(size_t n)
    : n_(n), words_(words_for(n)), data_(2 * n * 2 * words_for(n), 0), signs_(2 * n, 0) {
    for (size_t q = 0; q < n; q++) {
        row_x(q)[q >> 6] |= uint64_t{1} << (q & 63);
        row_z(n + q)[q >> 6] |= uint64_t{1} << (q & 63);
    }
}

bool StabilizerTableau::row_anticommutes(size_t r, const PauliOperator &p) const {
    return active_kernels().anticommutes(row_x(r), row_z(r), p.x_words(), p.z_words(), words_);
}

bool StabilizerTableau::rows_anticommute(size_t a, size_t b) const {
    return active_kernels().anticommutes(row_x(a), row_z(a), row_x(b), row_z(b), words_);
}

void StabilizerTableau::row_mul(size_t target, size_t source) {
    const Kernels &k = active_kernels();
    unsigned e = k.mul_phase(row_x(target), row_z(target), row_x(source), row_z(source), words_);
    e = (e + 2 * (signs_[target] + signs_[source])) & 3;
    // Stabilizer rows always multiply to a real phase. Destabilizer signs
    // carry no meaning, so an odd exponent there is simply truncated.
    signs_[target] = (e >> 1) & 1;
}

PauliOperator StabilizerTableau::row(size_t r) const {
    PauliOperator p(n_);
    std::copy(row_x(r), row_x(r) + words_, p.x_words());
    std::copy(row_z(r), row_z(r) + words_, p.z_words());
    p.set_negative(signs_[r]);
    return p;
}

PauliOperator StabilizerTableau::stabilizer(size_t i) const {
    return row(n_ + i);
}

PauliOperator StabilizerTableau::destabilizer(size_t i) const {
    return row(i);
}

bool StabilizerTableau::deterministic_sign(const PauliOperator &p) const {
    const Kernels &k = active_kernels();
    std::vector<uint64_t> sx(words_, 0), sz(words_, 0);
    unsigned e = 0;
    for (size_t i = 0; i < n_; i++) {
        if (row_anticommutes(i, p)) {
            e += k.mul_phase(sx.data(), sz.data(), row_x(n_ + i), row_z(n_ + i), words_);
            e += 2 * signs_[n_ + i];
        }
    }
    return ((e & 3) >> 1) != static_cast<unsigned>(p.negative());
}

MeasureResult StabilizerTableau::measure_impl(const PauliOperator &p, BitSource *bits, int desired) {
    if (p.size() != n_) {
        throw ValidationError("measured operator has " + std::to_string(p.size()) + " qubits, tableau has " +
                              std::to_string(n_));
    }
    size_t pivot = 2 * n_;
    for (size_t r = n_; r < 2 * n_; r++) {
        if (row_anticommutes(r, p)) {
            pivot = r;
            break;
        }
    }
    if (pivot == 2 * n_) {
        return {deterministic_sign(p) ? -1 : 1, true};
    }
    for (size_t r = 0; r < 2 * n_; r++) {
        if (r != pivot && row_anticommutes(r, p)) {
            row_mul(r, pivot);
        }
    }
    size_t d = pivot - n_;
    std::copy(row_x(pivot), row_x(pivot) + 2 * words_, row_x(d));
    signs_[d] = signs_[pivot];
    std::copy(p.x_words(), p.x_words() + words_, row_x(pivot));
    std::copy(p.z_words(), p.z_words() + words_, row_z(pivot));
    int outcome = bits ? (bits->next_bit() ? -1 : 1) : desired;
    signs_[pivot] = p.negative() ^ (outcome == -1);
    return {outcome, false};
}

MeasureResult StabilizerTableau::measure(const PauliOperator &p, BitSource &bits) {
    return measure_impl(p, &bits, 0);
}

MeasureResult StabilizerTableau::measure_forced(const PauliOperator &p, int desired) {
    return measure_impl(p, nullptr, desired);
}

Expectation StabilizerTableau::expectation(const PauliOperator &p) const {
    if (p.size() != n_) {
        throw ValidationError("operator size mismatch");
    }
    for (size_t r = n_; r < 2 * n_; r++) {
        if (row_anticommutes(r, p)) {
            return Expectation::Undetermined;
        }
    }
    return deterministic_sign(p) ? Expectation::Minus : Expectation::Plus;
}

void StabilizerTableau::apply_pauli(const PauliOperator &p) {
    for (size_t r = 0; r < 2 * n_; r++) {
        if (row_anticommutes(r, p)) {
            signs_[r] ^= 1;
        }
    }
}

std::vector<std::string> StabilizerTableau::check_invariants() const {
    std::vector<std::string> bad;
    for (size_t i = 0; i < n_; i++) {
        for (size_t j = 0; j < n_; j++) {
            bool anti = rows_anticommute(i, n_ + j);
            if (anti != (i == j)) {
                bad.push_back("destabilizer " + std::to_string(i) + " vs stabilizer " + std::to_string(j) +
                              (anti ? " anticommute" : " commute"));
            }
            if (j > i && rows_anticommute(n_ + i, n_ + j)) {
                bad.push_back("stabilizers " + std::to_string(i) + "," + std::to_string(j) + " anticommute");
            }
        }
    }
    return bad;
}

}  // namespace colorsurg
