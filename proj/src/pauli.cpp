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

#include "colorsurg/pauli.hpp"

#include <bit>
#include <cctype>
#include <charconv>

#include "colorsurg/kernels.hpp"

namespace colorsurg {

PauliOperator::PauliOperator(size_t n) : n_(n), xs_(words_for(n), 0), zs_(words_for(n), 0) {}

char PauliOperator::at(size_t q) const {
    static const char table[4] = {'I', 'X', 'Z', 'Y'};
    return table[(x(q) ? 1 : 0) | (z(q) ? 2 : 0)];
}

void PauliOperator::set_bits(size_t q, bool xb, bool zb) {
    uint64_t mask = uint64_t{1} << (q & 63);
    xs_[q >> 6] = xb ? (xs_[q >> 6] | mask) : (xs_[q >> 6] & ~mask);
    zs_[q >> 6] = zb ? (zs_[q >> 6] | mask) : (zs_[q >> 6] & ~mask);
}

void PauliOperator::set(size_t q, char p) {
    if (q >= n_) {
        throw ValidationError("qubit index " + std::to_string(q) + " out of range");
    }
    switch (std::toupper(static_cast<unsigned char>(p))) {
        case 'I':
        case '_':
            set_bits(q, false, false);
            break;
        case 'X':
            set_bits(q, true, false);
            break;
        case 'Y':
            set_bits(q, true, true);
            break;
        case 'Z':
            set_bits(q, false, true);
            break;
        default:
            throw ValidationError(std::string("unknown Pauli letter '") + p + "'");
    }
}

size_t PauliOperator::weight() const {
    size_t w = 0;
    for (size_t k = 0; k < xs_.size(); k++) {
        w += std::popcount(xs_[k] | zs_[k]);
    }
    return w;
}

bool PauliOperator::is_identity_up_to_sign() const {
    for (size_t k = 0; k < xs_.size(); k++) {
        if (xs_[k] | zs_[k]) {
            return false;
        }
    }
    return true;
}

std::vector<size_t> PauliOperator::support() const {
    std::vector<size_t> out;
    for (size_t q = 0; q < n_; q++) {
        if (x(q) || z(q)) {
            out.push_back(q);
        }
    }
    return out;
}

std::string PauliOperator::str() const {
    std::string s(1, negative_ ? '-' : '+');
    for (size_t q = 0; q < n_; q++) {
        s.push_back(at(q) == 'I' ? '_' : at(q));
    }
    return s;
}

PauliOperator PauliOperator::from_dense(std::string_view text) {
    bool neg = false;
    if (!text.empty() && (text[0] == '+' || text[0] == '-')) {
        neg = text[0] == '-';
        text.remove_prefix(1);
    }
    PauliOperator p(text.size());
    for (size_t q = 0; q < text.size(); q++) {
        p.set(q, text[q]);
    }
    p.negative_ = neg;
    return p;
}

PauliOperator PauliOperator::from_sparse(size_t n, std::string_view text) {
    PauliOperator p(n);
    size_t i = 0;
    auto skip = [&]() {
        while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == '*' ||
                                   text[i] == ',')) {
            i++;
        }
    };
    skip();
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        p.negative_ = text[i] == '-';
        i++;
    }
    skip();
    while (i < text.size()) {
        char letter = text[i++];
        size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            i++;
        }
        if (start == i) {
            throw ValidationError("expected qubit index after '" + std::string(1, letter) + "'");
        }
        size_t q = 0;
        std::from_chars(text.data() + start, text.data() + i, q);
        if (q >= n) {
            throw ValidationError("qubit index " + std::to_string(q) + " out of range");
        }
        if (p.at(q) != 'I') {
            throw ValidationError("qubit " + std::to_string(q) + " listed twice");
        }
        p.set(q, letter);
        skip();
    }
    return p;
}

unsigned pauli_mul_phase(const PauliOperator &p, const PauliOperator &q) {
    PauliOperator tmp = p;
    return pauli_mul_inplace(tmp, q);
}

unsigned pauli_mul_inplace(PauliOperator &p, const PauliOperator &q) {
    if (p.size() != q.size()) {
        throw ValidationError("Pauli length mismatch: " + std::to_string(p.size()) + " vs " + std::to_string(q.size()));
    }
    unsigned k = active_kernels().mul_phase(p.x_words(), p.z_words(), q.x_words(), q.z_words(), p.num_words());
    bool neg = p.negative() ^ q.negative();
    // Commuting: i^k is +-1. Anticommuting: drop one factor of i (multiply by -i).
    unsigned real_part = (k & 1) ? k - 1 : k;
    if (real_part == 2) {
        neg = !neg;
    }
    p.set_negative(neg);
    return k;
}

PauliOperator pauli_mul(const PauliOperator &p, const PauliOperator &q) {
    PauliOperator out = p;
    pauli_mul_inplace(out, q);
    return out;
}

bool commutes(const PauliOperator &p, const PauliOperator &q) {
    if (p.size() != q.size()) {
        throw ValidationError("Pauli length mismatch: " + std::to_string(p.size()) + " vs " + std::to_string(q.size()));
    }
    return !active_kernels().anticommutes(p.x_words(), p.z_words(), q.x_words(), q.z_words(), p.num_words());
}

PauliOperator pauli_on(size_t n, const std::vector<size_t> &qubits, char letter) {
    PauliOperator p(n);
    for (size_t q : qubits) {
        p.set(q, letter);
    }
    return p;
}

}  // namespace colorsurg
