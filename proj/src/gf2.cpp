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

#include "colorsurg/gf2.hpp"

#include <algorithm>
#include <bit>

namespace colorsurg {

bool bits_zero(const BitVec &v) {
    return std::all_of(v.begin(), v.end(), [](uint64_t w) { return w == 0; });
}

void bits_xor(BitVec &dst, const BitVec &src) {
    for (size_t k = 0; k < dst.size(); k++) {
        dst[k] ^= src[k];
    }
}

BitVec symplectic_vector(const PauliOperator &p) {
    size_t w = p.num_words();
    size_t n = p.size();
    BitVec v(words_for(2 * n), 0);
    for (size_t q = 0; q < n; q++) {
        if (p.x(q)) {
            bit_flip(v, q);
        }
        if (p.z(q)) {
            bit_flip(v, n + q);
        }
    }
    (void)w;
    return v;
}

Gf2Basis::Gf2Basis(size_t nbits) : nbits_(nbits), words_(words_for(nbits)), pivot_row_(nbits, -1) {}

BitVec Gf2Basis::reduce(const BitVec &v, std::vector<size_t> *combo) const {
    BitVec r = v;
    BitVec c;
    if (combo) {
        c.assign(words_for(next_tag_ + 1), 0);
    }
    for (size_t w = 0; w < words_; w++) {
        uint64_t pending = r[w];
        while (pending) {
            size_t b = w * 64 + std::countr_zero(pending);
            pending &= pending - 1;
            int row = pivot_row_[b];
            if (row < 0) {
                continue;
            }
            bits_xor(r, rows_[row]);
            if (combo) {
                const BitVec &rc = combos_[row];
                for (size_t k = 0; k < rc.size() && k < c.size(); k++) {
                    c[k] ^= rc[k];
                }
            }
            // Rows only touch bits at or above their pivot; rescan this word.
            pending = r[w] & ~((uint64_t{2} << (b & 63)) - 1);
            if ((b & 63) == 63) {
                pending = 0;
            }
        }
    }
    if (combo) {
        combo->clear();
        for (size_t t = 0; t < next_tag_ + 1 && t < c.size() * 64; t++) {
            if (bit_get(c, t)) {
                combo->push_back(t);
            }
        }
    }
    return r;
}

bool Gf2Basis::add(const BitVec &v, size_t tag) {
    next_tag_ = std::max(next_tag_, tag + 1);
    for (auto &rc : combos_) {
        rc.resize(words_for(next_tag_ + 1), 0);
    }
    BitVec r = v;
    BitVec c(words_for(next_tag_ + 1), 0);
    bit_flip(c, tag);
    for (size_t w = 0; w < words_; w++) {
        uint64_t pending = r[w];
        while (pending) {
            size_t b = w * 64 + std::countr_zero(pending);
            int row = pivot_row_[b];
            if (row < 0) {
                rows_.push_back(r);
                combos_.push_back(c);
                pivot_row_[b] = static_cast<int>(rows_.size()) - 1;
                return true;
            }
            bits_xor(r, rows_[row]);
            bits_xor(c, combos_[row]);
            pending = ((b & 63) == 63) ? 0 : (r[w] & ~((uint64_t{2} << (b & 63)) - 1));
        }
    }
    return false;
}

size_t gf2_rank(const std::vector<BitVec> &rows, size_t nbits) {
    Gf2Basis b(nbits);
    for (const auto &r : rows) {
        b.add(r);
    }
    return b.rank();
}

std::vector<BitVec> gf2_left_kernel(const std::vector<BitVec> &rows, size_t nbits) {
    Gf2Basis b(nbits);
    std::vector<BitVec> out;
    size_t m = rows.size();
    for (size_t i = 0; i < m; i++) {
        std::vector<size_t> combo;
        BitVec res = b.reduce(rows[i], &combo);
        if (bits_zero(res)) {
            BitVec k(words_for(m), 0);
            bit_flip(k, i);
            for (size_t t : combo) {
                bit_flip(k, t);
            }
            out.push_back(k);
        } else {
            b.add(rows[i], i);
        }
    }
    return out;
}

}  // namespace colorsurg
