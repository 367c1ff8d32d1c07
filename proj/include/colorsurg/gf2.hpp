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

#include <cstddef>
#include <cstdint>
#include <vector>

#include "colorsurg/pauli.hpp"

namespace colorsurg {

using BitVec = std::vector<uint64_t>;

inline bool bit_get(const BitVec &v, size_t i) {
    return (v[i >> 6] >> (i & 63)) & 1;
}
inline void bit_flip(BitVec &v, size_t i) {
    v[i >> 6] ^= uint64_t{1} << (i & 63);
}
bool bits_zero(const BitVec &v);
void bits_xor(BitVec &dst, const BitVec &src);

// Symplectic vector of p: x words followed by z words.
BitVec symplectic_vector(const PauliOperator &p);

// Row-echelon basis over GF(2) keyed by each row's lowest set bit. Each row
// remembers which inserted vectors it is a combination of, so membership
// queries can return a certificate.
class Gf2Basis {
   public:
    explicit Gf2Basis(size_t nbits);

    // Inserts v; returns true if it enlarged the span. `tag` identifies v in
    // combination certificates.
    bool add(const BitVec &v, size_t tag);
    bool add(const BitVec &v) {
        return add(v, next_tag_);
    }
    // Residual of v after elimination (zero iff v is in the span). If combo
    // is non-null it receives the tags whose sum equals v - residual.
    BitVec reduce(const BitVec &v, std::vector<size_t> *combo = nullptr) const;
    bool contains(const BitVec &v) const {
        return bits_zero(reduce(v));
    }
    size_t rank() const {
        return rows_.size();
    }
    size_t nbits() const {
        return nbits_;
    }

   private:
    size_t nbits_;
    size_t words_;
    size_t next_tag_ = 0;
    std::vector<BitVec> rows_;
    std::vector<BitVec> combos_;  // bitset over tags
    std::vector<int> pivot_row_;  // bit -> row index or -1
};

// Rank of a list of vectors.
size_t gf2_rank(const std::vector<BitVec> &rows, size_t nbits);

// Basis of the solution space {c : sum_i c_i rows_i = 0} for the given rows.
std::vector<BitVec> gf2_left_kernel(const std::vector<BitVec> &rows, size_t nbits);

}  // namespace colorsurg
