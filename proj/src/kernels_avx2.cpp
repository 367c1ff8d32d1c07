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

#include <immintrin.h>

#include <bit>

#include "colorsurg/kernels.hpp"

namespace colorsurg {
namespace {

// Nibble-table popcount of a 256-bit lane, summed into four 64-bit counters.
inline __m256i popcount_lanes(__m256i v) {
    const __m256i table = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4, 0, 1, 1, 2, 1, 2, 2, 3, 1,
                                           2, 2, 3, 2, 3, 3, 4);
    const __m256i low_mask = _mm256_set1_epi8(0x0f);
    __m256i lo = _mm256_and_si256(v, low_mask);
    __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
    __m256i cnt = _mm256_add_epi8(_mm256_shuffle_epi8(table, lo), _mm256_shuffle_epi8(table, hi));
    return _mm256_sad_epu8(cnt, _mm256_setzero_si256());
}

inline uint64_t horizontal_sum(__m256i v) {
    alignas(32) uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i *>(lanes), v);
    return lanes[0] + lanes[1] + lanes[2] + lanes[3];
}

inline __m256i load(const uint64_t *p) {
    return _mm256_loadu_si256(reinterpret_cast<const __m256i *>(p));
}

inline void store(uint64_t *p, __m256i v) {
    _mm256_storeu_si256(reinterpret_cast<__m256i *>(p), v);
}

void xor_words(uint64_t *dst, const uint64_t *src, size_t n) {
    size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        store(dst + k, _mm256_xor_si256(load(dst + k), load(src + k)));
    }
    for (; k < n; k++) {
        dst[k] ^= src[k];
    }
}

bool anticommutes(const uint64_t *x1, const uint64_t *z1, const uint64_t *x2, const uint64_t *z2, size_t n) {
    __m256i acc = _mm256_setzero_si256();
    size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        __m256i t = _mm256_xor_si256(_mm256_and_si256(load(x1 + k), load(z2 + k)),
                                     _mm256_and_si256(load(z1 + k), load(x2 + k)));
        acc = _mm256_xor_si256(acc, t);
    }
    alignas(32) uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i *>(lanes), acc);
    uint64_t folded = lanes[0] ^ lanes[1] ^ lanes[2] ^ lanes[3];
    for (; k < n; k++) {
        folded ^= (x1[k] & z2[k]) ^ (z1[k] & x2[k]);
    }
    return std::popcount(folded) & 1;
}

unsigned mul_phase(uint64_t *x1, uint64_t *z1, const uint64_t *x2, const uint64_t *z2, size_t n) {
    __m256i plus_acc = _mm256_setzero_si256();
    __m256i anti_acc = _mm256_setzero_si256();
    size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        __m256i a = load(x1 + k), b = load(z1 + k), c = load(x2 + k), d = load(z2 + k);
        // andnot(u, v) computes ~u & v.
        __m256i t1 = _mm256_and_si256(_mm256_andnot_si256(b, a), _mm256_and_si256(c, d));
        __m256i t2 = _mm256_and_si256(_mm256_and_si256(a, b), _mm256_andnot_si256(c, d));
        __m256i t3 = _mm256_and_si256(_mm256_andnot_si256(a, b), _mm256_andnot_si256(d, c));
        __m256i p = _mm256_or_si256(_mm256_or_si256(t1, t2), t3);
        __m256i q = _mm256_xor_si256(_mm256_and_si256(a, d), _mm256_and_si256(b, c));
        plus_acc = _mm256_add_epi64(plus_acc, popcount_lanes(p));
        anti_acc = _mm256_add_epi64(anti_acc, popcount_lanes(q));
        store(x1 + k, _mm256_xor_si256(a, c));
        store(z1 + k, _mm256_xor_si256(b, d));
    }
    uint64_t plus = horizontal_sum(plus_acc);
    uint64_t anti = horizontal_sum(anti_acc);
    for (; k < n; k++) {
        uint64_t a = x1[k], b = z1[k], c = x2[k], d = z2[k];
        uint64_t p = (a & ~b & c & d) | (a & b & ~c & d) | (~a & b & c & ~d);
        plus += std::popcount(p);
        anti += std::popcount((a & d) ^ (b & c));
        x1[k] = a ^ c;
        z1[k] = b ^ d;
    }
    return static_cast<unsigned>((2 * plus + 4 - (anti & 3)) & 3);
}

size_t popcount(const uint64_t *a, size_t n) {
    __m256i acc = _mm256_setzero_si256();
    size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        acc = _mm256_add_epi64(acc, popcount_lanes(load(a + k)));
    }
    size_t total = horizontal_sum(acc);
    for (; k < n; k++) {
        total += std::popcount(a[k]);
    }
    return total;
}

const Kernels kAvx2{"avx2", xor_words, anticommutes, mul_phase, popcount};

}  // namespace

const Kernels &avx2_kernels() {
    return kAvx2;
}

}  // namespace colorsurg
