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

#include <arm_neon.h>

#include <bit>

#include "colorsurg/kernels.hpp"

namespace colorsurg {
namespace {

inline uint64_t lane_popcount(uint64x2_t v) {
    return vaddvq_u8(vcntq_u8(vreinterpretq_u8_u64(v)));
}

void xor_words(uint64_t *dst, const uint64_t *src, size_t n) {
    size_t k = 0;
    for (; k + 2 <= n; k += 2) {
        vst1q_u64(dst + k, veorq_u64(vld1q_u64(dst + k), vld1q_u64(src + k)));
    }
    for (; k < n; k++) {
        dst[k] ^= src[k];
    }
}

bool anticommutes(const uint64_t *x1, const uint64_t *z1, const uint64_t *x2, const uint64_t *z2, size_t n) {
    uint64x2_t acc = vdupq_n_u64(0);
    size_t k = 0;
    for (; k + 2 <= n; k += 2) {
        uint64x2_t t = veorq_u64(vandq_u64(vld1q_u64(x1 + k), vld1q_u64(z2 + k)),
                                 vandq_u64(vld1q_u64(z1 + k), vld1q_u64(x2 + k)));
        acc = veorq_u64(acc, t);
    }
    uint64_t folded = vgetq_lane_u64(acc, 0) ^ vgetq_lane_u64(acc, 1);
    for (; k < n; k++) {
        folded ^= (x1[k] & z2[k]) ^ (z1[k] & x2[k]);
    }
    return std::popcount(folded) & 1;
}

unsigned mul_phase(uint64_t *x1, uint64_t *z1, const uint64_t *x2, const uint64_t *z2, size_t n) {
    uint64_t plus = 0;
    uint64_t anti = 0;
    size_t k = 0;
    for (; k + 2 <= n; k += 2) {
        uint64x2_t a = vld1q_u64(x1 + k), b = vld1q_u64(z1 + k), c = vld1q_u64(x2 + k), d = vld1q_u64(z2 + k);
        // vbicq(u, v) computes u & ~v.
        uint64x2_t t1 = vandq_u64(vbicq_u64(a, b), vandq_u64(c, d));
        uint64x2_t t2 = vandq_u64(vandq_u64(a, b), vbicq_u64(d, c));
        uint64x2_t t3 = vandq_u64(vbicq_u64(b, a), vbicq_u64(c, d));
        uint64x2_t p = vorrq_u64(vorrq_u64(t1, t2), t3);
        uint64x2_t q = veorq_u64(vandq_u64(a, d), vandq_u64(b, c));
        plus += lane_popcount(p);
        anti += lane_popcount(q);
        vst1q_u64(x1 + k, veorq_u64(a, c));
        vst1q_u64(z1 + k, veorq_u64(b, d));
    }
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
    size_t total = 0;
    size_t k = 0;
    for (; k + 2 <= n; k += 2) {
        total += lane_popcount(vld1q_u64(a + k));
    }
    for (; k < n; k++) {
        total += std::popcount(a[k]);
    }
    return total;
}

const Kernels kNeon{"neon", xor_words, anticommutes, mul_phase, popcount};

}  // namespace

const Kernels &neon_kernels() {
    return kNeon;
}

}  // namespace colorsurg
