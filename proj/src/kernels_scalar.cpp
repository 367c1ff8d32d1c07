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

#include <bit>

#include "colorsurg/kernels.hpp"

namespace colorsurg {
namespace {

void xor_words(uint64_t *dst, const uint64_t *src, size_t n) {
    for (size_t k = 0; k < n; k++) {
        dst[k] ^= src[k];
    }
}

bool anticommutes(const uint64_t *x1, const uint64_t *z1, const uint64_t *x2, const uint64_t *z2, size_t n) {
    uint64_t acc = 0;
    for (size_t k = 0; k < n; k++) {
        acc ^= (x1[k] & z2[k]) ^ (z1[k] & x2[k]);
    }
    return std::popcount(acc) & 1;
}

// Per qubit the product contributes +i for XY, YZ, ZX and -i for YX, ZY, XZ.
// With a = anticommuting positions and p = the +i positions the exponent is
// popcount(p) - popcount(a - p) = 2 popcount(p) - popcount(a).
unsigned mul_phase(uint64_t *x1, uint64_t *z1, const uint64_t *x2, const uint64_t *z2, size_t n) {
    unsigned plus = 0;
    unsigned anti = 0;
    for (size_t k = 0; k < n; k++) {
        uint64_t a = x1[k], b = z1[k], c = x2[k], d = z2[k];
        uint64_t p = (a & ~b & c & d) | (a & b & ~c & d) | (~a & b & c & ~d);
        uint64_t q = (a & d) ^ (b & c);
        plus += std::popcount(p);
        anti += std::popcount(q);
        x1[k] = a ^ c;
        z1[k] = b ^ d;
    }
    return (2 * plus + 4 - (anti & 3)) & 3;
}

size_t popcount(const uint64_t *a, size_t n) {
    size_t total = 0;
    for (size_t k = 0; k < n; k++) {
        total += std::popcount(a[k]);
    }
    return total;
}

const Kernels kScalar{"scalar", xor_words, anticommutes, mul_phase, popcount};

}  // namespace

const Kernels &scalar_kernels() {
    return kScalar;
}

}  // namespace colorsurg
