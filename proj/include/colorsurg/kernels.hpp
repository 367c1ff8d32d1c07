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
#include <string>
#include <vector>

namespace colorsurg {

// Word-level primitives over packed symplectic rows. A row is a pair of
// equally sized word arrays (x bits, z bits). All variants must produce
// bit-identical results; the scalar table is the reference.
struct Kernels {
    const char *name;
    // dst ^= src over n words.
    void (*xor_words)(uint64_t *dst, const uint64_t *src, size_t n);
    // Parity of popcount((x1 & z2) ^ (z1 & x2)).
    bool (*anticommutes)(const uint64_t *x1, const uint64_t *z1, const uint64_t *x2, const uint64_t *z2, size_t n);
    // (x1,z1) <- (x1,z1) * (x2,z2). Returns the exponent k (mod 4) of the
    // scalar i^k produced by the product of the unsigned Pauli strings.
    unsigned (*mul_phase)(uint64_t *x1, uint64_t *z1, const uint64_t *x2, const uint64_t *z2, size_t n);
    // Number of set bits over n words.
    size_t (*popcount)(const uint64_t *a, size_t n);
};

const Kernels &scalar_kernels();
#if defined(COLORSURG_HAVE_AVX2)
const Kernels &avx2_kernels();
#endif
#if defined(COLORSURG_HAVE_NEON)
const Kernels &neon_kernels();
#endif

// Kernel table selected at first use from CPU features. The environment
// variable COLORSURG_KERNELS (scalar, avx2, neon) forces a choice.
const Kernels &active_kernels();

// Every variant usable on this machine, scalar first.
std::vector<const Kernels *> available_kernels();

}  // namespace colorsurg
