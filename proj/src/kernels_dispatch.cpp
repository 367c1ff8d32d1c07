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

#include <cstdlib>
#include <string_view>

#include "colorsurg/kernels.hpp"

namespace colorsurg {
namespace {

bool cpu_has_avx2() {
#if defined(COLORSURG_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
    return false;
#endif
}

const Kernels &select_kernels() {
    const char *forced = std::getenv("COLORSURG_KERNELS");
    std::string_view want = forced ? std::string_view(forced) : std::string_view();
    if (want == "scalar") {
        return scalar_kernels();
    }
#if defined(COLORSURG_HAVE_NEON)
    if (want.empty() || want == "neon") {
        return neon_kernels();
    }
#endif
#if defined(COLORSURG_HAVE_AVX2)
    if ((want.empty() || want == "avx2") && cpu_has_avx2()) {
        return avx2_kernels();
    }
#endif
    return scalar_kernels();
}

}  // namespace

const Kernels &active_kernels() {
    static const Kernels &chosen = select_kernels();
    return chosen;
}

std::vector<const Kernels *> available_kernels() {
    std::vector<const Kernels *> out{&scalar_kernels()};
#if defined(COLORSURG_HAVE_AVX2)
    if (cpu_has_avx2()) {
        out.push_back(&avx2_kernels());
    }
#endif
#if defined(COLORSURG_HAVE_NEON)
    out.push_back(&neon_kernels());
#endif
    return out;
}

}  // namespace colorsurg
