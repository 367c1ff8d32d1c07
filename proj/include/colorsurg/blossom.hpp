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

namespace colorsurg {

struct WeightedEdge {
    size_t u;
    size_t v;
    int64_t weight;
};

// Maximum-weight matching on a general graph (Edmonds' blossom algorithm,
// primal-dual, O(n^3)). With max_cardinality set, the result is a maximum
// weight matching among the maximum-cardinality ones. Returns mate[v] or -1.
std::vector<long> max_weight_matching(size_t num_vertices, const std::vector<WeightedEdge> &edges,
                                      bool max_cardinality);

}  // namespace colorsurg
