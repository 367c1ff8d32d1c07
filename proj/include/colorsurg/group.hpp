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

#include <vector>

#include "colorsurg/gf2.hpp"
#include "colorsurg/pauli.hpp"

namespace colorsurg {

enum class Membership { MemberWithSign, MemberUpToSign, NotMember };

const char *membership_name(Membership m);

// Generators of a Pauli group; abelian when every pair commutes.
class GeneratorSet {
   public:
    GeneratorSet() = default;
    explicit GeneratorSet(std::vector<PauliOperator> gens);

    void add(const PauliOperator &g);
    const std::vector<PauliOperator> &generators() const {
        return gens_;
    }
    size_t size() const {
        return gens_.size();
    }
    bool is_abelian() const;
    size_t rank() const;

    // Elimination-based membership. For abelian sets MemberWithSign means p
    // itself is in the group and MemberUpToSign means only -p is.
    Membership in_group(const PauliOperator &p) const;

    // Indices of generators whose product equals +-p, or empty optional if
    // p is not in the group up to sign.
    bool decompose(const PauliOperator &p, std::vector<size_t> &indices) const;

   private:
    void ensure_basis() const;
    std::vector<PauliOperator> gens_;
    mutable std::vector<Gf2Basis> basis_;  // zero or one element, built lazily
};

Membership in_group(const GeneratorSet &g, const PauliOperator &p);

}  // namespace colorsurg
