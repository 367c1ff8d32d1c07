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

#include "colorsurg/group.hpp"

namespace colorsurg {

const char *membership_name(Membership m) {
    switch (m) {
        case Membership::MemberWithSign:
            return "member_with_sign";
        case Membership::MemberUpToSign:
            return "member_up_to_sign";
        default:
            return "not_member";
    }
}

GeneratorSet::GeneratorSet(std::vector<PauliOperator> gens) : gens_(std::move(gens)) {
    for (const auto &g : gens_) {
        if (g.size() != gens_.front().size()) {
            throw ValidationError("generator length mismatch");
        }
    }
}

void GeneratorSet::add(const PauliOperator &g) {
    if (!gens_.empty() && g.size() != gens_.front().size()) {
        throw ValidationError("generator length mismatch");
    }
    gens_.push_back(g);
    basis_.clear();
}

bool GeneratorSet::is_abelian() const {
    for (size_t i = 0; i < gens_.size(); i++) {
        for (size_t j = i + 1; j < gens_.size(); j++) {
            if (!commutes(gens_[i], gens_[j])) {
                return false;
            }
        }
    }
    return true;
}

void GeneratorSet::ensure_basis() const {
    if (!basis_.empty()) {
        return;
    }
    size_t n = gens_.empty() ? 0 : gens_.front().size();
    basis_.emplace_back(2 * n);
    for (size_t i = 0; i < gens_.size(); i++) {
        basis_.front().add(symplectic_vector(gens_[i]), i);
    }
}

size_t GeneratorSet::rank() const {
    ensure_basis();
    return basis_.front().rank();
}

bool GeneratorSet::decompose(const PauliOperator &p, std::vector<size_t> &indices) const {
    if (p.is_identity_up_to_sign()) {
        indices.clear();
        return true;
    }
    if (gens_.empty()) {
        return false;
    }
    if (p.size() != gens_.front().size()) {
        throw ValidationError("operator size mismatch");
    }
    ensure_basis();
    BitVec res = basis_.front().reduce(symplectic_vector(p), &indices);
    return bits_zero(res);
}

Membership GeneratorSet::in_group(const PauliOperator &p) const {
    std::vector<size_t> idx;
    if (!decompose(p, idx)) {
        return Membership::NotMember;
    }
    PauliOperator acc(p.size());
    for (size_t i : idx) {
        pauli_mul_inplace(acc, gens_[i]);
    }
    return acc.negative() == p.negative() ? Membership::MemberWithSign : Membership::MemberUpToSign;
}

Membership in_group(const GeneratorSet &g, const PauliOperator &p) {
    return g.in_group(p);
}

}  // namespace colorsurg
