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
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace colorsurg {

// Thrown for malformed user input or violated preconditions. The CLI maps it
// to exit code 3.
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline size_t words_for(size_t n) {
    return (n + 63) / 64;
}

// An n-qubit Hermitian Pauli operator: sign * P_0 (x) P_1 (x) ... with
// P_i in {I, X, Y, Z} and sign in {+1, -1}. A qubit with both bits set is Y
// itself, so the operator is always Hermitian and no imaginary phase exists.
class PauliOperator {
   public:
    PauliOperator() = default;
    explicit PauliOperator(size_t n);

    // Dense form "+XIZY", "-XX", or "ZZI" (sign optional; '_' is I).
    static PauliOperator from_dense(std::string_view text);
    // Sparse form over n qubits such as "X0 Z3 Y7" or "-X1*X2".
    static PauliOperator from_sparse(size_t n, std::string_view text);

    size_t size() const {
        return n_;
    }
    size_t num_words() const {
        return xs_.size();
    }
    bool negative() const {
        return negative_;
    }
    void set_negative(bool v) {
        negative_ = v;
    }
    int sign() const {
        return negative_ ? -1 : 1;
    }

    bool x(size_t q) const {
        return (xs_[q >> 6] >> (q & 63)) & 1;
    }
    bool z(size_t q) const {
        return (zs_[q >> 6] >> (q & 63)) & 1;
    }
    // Single-qubit factor as one of 'I', 'X', 'Y', 'Z'.
    char at(size_t q) const;
    void set(size_t q, char p);
    void set_bits(size_t q, bool xb, bool zb);

    size_t weight() const;
    bool is_identity_up_to_sign() const;
    std::vector<size_t> support() const;

    std::string str() const;  // dense form with explicit sign

    uint64_t *x_words() {
        return xs_.data();
    }
    uint64_t *z_words() {
        return zs_.data();
    }
    const uint64_t *x_words() const {
        return xs_.data();
    }
    const uint64_t *z_words() const {
        return zs_.data();
    }

    bool same_bits(const PauliOperator &other) const {
        return n_ == other.n_ && xs_ == other.xs_ && zs_ == other.zs_;
    }
    bool operator==(const PauliOperator &other) const {
        return same_bits(other) && negative_ == other.negative_;
    }

   private:
    size_t n_ = 0;
    bool negative_ = false;
    std::vector<uint64_t> xs_;
    std::vector<uint64_t> zs_;
};

// Exponent k (mod 4) such that P*Q = i^k * R with R the Hermitian Pauli
// whose bits are the XOR of the inputs and whose sign is the product of the
// input signs.
unsigned pauli_mul_phase(const PauliOperator &p, const PauliOperator &q);

// Product with the library's phase convention. Commuting inputs give the
// exact product P*Q. Anticommuting inputs give -i*P*Q, the Hermitian member
// of {P*Q, -P*Q} times i^{-1}; under this rule X*Z -> -Y and Z*X -> +Y.
// Throws ValidationError on length mismatch.
PauliOperator pauli_mul(const PauliOperator &p, const PauliOperator &q);

// In-place variant of pauli_mul: p <- p*q. Returns the raw exponent.
unsigned pauli_mul_inplace(PauliOperator &p, const PauliOperator &q);

bool commutes(const PauliOperator &p, const PauliOperator &q);

// Tensor-style helper: an n-qubit operator with `p` on each listed qubit.
PauliOperator pauli_on(size_t n, const std::vector<size_t> &qubits, char p);

}  // namespace colorsurg
