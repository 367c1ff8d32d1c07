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

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "colorsurg/pauli.hpp"

namespace colorsurg {

// Injectable randomness for measurement outcomes.
class BitSource {
   public:
    virtual ~BitSource() = default;
    virtual bool next_bit() = 0;
};

// Bits drawn from a seeded std::mt19937_64, one 64-bit draw per 64 bits.
class SeededBits final : public BitSource {
   public:
    explicit SeededBits(uint64_t seed) : gen_(seed) {}
    bool next_bit() override;

   private:
    std::mt19937_64 gen_;
    uint64_t buffer_ = 0;
    int left_ = 0;
};

enum class Expectation { Plus, Minus, Undetermined };

struct MeasureResult {
    int outcome;  // +1 or -1, eigenvalue of the measured (signed) operator
    bool deterministic;
};

// Stabilizer state on n qubits in destabilizer/stabilizer form. Rows are
// packed (x words, z words) with a sign bit; row i < n is destabilizer i and
// row n + i is stabilizer i.
class StabilizerTableau {
   public:
    explicit StabilizerTableau(size_t n);  // |0...0>

    size_t num_qubits() const {
        return n_;
    }

    MeasureResult measure(const PauliOperator &p, BitSource &bits);
    // Like measure, but a random outcome is replaced by `desired`. Used to
    // prepare states by postselection; deterministic outcomes are reported as is.
    MeasureResult measure_forced(const PauliOperator &p, int desired);
    Expectation expectation(const PauliOperator &p) const;
    // Conjugates the state by the Pauli p.
    void apply_pauli(const PauliOperator &p);

    PauliOperator stabilizer(size_t i) const;
    PauliOperator destabilizer(size_t i) const;

    // Empty when all tableau invariants hold.
    std::vector<std::string> check_invariants() const;

   private:
    uint64_t *row_x(size_t r) {
        return data_.data() + r * 2 * words_;
    }
    uint64_t *row_z(size_t r) {
        return data_.data() + r * 2 * words_ + words_;
    }
    const uint64_t *row_x(size_t r) const {
        return data_.data() + r * 2 * words_;
    }
    const uint64_t *row_z(size_t r) const {
        return data_.data() + r * 2 * words_ + words_;
    }
    bool row_anticommutes(size_t r, const PauliOperator &p) const;
    bool rows_anticommute(size_t a, size_t b) const;
    void row_mul(size_t target, size_t source);
    PauliOperator row(size_t r) const;
    // Sign of p in the stabilizer group, assuming p commutes with every
    // stabilizer. Returns true for -1 relative to the unsigned operator.
    bool deterministic_sign(const PauliOperator &p) const;
    MeasureResult measure_impl(const PauliOperator &p, BitSource *bits, int desired);

    size_t n_;
    size_t words_;
    std::vector<uint64_t> data_;
    std::vector<uint8_t> signs_;
};

}  // namespace colorsurg
