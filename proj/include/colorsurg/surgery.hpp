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
#include <set>
#include <string>
#include <vector>

#include "colorsurg/layout.hpp"
#include "colorsurg/tableau.hpp"

namespace colorsurg {

struct MeasurementEntry {
    size_t id;
    PauliOperator op;
    int outcome;
    bool deterministic;
};

struct MeasurementRecord {
    std::string phase;  // "merge" or "split"
    std::vector<MeasurementEntry> entries;
};

struct SurgeryResult {
    int outcome_a = 1, outcome_b = 1;
    int q_a = 1, q_b = 1;  // products of red-face outcomes
    int s_a = 1, s_b = 1;  // products of red-edge outcomes
    // Fixed sign, and the product of split outcomes relating Q*S to the
    // logical operator dressed to commute with the merged group.
    int sign_a = 1, sign_b = 1;
    int f_a = 1, f_b = 1;
    bool deterministic_a = false, deterministic_b = false;
};

struct LeakageWitness {
    LogicalPauli logical;
    bool in_merged_span = false;  // L*U in S_M for some U agreeing with S on the data
    size_t anticommuting_edges = 0;
    bool u_in_stabilizer = false;
};

struct LeakageReport {
    std::set<uint64_t> measured;
    std::set<uint64_t> expected;
    size_t noncommuting_pairs = 0;
    size_t lost_data_stabilizers = 0;
    std::vector<LeakageWitness> witnesses;
    bool ok() const;
};

LeakageReport verify_no_leakage(const SurgeryLayout &lay);

enum class InitialState { Zero, Plus, Random, EigenAB };
std::string initial_state_name(InitialState s);
InitialState initial_state_from_name(const std::string &s);

// Precomputed classical processing for one layout.
class SurgeryProtocol {
   public:
    explicit SurgeryProtocol(SurgeryLayout layout);

    const SurgeryLayout &layout() const {
        return lay_;
    }

    // Projects every data patch into its code space with all stabilizers +1.
    void encode(StabilizerTableau &t) const;
    // Copies the logical stabilizer state of `ref` onto the encoded patches.
    void load_logical_state(StabilizerTableau &t, const StabilizerTableau &ref, BitSource &bits) const;
    void prepare_ancilla(StabilizerTableau &t) const;
    MeasurementRecord merge(StabilizerTableau &t, BitSource &bits) const;
    MeasurementRecord split(StabilizerTableau &t, BitSource &bits) const;
    SurgeryResult infer_outcomes(const MeasurementRecord &merge_rec, const MeasurementRecord &split_rec) const;
    // Pauli that returns the data patches to the code space with the logical
    // frame expected by a direct measurement of L_A and L_B.
    PauliOperator correction(const MeasurementRecord &split_rec) const;

    // Red-edge measurement ids (2k for XX, 2k+1 for ZZ of edge k) whose
    // outcomes enter outcome_A ('A') or outcome_B ('B') an odd number of times.
    std::vector<size_t> observable_edges(char which) const;

    size_t split_size() const {
        return lay_.ancilla_stabilizers.size() + lay_.data_stabilizers.size();
    }

   private:
    struct Recipe {
        bool negative = false;
        std::vector<size_t> merged;  // ids into the merge record
        std::vector<size_t> split;   // ids into the split record
    };
    Recipe logical_recipe(const PauliOperator &target, bool red_x) const;

    SurgeryLayout lay_;
    Recipe recipe_a_, recipe_b_;
    std::vector<size_t> red_x_ids_, red_z_ids_;
    std::vector<PauliOperator> pure_errors_;  // one per data stabilizer
    // Logical operators spanning the commutant of {L_A, L_B} modulo <L_A, L_B>,
    // with the split ids whose product fixes their frame sign.
    std::vector<LogicalPauli> frame_logicals_;
    std::vector<std::vector<size_t>> frame_split_ids_;
    std::vector<LogicalPauli> fixed_logicals_;  // L_A, L_B (independent part)
    std::vector<std::vector<size_t>> fixed_split_ids_;
    std::vector<size_t> dress_a_, dress_b_;
};

struct TrialReport {
    uint64_t seed = 0;
    SurgeryResult result;
    int reference_a = 1, reference_b = 1;
    bool agree = false;
    std::string diff;
    std::vector<std::string> trace;
    size_t merge_windows = 0;
    size_t compared_logicals = 0;
};

TrialReport run_reference_trial(const SurgeryProtocol &proto, uint64_t seed, InitialState init = InitialState::Random);

struct ReferenceSummary {
    size_t agreements = 0;
    std::vector<TrialReport> trials;
    bool all_agree() const {
        return agreements == trials.size();
    }
};

// Seeds are derived from seed0 and the trial index only, so results do not
// depend on the thread count.
ReferenceSummary verify_against_reference(const SurgeryProtocol &proto, uint64_t seed0, size_t trials,
                                          unsigned threads = 1, InitialState init = InitialState::Random);

uint64_t trial_seed(uint64_t seed0, uint64_t index);

// Logical Pauli as an N-qubit operator for the reference tableau.
PauliOperator logical_operator(const LogicalPauli &p);

}  // namespace colorsurg
