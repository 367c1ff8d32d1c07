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

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "colorsurg/surgery.hpp"

namespace colorsurg {

// Flipped Bell-measurement outcomes. Mechanism 2k is the XX outcome of red
// edge k, mechanism 2k+1 its ZZ outcome.
struct ErrorConfiguration {
    std::vector<uint8_t> flipped;
    double p = 0.0;
    size_t weight() const;
};

struct Detector {
    size_t merged_id;                 // generator of the merged group
    std::vector<size_t> mechanisms;   // all of one parity
    bool touches_data;
};

// Dual graph of one channel: detectors plus a single boundary node. Every
// mechanism of the channel is one graph edge.
struct SyndromeGraph {
    int channel = 0;                      // 0: XX outcomes, 1: ZZ outcomes
    std::vector<size_t> detectors;        // indices into SplitDecoder::detectors()
    size_t boundary = 0;                  // node id of the boundary (== detectors.size())
    std::vector<size_t> mechanisms;       // global mechanism ids handled by this graph
    std::vector<std::array<size_t, 2>> ends;  // node pair per mechanism
    std::vector<std::vector<std::pair<size_t, size_t>>> adjacency;  // node -> (node, local mechanism)
};

struct FailureEstimate {
    size_t trials = 0;
    size_t failures = 0;
    double rate = 0.0;
    double ci_low = 0.0;
    double ci_high = 0.0;
};

// Wilson score interval at 95% confidence.
FailureEstimate wilson(size_t failures, size_t trials);

// Which parity of split outcomes counts as the logical readout.
//   RedEdgeSet: every XX outcome for A and every ZZ outcome for B.
//   DressedRecipe: the exact outcome recipe used by SurgeryProtocol, which
//   multiplies in the frame corrections needed when a logical anticommutes
//   with part of the merged group.
enum class ObservableModel { RedEdgeSet, DressedRecipe };

class SplitDecoder {
   public:
    explicit SplitDecoder(const SurgeryProtocol &proto, ObservableModel model = ObservableModel::RedEdgeSet);

    ObservableModel model() const {
        return model_;
    }

    size_t num_mechanisms() const {
        return num_mechanisms_;
    }
    const std::vector<Detector> &detectors() const {
        return detectors_;
    }
    const SyndromeGraph &graph(int channel) const {
        return graphs_[channel];
    }
    // Mechanisms flipping outcome A (which = 'A') or B.
    const std::vector<uint8_t> &observable(char which) const {
        return which == 'A' ? obs_a_ : obs_b_;
    }

    ErrorConfiguration sample_errors(double p, uint64_t seed) const;
    // Violated detector indices, sorted.
    std::vector<size_t> syndrome_of(const ErrorConfiguration &e) const;
    // Minimum-weight correction reproducing the syndrome.
    ErrorConfiguration decode(const std::vector<size_t> &syndrome) const;
    bool is_logical_failure(const ErrorConfiguration &e, const ErrorConfiguration &correction, char which) const;
    bool is_logical_failure(const ErrorConfiguration &e, const ErrorConfiguration &correction) const {
        return is_logical_failure(e, correction, 'A') || is_logical_failure(e, correction, 'B');
    }
    // Fewest mechanisms forming an undetectable flip of the observable, or
    // nullopt if no such set exists.
    std::optional<int> min_cut_distance(char which) const;

    FailureEstimate monte_carlo_failure(double p, size_t trials, uint64_t seed, unsigned threads = 1) const;

    struct ExhaustiveResult {
        size_t weight;
        size_t configurations;
        size_t failures;
    };
    // All error sets of each weight 1..max_weight.
    std::vector<ExhaustiveResult> exhaustive_sweep(int max_weight, unsigned threads = 1) const;

   private:
    void decode_channel(const SyndromeGraph &g, const std::vector<size_t> &defects, ErrorConfiguration &out) const;

    ObservableModel model_;
    size_t num_mechanisms_ = 0;
    std::vector<Detector> detectors_;
    std::vector<std::vector<size_t>> mech_detectors_;
    std::array<SyndromeGraph, 2> graphs_;
    std::vector<uint8_t> obs_a_, obs_b_;
};

}  // namespace colorsurg
