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


#include <gtest/gtest.h>

#include <cmath>

#include "colorsurg/decoder.hpp"

using namespace colorsurg;

namespace {

const SurgeryProtocol &fig1() {
    static SurgeryProtocol p(build_layout(3, parse_logical("X1 X3 Z4", 4), parse_logical("Z1 Z2 Z3 Z4", 4)));
    return p;
}

}  // namespace

TEST(Decoder, EveryMechanismIsAGraphEdge) {
    SplitDecoder dec(fig1());
    EXPECT_EQ(dec.num_mechanisms(), 2 * fig1().layout().red_edges.size());
    std::vector<int> count(dec.num_mechanisms(), 0);
    for (const auto &d : dec.detectors()) {
        for (size_t m : d.mechanisms) {
            count[m]++;
            EXPECT_EQ(m % 2, d.mechanisms[0] % 2) << "detector mixes channels";
        }
    }
    for (int c : count) EXPECT_LE(c, 2);
    for (int ch = 0; ch < 2; ch++) EXPECT_EQ(dec.graph(ch).mechanisms.size(), dec.num_mechanisms() / 2);
}

TEST(Decoder, CorrectionReproducesSyndrome) {
    SplitDecoder dec(fig1());
    for (uint64_t s = 0; s < 200; s++) {
        ErrorConfiguration e = dec.sample_errors(0.05, s);
        auto syn = dec.syndrome_of(e);
        ErrorConfiguration c = dec.decode(syn);
        EXPECT_EQ(dec.syndrome_of(c), syn);
        EXPECT_LE(c.weight(), e.weight());
    }
}

TEST(Decoder, SingleFlipsAreCorrected) {
    SplitDecoder dec(fig1());
    auto sweep = dec.exhaustive_sweep(1, 2);
    ASSERT_EQ(sweep.size(), 1u);
    EXPECT_EQ(sweep[0].configurations, dec.num_mechanisms());
    EXPECT_EQ(sweep[0].failures, 0u);
}

TEST(Decoder, MinCutAtDistanceThree) {
    SplitDecoder dec(fig1());
    EXPECT_EQ(dec.min_cut_distance('A'), 3);
    EXPECT_EQ(dec.min_cut_distance('B'), 3);
}

TEST(Decoder, DressedObservableHasNoLowWeightFailure) {
    SplitDecoder dec(fig1(), ObservableModel::DressedRecipe);
    EXPECT_EQ(dec.min_cut_distance('A'), std::nullopt);
    auto sweep = dec.exhaustive_sweep(2, 4);
    EXPECT_EQ(sweep[1].failures, 0u);
}

TEST(Decoder, SinglePatchHasNoLogicalFailure) {
    SurgeryProtocol p(build_layout(3, parse_logical("X1", 1), parse_logical("I", 1)));
    SplitDecoder dec(p);
    EXPECT_EQ(dec.min_cut_distance('A'), std::nullopt);
    EXPECT_EQ(dec.min_cut_distance('B'), std::nullopt);
}

TEST(Decoder, MonteCarloIsDeterministicAndThreadIndependent) {
    SplitDecoder dec(fig1());
    auto a = dec.monte_carlo_failure(0.03, 3000, 5, 1);
    auto b = dec.monte_carlo_failure(0.03, 3000, 5, 4);
    EXPECT_EQ(a.failures, b.failures);
    EXPECT_GT(a.failures, 0u);
    EXPECT_LE(a.ci_low, a.rate);
    EXPECT_GE(a.ci_high, a.rate);
}

TEST(Decoder, SampledFlipRate) {
    SplitDecoder dec(fig1());
    size_t flips = 0, total = 0;
    for (uint64_t s = 0; s < 200; s++) {
        flips += dec.sample_errors(0.1, s).weight();
        total += dec.num_mechanisms();
    }
    double rate = static_cast<double>(flips) / total;
    EXPECT_NEAR(rate, 0.1, 4 * std::sqrt(0.09 / total));
    EXPECT_THROW(dec.sample_errors(1.5, 0), ValidationError);
}

TEST(Wilson, KnownValues) {
    // Closed form for 0 failures: upper = z^2 / (n + z^2).
    const double z = 1.959963984540054;
    auto w0 = wilson(0, 100);
    EXPECT_DOUBLE_EQ(w0.rate, 0.0);
    EXPECT_NEAR(w0.ci_low, 0.0, 1e-15);
    EXPECT_NEAR(w0.ci_high, z * z / (100 + z * z), 1e-12);
    auto w = wilson(50, 100);
    EXPECT_NEAR(w.ci_low + w.ci_high, 1.0, 1e-12);
    EXPECT_NEAR(w.ci_high - w.ci_low, 2 * z * std::sqrt(0.25 / 100 + z * z / 40000) / (1 + z * z / 100), 1e-12);
}
