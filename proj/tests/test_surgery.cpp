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

#include <random>

#include "colorsurg/surgery.hpp"

using namespace colorsurg;

namespace {

SurgeryProtocol make(int d, const std::string &la, const std::string &lb, size_t n) {
    return SurgeryProtocol(build_layout(d, parse_logical(la, n), parse_logical(lb, n)));
}

}  // namespace

TEST(Surgery, FigureOneAgreesWithReference) {
    auto proto = make(3, "X1 X3 Z4", "Z1 Z2 Z3 Z4", 4);
    auto sum = verify_against_reference(proto, 42, 40, 2);
    EXPECT_TRUE(sum.all_agree()) << sum.trials[0].diff;
    for (const auto &t : sum.trials) {
        EXPECT_EQ(t.merge_windows, 1u);
        EXPECT_EQ(t.compared_logicals, 63u);  // nontrivial part of the commutant of {L_A, L_B}
    }
}

TEST(Surgery, TraceHasOneMergeAndOneSplit) {
    auto proto = make(3, "X1 X2", "Z1 Z2", 2);
    TrialReport r = run_reference_trial(proto, 1);
    EXPECT_EQ(std::count(r.trace.begin(), r.trace.end(), "merge"), 1);
    EXPECT_EQ(std::count(r.trace.begin(), r.trace.end(), "split"), 1);
    auto merge_at = std::find(r.trace.begin(), r.trace.end(), "merge");
    auto split_at = std::find(r.trace.begin(), r.trace.end(), "split");
    EXPECT_LT(merge_at, split_at);
}

TEST(Surgery, ResultsIndependentOfThreadCount) {
    auto proto = make(3, "X1 Z2", "Z1 X2", 2);
    auto a = verify_against_reference(proto, 9, 16, 1);
    auto b = verify_against_reference(proto, 9, 16, 4);
    ASSERT_EQ(a.trials.size(), b.trials.size());
    for (size_t i = 0; i < a.trials.size(); i++) {
        EXPECT_EQ(a.trials[i].seed, b.trials[i].seed);
        EXPECT_EQ(a.trials[i].result.outcome_a, b.trials[i].result.outcome_a);
        EXPECT_EQ(a.trials[i].result.outcome_b, b.trials[i].result.outcome_b);
    }
}

TEST(Surgery, InitialStatesAndSingleLogical) {
    for (InitialState init : {InitialState::Zero, InitialState::Plus, InitialState::EigenAB}) {
        auto proto = make(3, "Y1 Y2", "X1 X2", 2);
        EXPECT_TRUE(verify_against_reference(proto, 3, 6, 1, init).all_agree()) << initial_state_name(init);
    }
    auto single = make(3, "X1", "I", 1);
    auto sum = verify_against_reference(single, 5, 10);
    EXPECT_TRUE(sum.all_agree());
    for (const auto &t : sum.trials) EXPECT_EQ(t.result.outcome_b, 1);
}

TEST(Surgery, ZeroStateGivesDeterministicZMeasurement) {
    auto proto = make(3, "Z1 Z2", "X1 X2", 2);
    auto sum = verify_against_reference(proto, 11, 8, 1, InitialState::Zero);
    for (const auto &t : sum.trials) {
        EXPECT_EQ(t.reference_a, 1);
        EXPECT_EQ(t.result.outcome_a, 1);
    }
}

TEST(Leakage, MeasuredSpanEqualsRequestedSpan) {
    for (auto [la, lb, n] : std::vector<std::tuple<std::string, std::string, size_t>>{
             {"X1 X3 Z4", "Z1 Z2 Z3 Z4", 4}, {"X1", "I", 1}, {"Y1 Z2", "Z1 Y2", 2}, {"X1 X2 X3", "Z1 Z2", 3}}) {
        SurgeryLayout lay = build_layout(3, parse_logical(la, n), parse_logical(lb, n));
        LeakageReport rep = verify_no_leakage(lay);
        EXPECT_TRUE(rep.ok()) << la << " / " << lb;
        EXPECT_EQ(rep.measured, rep.expected);
        // A single-patch logical whose data part is reachable from the merged
        // group must still be hidden by operators that anticommute with the
        // Bell pairs.
        for (const auto &w : rep.witnesses) {
            EXPECT_FALSE(w.u_in_stabilizer) << logical_str(w.logical);
            if (w.in_merged_span) {
                EXPECT_GT(w.anticommuting_edges, 0u) << logical_str(w.logical);
            }
        }
    }
}

TEST(Surgery, TrialSeedsAreDistinct) {
    std::set<uint64_t> seen;
    for (uint64_t i = 0; i < 1000; i++) seen.insert(trial_seed(77, i));
    EXPECT_EQ(seen.size(), 1000u);
    EXPECT_EQ(trial_seed(77, 3), trial_seed(77, 3));
}
