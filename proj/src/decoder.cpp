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

#include "colorsurg/decoder.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <deque>
#include <functional>
#include <random>
#include <stdexcept>
#include <thread>

#include "colorsurg/blossom.hpp"
#include "colorsurg/gf2.hpp"

namespace colorsurg {

size_t ErrorConfiguration::weight() const {
    return static_cast<size_t>(std::count(flipped.begin(), flipped.end(), 1));
}

FailureEstimate wilson(size_t failures, size_t trials) {
    FailureEstimate f;
    f.trials = trials;
    f.failures = failures;
    if (trials == 0) {
        f.ci_high = 1.0;
        return f;
    }
    const double z = 1.959963984540054;
    double n = static_cast<double>(trials);
    double ph = static_cast<double>(failures) / n;
    double denom = 1.0 + z * z / n;
    double center = (ph + z * z / (2 * n)) / denom;
    double half = z * std::sqrt(ph * (1 - ph) / n + z * z / (4 * n * n)) / denom;
    f.rate = ph;
    f.ci_low = std::max(0.0, center - half);
    f.ci_high = std::min(1.0, center + half);
    return f;
}

SplitDecoder::SplitDecoder(const SurgeryProtocol &proto, ObservableModel model) : model_(model) {
    const SurgeryLayout &lay = proto.layout();
    size_t ne = lay.red_edges.size();
    num_mechanisms_ = 2 * ne;
    size_t n = lay.num_qubits();

    Gf2Basis data_span(2 * n);
    for (const auto &s : lay.data_stabilizers) {
        data_span.add(symplectic_vector(s));
    }
    std::vector<std::pair<size_t, size_t>> edge_q;
    for (const auto &[u, v] : lay.red_edges) {
        edge_q.push_back({lay.index.at(u), lay.index.at(v)});
    }
    std::vector<Detector> cands;
    for (size_t i = 0; i < lay.merged.size(); i++) {
        const PauliOperator &g = lay.merged[i].op;
        std::vector<size_t> mech;
        bool ok = true;
        for (size_t k = 0; k < ne && ok; k++) {
            auto [qu, qv] = edge_q[k];
            if (g.x(qu) != g.x(qv) || g.z(qu) != g.z(qv)) {
                ok = false;
                break;
            }
            if (g.x(qu)) {
                mech.push_back(2 * k);
            }
            if (g.z(qu)) {
                mech.push_back(2 * k + 1);
            }
        }
        if (!ok || mech.empty()) {
            continue;
        }
        bool mixed = std::any_of(mech.begin(), mech.end(), [&](size_t m) { return m % 2 != mech[0] % 2; });
        if (mixed) {
            continue;
        }
        PauliOperator data(n);
        for (size_t q = 0; q < lay.num_data; q++) {
            data.set_bits(q, g.x(q), g.z(q));
        }
        if (!data_span.contains(symplectic_vector(data))) {
            continue;
        }
        cands.push_back({i, mech, data.weight() > 0});
    }
    std::stable_sort(cands.begin(), cands.end(), [](const Detector &a, const Detector &b) {
        if (a.touches_data != b.touches_data) {
            return !a.touches_data;
        }
        if (a.mechanisms.size() != b.mechanisms.size()) {
            return a.mechanisms.size() < b.mechanisms.size();
        }
        return a.mechanisms < b.mechanisms;
    });
    // Keep each mechanism in at most two detectors so it is a graph edge.
    std::vector<int> count(num_mechanisms_, 0);
    mech_detectors_.assign(num_mechanisms_, {});
    for (const auto &c : cands) {
        if (std::all_of(c.mechanisms.begin(), c.mechanisms.end(), [&](size_t m) { return count[m] < 2; })) {
            for (size_t m : c.mechanisms) {
                count[m]++;
                mech_detectors_[m].push_back(detectors_.size());
            }
            detectors_.push_back(c);
        }
    }

    for (int ch = 0; ch < 2; ch++) {
        SyndromeGraph &g = graphs_[ch];
        g.channel = ch;
        std::vector<size_t> local(detectors_.size(), SIZE_MAX);
        for (size_t d = 0; d < detectors_.size(); d++) {
            if (static_cast<int>(detectors_[d].mechanisms[0] % 2) == ch) {
                local[d] = g.detectors.size();
                g.detectors.push_back(d);
            }
        }
        g.boundary = g.detectors.size();
        g.adjacency.assign(g.boundary + 1, {});
        for (size_t m = static_cast<size_t>(ch); m < num_mechanisms_; m += 2) {
            std::array<size_t, 2> ends{g.boundary, g.boundary};
            for (size_t t = 0; t < mech_detectors_[m].size(); t++) {
                ends[t] = local[mech_detectors_[m][t]];
            }
            size_t lm = g.mechanisms.size();
            g.mechanisms.push_back(m);
            g.ends.push_back(ends);
            g.adjacency[ends[0]].push_back({ends[1], lm});
            if (ends[1] != ends[0]) {
                g.adjacency[ends[1]].push_back({ends[0], lm});
            }
        }
    }

    obs_a_.assign(num_mechanisms_, 0);
    obs_b_.assign(num_mechanisms_, 0);
    if (model_ == ObservableModel::DressedRecipe) {
        for (size_t id : proto.observable_edges('A')) {
            obs_a_[id] = 1;
        }
        for (size_t id : proto.observable_edges('B')) {
            obs_b_[id] = 1;
        }
    } else {
        auto nontrivial = [](const LogicalPauli &l) {
            return std::any_of(l.begin(), l.end(), [](char c) { return c != 'I'; });
        };
        bool use_b = nontrivial(proto.layout().lb);
        for (size_t m = 0; m < num_mechanisms_; m += 2) {
            obs_a_[m] = 1;
            obs_b_[m + 1] = use_b ? 1 : 0;
        }
    }
}

ErrorConfiguration SplitDecoder::sample_errors(double p, uint64_t seed) const {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw ValidationError("error probability must lie in [0, 1]");
    }
    ErrorConfiguration e;
    e.p = p;
    e.flipped.assign(num_mechanisms_, 0);
    std::mt19937_64 gen(seed);
    for (size_t m = 0; m < num_mechanisms_; m++) {
        double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
        e.flipped[m] = u < p ? 1 : 0;
    }
    return e;
}

std::vector<size_t> SplitDecoder::syndrome_of(const ErrorConfiguration &e) const {
    std::vector<uint8_t> parity(detectors_.size(), 0);
    for (size_t m = 0; m < num_mechanisms_; m++) {
        if (e.flipped[m]) {
            for (size_t d : mech_detectors_[m]) {
                parity[d] ^= 1;
            }
        }
    }
    std::vector<size_t> out;
    for (size_t d = 0; d < parity.size(); d++) {
        if (parity[d]) {
            out.push_back(d);
        }
    }
    return out;
}

void SplitDecoder::decode_channel(const SyndromeGraph &g, const std::vector<size_t> &defects,
                                  ErrorConfiguration &out) const {
    size_t k = defects.size();
    if (k == 0) {
        return;
    }
    size_t nodes = g.boundary + 1;
    const size_t unreached = SIZE_MAX;
    std::vector<std::vector<size_t>> dist(k, std::vector<size_t>(nodes, unreached));
    std::vector<std::vector<std::pair<size_t, size_t>>> parent(k, std::vector<std::pair<size_t, size_t>>(nodes));
    for (size_t i = 0; i < k; i++) {
        std::deque<size_t> q{defects[i]};
        dist[i][defects[i]] = 0;
        while (!q.empty()) {
            size_t u = q.front();
            q.pop_front();
            for (auto [v, lm] : g.adjacency[u]) {
                if (dist[i][v] == unreached) {
                    dist[i][v] = dist[i][u] + 1;
                    parent[i][v] = {u, lm};
                    q.push_back(v);
                }
            }
        }
    }
    const int64_t big = static_cast<int64_t>(nodes) + 2;
    std::vector<WeightedEdge> edges;
    for (size_t i = 0; i < k; i++) {
        for (size_t j = i + 1; j < k; j++) {
            if (dist[i][defects[j]] != unreached) {
                edges.push_back({i, j, big - static_cast<int64_t>(dist[i][defects[j]])});
            }
            edges.push_back({k + i, k + j, big});
        }
        if (dist[i][g.boundary] != unreached) {
            edges.push_back({i, k + i, big - static_cast<int64_t>(dist[i][g.boundary])});
        }
    }
    auto mate = max_weight_matching(2 * k, edges, true);
    auto walk = [&](size_t i, size_t target) {
        size_t cur = target;
        while (cur != defects[i]) {
            auto [prev, lm] = parent[i][cur];
            out.flipped[g.mechanisms[lm]] ^= 1;
            cur = prev;
        }
    };
    for (size_t i = 0; i < k; i++) {
        long m = mate[i];
        if (m < 0) {
            throw std::runtime_error("unrealizable syndrome");
        }
        size_t mm = static_cast<size_t>(m);
        if (mm < k) {
            if (mm > i) {
                walk(i, defects[mm]);
            }
        } else {
            walk(i, g.boundary);
        }
    }
}

ErrorConfiguration SplitDecoder::decode(const std::vector<size_t> &syndrome) const {
    ErrorConfiguration out;
    out.flipped.assign(num_mechanisms_, 0);
    for (int ch = 0; ch < 2; ch++) {
        const SyndromeGraph &g = graphs_[ch];
        std::vector<size_t> defects;
        for (size_t d : syndrome) {
            if (d >= detectors_.size()) {
                throw ValidationError("syndrome names an unknown detector");
            }
            auto it = std::lower_bound(g.detectors.begin(), g.detectors.end(), d);
            if (it != g.detectors.end() && *it == d) {
                defects.push_back(static_cast<size_t>(it - g.detectors.begin()));
            }
        }
        decode_channel(g, defects, out);
    }
    return out;
}

bool SplitDecoder::is_logical_failure(const ErrorConfiguration &e, const ErrorConfiguration &correction,
                                      char which) const {
    const auto &obs = observable(which);
    unsigned parity = 0;
    for (size_t m = 0; m < num_mechanisms_; m++) {
        parity ^= (e.flipped[m] ^ correction.flipped[m]) & obs[m];
    }
    return parity != 0;
}

std::optional<int> SplitDecoder::min_cut_distance(char which) const {
    const auto &obs = observable(which);
    std::optional<int> best;
    for (const SyndromeGraph &g : graphs_) {
        size_t nodes = g.boundary + 1;
        for (size_t s = 0; s < nodes; s++) {
            std::vector<int> dist(2 * nodes, -1);
            std::deque<size_t> q{2 * s};
            dist[2 * s] = 0;
            while (!q.empty()) {
                size_t st = q.front();
                q.pop_front();
                size_t u = st / 2, par = st % 2;
                for (auto [v, lm] : g.adjacency[u]) {
                    size_t nst = 2 * v + (par ^ obs[g.mechanisms[lm]]);
                    if (dist[nst] < 0) {
                        dist[nst] = dist[st] + 1;
                        q.push_back(nst);
                    }
                }
            }
            if (dist[2 * s + 1] >= 0 && (!best || dist[2 * s + 1] < *best)) {
                best = dist[2 * s + 1];
            }
        }
    }
    return best;
}

FailureEstimate SplitDecoder::monte_carlo_failure(double p, size_t trials, uint64_t seed, unsigned threads) const {
    if (trials == 0) {
        throw ValidationError("trials must be at least 1");
    }
    std::atomic<size_t> next{0}, failures{0};
    auto worker = [&]() {
        size_t local = 0;
        for (size_t i = next++; i < trials; i = next++) {
            ErrorConfiguration e = sample_errors(p, trial_seed(seed, i));
            ErrorConfiguration c = decode(syndrome_of(e));
            local += is_logical_failure(e, c);
        }
        failures += local;
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < std::max(1u, threads); t++) {
        pool.emplace_back(worker);
    }
    worker();
    for (auto &t : pool) {
        t.join();
    }
    return wilson(failures, trials);
}

std::vector<SplitDecoder::ExhaustiveResult> SplitDecoder::exhaustive_sweep(int max_weight, unsigned threads) const {
    if (max_weight < 1 || max_weight > 3) {
        throw ValidationError("exhaustive sweep supports weights 1 to 3");
    }
    std::vector<ExhaustiveResult> out;
    size_t m = num_mechanisms_;
    for (int w = 1; w <= max_weight; w++) {
        std::atomic<size_t> next{0}, configs{0}, failures{0};
        auto worker = [&]() {
            size_t lc = 0, lf = 0;
            ErrorConfiguration e;
            e.flipped.assign(m, 0);
            // The first mechanism is distributed across threads; the rest are
            // enumerated in increasing order.
            for (size_t a = next++; a < m; a = next++) {
                std::vector<size_t> chosen{a};
                std::function<void(size_t)> rec = [&](size_t start) {
                    if (static_cast<int>(chosen.size()) == w) {
                        for (size_t x : chosen) {
                            e.flipped[x] = 1;
                        }
                        lc++;
                        lf += is_logical_failure(e, decode(syndrome_of(e)));
                        for (size_t x : chosen) {
                            e.flipped[x] = 0;
                        }
                        return;
                    }
                    for (size_t b = start; b < m; b++) {
                        chosen.push_back(b);
                        rec(b + 1);
                        chosen.pop_back();
                    }
                };
                rec(a + 1);
            }
            configs += lc;
            failures += lf;
        };
        std::vector<std::thread> pool;
        for (unsigned t = 1; t < std::max(1u, threads); t++) {
            pool.emplace_back(worker);
        }
        worker();
        for (auto &t : pool) {
            t.join();
        }
        out.push_back({static_cast<size_t>(w), configs.load(), failures.load()});
    }
    return out;
}

}  // namespace colorsurg
