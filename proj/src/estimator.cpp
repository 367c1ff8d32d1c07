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


#include "colorsurg/estimator.hpp"

#include <cmath>

#include "colorsurg/pauli.hpp"

namespace colorsurg {

std::string scheme_name(Scheme s) {
    return s == Scheme::Color ? "color" : "surface";
}

Scheme scheme_from_name(const std::string &s) {
    if (s == "color" || s == "color-fast-block") {
        return Scheme::Color;
    }
    if (s == "surface" || s == "surface-fast-block") {
        return Scheme::Surface;
    }
    throw ValidationError("unknown scheme '" + s + "'");
}

double SchemeSpec::space_coeff(double n) const {
    return scheme == Scheme::Color ? 1.5 * n : 2 * n + std::sqrt(8 * n) + 1;
}

double SchemeSpec::time_coeff() const {
    return scheme == Scheme::Color ? 0.5 : 1.0;
}

SchemeSpec scheme_spec(Scheme s) {
    if (s == Scheme::Color) {
        return {s, "color code", "1.5N", "0.5T", "0.75NT"};
    }
    return {s, "surface code", "2N+\\sqrt{8N}+1", "T", "(2N+\\sqrt{8N}+1)T"};
}

void AlgorithmSpec::validate() const {
    if (!(n > 0) || !(t_count > 0)) {
        throw ValidationError("qubit count and T-count must be positive");
    }
    if (!(budget > 0 && budget < 1)) {
        throw ValidationError("failure budget must lie in (0, 1)");
    }
}

double surface_logical_rate_real(double p, double d) {
    if (!(p > 0) || !(d >= 1)) {
        throw ValidationError("need p > 0 and d >= 1");
    }
    return 0.1 * std::pow(100 * p, (d + 1) / 2);
}

double surface_logical_rate(double p, int d) {
    if (d < 1 || d % 2 == 0) {
        throw ValidationError("surface code distance must be a positive odd integer");
    }
    return surface_logical_rate_real(p, d);
}

bool surface_rate_degenerate(double p) {
    return 100 * p >= 1;
}

double distance_ratio(const NoiseModel &nm) {
    if (!(nm.p > 0) || nm.p >= nm.p_th_surface || nm.p >= nm.p_th_color) {
        throw ValidationError("physical error rate must be positive and below both thresholds");
    }
    return std::log(nm.p / nm.p_th_surface) / std::log(nm.p / nm.p_th_color);
}

double equivalent_color_distance(const NoiseModel &nm, double d_s) {
    return d_s * distance_ratio(nm);
}

int round_up_odd(double v) {
    int d = static_cast<int>(std::ceil(v - 1e-9));
    if (d % 2 == 0) {
        d++;
    }
    return std::max(d, 3);
}

namespace {

constexpr int kMaxDistance = 100001;

// Budget consumption for a scheme at real distance d.
double consumption(Scheme s, const AlgorithmSpec &alg, const NoiseModel &nm, double d) {
    SchemeSpec spec = scheme_spec(s);
    double scale = s == Scheme::Color ? distance_ratio(nm) : 1.0;
    return spec.space_coeff(alg.n) * spec.time_coeff() * alg.t_count * d * 0.1 *
           std::pow(100 * nm.p, (d / scale + 1) / 2);
}

}  // namespace

int required_surface_distance(const AlgorithmSpec &alg, const NoiseModel &nm) {
    alg.validate();
    if (surface_rate_degenerate(nm.p) || nm.p >= nm.p_th_surface) {
        throw ValidationError("physical error rate is at or above the surface threshold");
    }
    double patches = scheme_spec(Scheme::Surface).space_coeff(alg.n);
    for (int d = 3; d <= kMaxDistance; d += 2) {
        if (patches * alg.t_count * d * surface_logical_rate(nm.p, d) <= alg.budget) {
            return d;
        }
    }
    throw ValidationError("failure budget cannot be met below distance " + std::to_string(kMaxDistance));
}

double budget_distance(Scheme s, const AlgorithmSpec &alg, const NoiseModel &nm) {
    alg.validate();
    distance_ratio(nm);
    double scale = s == Scheme::Color ? distance_ratio(nm) : 1.0;
    // The consumption grows with d up to d* = -2 scale / ln(100 p) and falls
    // after it, so search to the right of the peak.
    double lo = std::max(1.0, -2 * scale / std::log(100 * nm.p));
    if (consumption(s, alg, nm, lo) <= alg.budget) {
        return lo;
    }
    double hi = lo;
    while (consumption(s, alg, nm, hi) > alg.budget) {
        hi *= 2;
        if (hi > kMaxDistance) {
            throw ValidationError("failure budget cannot be met below distance " + std::to_string(kMaxDistance));
        }
    }
    for (int it = 0; it < 200; it++) {
        double mid = 0.5 * (lo + hi);
        (consumption(s, alg, nm, mid) > alg.budget ? lo : hi) = mid;
    }
    return hi;
}

double footprint(Scheme s, double n, double d) {
    return scheme_spec(s).space_coeff(n) * d * d;
}

double runtime(Scheme s, double t_count, double d) {
    return scheme_spec(s).time_coeff() * t_count * d;
}

double spacetime(Scheme s, double n, double t_count, double d) {
    return footprint(s, n, d) * runtime(s, t_count, d);
}

SweepPoint compare_point(const AlgorithmSpec &alg, double p) {
    SweepPoint pt;
    pt.p = p;
    NoiseModel nm;
    nm.p = p;
    try {
        pt.d_surface = budget_distance(Scheme::Surface, alg, nm);
        pt.d_color = budget_distance(Scheme::Color, alg, nm);
        pt.literal_d_surface = required_surface_distance(alg, nm);
    } catch (const ValidationError &e) {
        pt.note = e.what();
        return pt;
    }
    pt.feasible = true;
    pt.d_surface_odd = round_up_odd(pt.d_surface);
    pt.d_color_odd = round_up_odd(pt.d_color);
    pt.qubits_surface = footprint(Scheme::Surface, alg.n, pt.d_surface);
    pt.qubits_color = footprint(Scheme::Color, alg.n, pt.d_color);
    pt.spacetime_surface = spacetime(Scheme::Surface, alg.n, alg.t_count, pt.d_surface);
    pt.spacetime_color = spacetime(Scheme::Color, alg.n, alg.t_count, pt.d_color);
    pt.qubit_ratio = pt.qubits_color / pt.qubits_surface;
    pt.spacetime_ratio = pt.spacetime_color / pt.spacetime_surface;
    pt.literal_d_color = round_up_odd(equivalent_color_distance(nm, pt.literal_d_surface));
    pt.literal_spacetime_ratio = spacetime(Scheme::Color, alg.n, alg.t_count, pt.literal_d_color) /
                                 spacetime(Scheme::Surface, alg.n, alg.t_count, pt.literal_d_surface);
    return pt;
}

std::vector<double> log_grid(double p_min, double p_max, int points) {
    if (!(p_min > 0) || !(p_max >= p_min) || points < 1) {
        throw ValidationError("need 0 < p_min <= p_max and at least one point");
    }
    std::vector<double> out;
    for (int i = 0; i < points; i++) {
        double t = points == 1 ? 0.0 : static_cast<double>(i) / (points - 1);
        out.push_back(std::exp(std::log(p_min) + t * (std::log(p_max) - std::log(p_min))));
    }
    return out;
}

std::vector<SweepPoint> compare_sweep(const AlgorithmSpec &alg, const std::vector<double> &p_grid) {
    alg.validate();
    std::vector<SweepPoint> out;
    for (double p : p_grid) {
        out.push_back(compare_point(alg, p));
    }
    return out;
}

double qubit_crossover(const AlgorithmSpec &alg, double lo, double hi) {
    auto f = [&](double p) { return compare_point(alg, p).qubit_ratio - 1.0; };
    double flo = f(lo), fhi = f(hi);
    if (flo * fhi > 0) {
        return -1.0;
    }
    for (int it = 0; it < 100; it++) {
        double mid = std::sqrt(lo * hi);
        double fm = f(mid);
        if ((fm > 0) == (flo > 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return std::sqrt(lo * hi);
}

std::vector<Table1Row> table1(double n) {
    if (!(n >= 0)) {
        throw ValidationError("qubit count must be non-negative");
    }
    std::vector<Table1Row> out;
    for (Scheme s : {Scheme::Color, Scheme::Surface}) {
        SchemeSpec spec = scheme_spec(s);
        double space = spec.space_coeff(n);
        out.push_back({spec, space, spec.time_coeff(), space * spec.time_coeff()});
    }
    return out;
}

DistillationOverhead distillation_overhead(Scheme s) {
    if (s == Scheme::Color) {
        double time = 11 / kDistillationSpeedup;
        return {s, 10.5, time, 10.5 * time};
    }
    return {s, 11.0, 11.0, 121.0};
}

}  // namespace colorsurg
