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

#include <string>
#include <vector>

namespace colorsurg {

enum class Scheme { Color, Surface };

std::string scheme_name(Scheme s);
Scheme scheme_from_name(const std::string &s);

// Per-scheme coefficients: space = space_coeff(N) d^2, time = time_coeff T d.
struct SchemeSpec {
    Scheme scheme;
    std::string name;
    std::string space_formula;
    std::string time_formula;
    std::string spacetime_formula;
    double space_coeff(double n) const;
    double time_coeff() const;
};

SchemeSpec scheme_spec(Scheme s);

struct AlgorithmSpec {
    double n = 100;        // logical data qubits
    double t_count = 1e8;  // logical Pauli measurement steps
    double budget = 0.01;  // total failure probability
    void validate() const;
};

struct NoiseModel {
    double p = 1e-3;
    double p_th_surface = 0.0067;
    double p_th_color = 0.0037;
};

// 0.1 (100 p)^((d+1)/2) per code cycle. d must be an odd integer >= 1.
double surface_logical_rate(double p, int d);
// Same law for real-valued d.
double surface_logical_rate_real(double p, double d);
// True when 100 p >= 1, where the rate no longer falls with distance.
bool surface_rate_degenerate(double p);

// ln(p / p_th_surface) / ln(p / p_th_color).
double distance_ratio(const NoiseModel &nm);
double equivalent_color_distance(const NoiseModel &nm, double d_s);
// Smallest odd integer >= v (and >= 3).
int round_up_odd(double v);

// Smallest odd d_s with patches * cycles * p_L <= budget, where patches is the
// surface footprint in units of d^2 and cycles = T d_s.
int required_surface_distance(const AlgorithmSpec &alg, const NoiseModel &nm);

// Real-valued distance at which a scheme exactly meets the budget using its
// own footprint and cycle count. The color code uses the surface law through
// the distance conversion, p_L = 0.1 (100 p)^((d / r + 1) / 2).
double budget_distance(Scheme s, const AlgorithmSpec &alg, const NoiseModel &nm);

double footprint(Scheme s, double n, double d);
double runtime(Scheme s, double t_count, double d);
double spacetime(Scheme s, double n, double t_count, double d);

struct SweepPoint {
    double p = 0;
    bool feasible = false;
    std::string note;
    double d_surface = 0;  // real-valued budget distances
    double d_color = 0;
    int d_surface_odd = 0;
    int d_color_odd = 0;
    double qubits_surface = 0;
    double qubits_color = 0;
    double spacetime_surface = 0;
    double spacetime_color = 0;
    double qubit_ratio = 0;      // color / surface
    double spacetime_ratio = 0;  // color / surface
    // Single surface distance from required_surface_distance and d_c rounded
    // up from it; reported for comparison only.
    int literal_d_surface = 0;
    int literal_d_color = 0;
    double literal_spacetime_ratio = 0;
};

SweepPoint compare_point(const AlgorithmSpec &alg, double p);
std::vector<double> log_grid(double p_min, double p_max, int points);
std::vector<SweepPoint> compare_sweep(const AlgorithmSpec &alg, const std::vector<double> &p_grid);
// Physical error rate below which the color code needs fewer qubits, found by
// bisection on [lo, hi]. Returns a negative value if there is no sign change.
double qubit_crossover(const AlgorithmSpec &alg, double lo = 1e-5, double hi = 3e-3);

struct Table1Row {
    SchemeSpec spec;
    double space;      // in d^2
    double time;       // in units of T d
    double spacetime;  // in units of T d^3
};
std::vector<Table1Row> table1(double n);

struct DistillationOverhead {
    Scheme scheme;
    double space;      // d^2
    double time;       // d, for the sequence of 11 commuting measurements
    double spacetime;  // d^3
};
// The color-code speedup factor 1.8 is an input constant.
constexpr double kDistillationSpeedup = 1.8;
DistillationOverhead distillation_overhead(Scheme s);

}  // namespace colorsurg
