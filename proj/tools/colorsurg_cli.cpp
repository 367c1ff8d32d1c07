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


// Command-line front end. Exit codes: 0 success, 1 runtime error, 2 usage
// error, 3 validation error. Failures print one JSON line on stderr:
//   {"error":{"kind":"validation","message":"..."}}

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "colorsurg/anyons.hpp"
#include "colorsurg/decoder.hpp"
#include "colorsurg/estimator.hpp"
#include "colorsurg/json_io.hpp"
#include "colorsurg/kernels.hpp"
#include "colorsurg/lattice.hpp"
#include "colorsurg/layout.hpp"
#include "colorsurg/surgery.hpp"

namespace fs = std::filesystem;
using namespace colorsurg;

namespace {

struct RuntimeFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

unsigned g_threads = 1;

std::string resolve_output(const std::string &path) {
    if (path.empty() || path == "-") {
        return path;
    }
    fs::path p(path);
    if (p.is_relative()) {
        if (const char *dir = std::getenv("COLORSURG_OUT_DIR"); dir && *dir) {
            p = fs::path(dir) / p;
        }
    }
    if (p.has_parent_path()) {
        fs::create_directories(p.parent_path());
    }
    return p.string();
}

// Writes to the resolved path, or stdout when path is empty or "-".
void emit(const std::string &path, const std::string &text) {
    std::string resolved = resolve_output(path);
    if (resolved.empty() || resolved == "-") {
        std::cout << text;
    } else {
        write_text_file(resolved, text);
    }
}

std::string dump(const Json &j) {
    return j.dump(2) + "\n";
}

Json read_json(const std::string &path) {
    try {
        return Json::parse(read_text_file(path));
    } catch (const nlohmann::json::exception &e) {
        throw ValidationError("'" + path + "' is not valid JSON: " + e.what());
    }
}

Json base_config(const std::string &command) {
    Json c;
    c["command"] = command;
    c["version"] = COLORSURG_VERSION;
    return c;
}

std::string csv_comment(const Json &config) {
    return "# config: " + config.dump() + "\n";
}

std::vector<double> parse_double_list(const std::string &text) {
    std::vector<double> out;
    std::string cell;
    std::istringstream in(text);
    while (std::getline(in, cell, ',')) {
        if (cell.empty()) {
            continue;
        }
        size_t used = 0;
        double v = 0;
        try {
            v = std::stod(cell, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used != cell.size()) {
            throw ValidationError("'" + cell + "' is not a number");
        }
        out.push_back(v);
    }
    if (out.empty()) {
        throw ValidationError("empty number list");
    }
    return out;
}

// ---------------------------------------------------------------- lattice

struct LatticeArgs {
    std::string family = "triangular";
    int distance = 3;
    int dx = 3, dz = 7;
    int c0 = 0;
    std::string out, in;
    bool brute_force = false;
};

Json verification_json(const CodePatch &p) {
    LatticeReport rep = verify_lattice(p.lattice);
    Json v;
    v["ok"] = rep.ok();
    v["violations"] = rep.violations;
    v["notes"] = rep.notes;
    v["code_dimension"] = code_dimension(p.lattice);
    return v;
}

int lattice_build(const LatticeArgs &a) {
    Json config = base_config("lattice build");
    config["family"] = a.family;
    CodePatch patch;
    if (a.family == "triangular") {
        config["distance"] = a.distance;
        config["c0"] = a.c0;
        patch = build_triangular_code(a.distance, a.c0);
    } else if (a.family == "thin") {
        config["dx"] = a.dx;
        config["dz"] = a.dz;
        patch = build_thin_code(a.dx, a.dz);
    } else {
        throw ValidationError("unknown lattice family '" + a.family + "'");
    }
    Json j = patch_to_json(patch);
    j["config"] = config;
    j["verification"] = verification_json(patch);
    emit(a.out, dump(j));
    return 0;
}

int lattice_inspect(const LatticeArgs &a) {
    Json doc = read_json(a.in);
    CodePatch patch = patch_from_json(doc);
    Json out;
    out["config"] = base_config("lattice inspect");
    out["config"]["in"] = a.in;
    out["family"] = patch.family;
    out["num_qubits"] = patch.lattice.num_qubits();
    out["num_faces"] = patch.lattice.faces.size();
    out["num_edges"] = patch.lattice.edges.size();
    out["k"] = patch.k;
    out["distance_x"] = patch.distance_x;
    out["distance_z"] = patch.distance_z;
    Json v = verification_json(patch);
    if (v["code_dimension"].get<size_t>() != patch.k) {
        v["ok"] = false;
        v["violations"].push_back("stored k does not match the code dimension");
    }
    if (a.brute_force) {
        for (char t : {'X', 'Z'}) {
            int stored = t == 'X' ? patch.distance_x : patch.distance_z;
            auto bf = brute_force_distance(patch.lattice, t, stored);
            v[std::string("brute_force_distance_") + static_cast<char>(std::tolower(t))] =
                bf ? Json(*bf) : Json(nullptr);
            if (!bf || *bf != stored) {
                v["ok"] = false;
                v["violations"].push_back(std::string("stored ") + t + " distance disagrees with brute force");
            }
        }
    }
    out["verification"] = v;
    if (doc.contains("config")) {
        out["source_config"] = doc["config"];
    }
    emit(a.out, dump(out));
    if (!v["ok"].get<bool>()) {
        throw ValidationError("patch failed verification");
    }
    return 0;
}

// ---------------------------------------------------------------- layouts

struct LayoutArgs {
    std::string layout;
    int distance = 0;
    size_t patches = 0;
    std::string la, lb;
    std::optional<int> depth;
};

Json layout_config(const SurgeryLayout &lay, const LayoutArgs &a) {
    Json c;
    c["distance"] = lay.d;
    c["num_patches"] = lay.num_patches;
    c["la"] = logical_str(lay.la);
    c["lb"] = logical_str(lay.lb);
    if (a.depth) {
        c["ancilla_depth"] = *a.depth;
    }
    return c;
}

size_t max_patch_index(const std::string &text) {
    size_t best = 0;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        if (tok.size() >= 2 && std::isdigit(static_cast<unsigned char>(tok[1]))) {
            best = std::max<size_t>(best, std::stoul(tok.substr(1)));
        }
    }
    return best;
}

// Builds a layout from a layout document, a patch document, or flags. For
// layout documents the stored merged generators must match the rebuild.
SurgeryLayout resolve_layout(LayoutArgs a) {
    std::optional<Json> stored;
    if (!a.layout.empty()) {
        Json doc = read_json(a.layout);
        std::string format = doc.value("format", "");
        if (format == "colorsurg.layout") {
            const Json &c = doc.at("config");
            a.distance = c.at("distance").get<int>();
            if (a.la.empty()) {
                a.la = c.at("la").get<std::string>();
            }
            if (a.lb.empty()) {
                a.lb = c.at("lb").get<std::string>();
            }
            a.patches = std::max(a.patches, c.at("num_patches").get<size_t>());
            if (c.contains("ancilla_depth") && !a.depth) {
                a.depth = c["ancilla_depth"].get<int>();
            }
            stored = doc;
        } else if (format == "colorsurg.patch") {
            CodePatch p = patch_from_json(doc);
            if (p.family != "triangular") {
                throw ValidationError("surgery layouts are built from triangular patches");
            }
            a.distance = p.distance_x;
        } else {
            throw ValidationError("'" + a.layout + "' is neither a layout nor a patch document");
        }
    }
    if (a.distance == 0) {
        throw ValidationError("give --layout or --distance");
    }
    if (a.la.empty() || a.lb.empty()) {
        throw ValidationError("both --la and --lb are required");
    }
    size_t n = std::max({a.patches, max_patch_index(a.la), max_patch_index(a.lb)});
    LayoutOptions opts;
    opts.ancilla_depth = a.depth;
    SurgeryLayout lay = build_layout(a.distance, parse_logical(a.la, n), parse_logical(a.lb, n), opts);
    if (stored && logical_str(lay.la) == stored->at("config").at("la").get<std::string>() &&
        logical_str(lay.lb) == stored->at("config").at("lb").get<std::string>()) {
        Json rebuilt = layout_to_json(lay);
        if (rebuilt["merged_generators"] != stored->at("merged_generators")) {
            throw ValidationError("stored layout does not match the rebuilt layout");
        }
    }
    return lay;
}

Json leakage_json(const LeakageReport &rep) {
    Json j;
    j["ok"] = rep.ok();
    j["noncommuting_pairs"] = rep.noncommuting_pairs;
    j["lost_data_stabilizers"] = rep.lost_data_stabilizers;
    j["measured_span_size"] = rep.measured.size() + 1;
    j["expected_span_size"] = rep.expected.size() + 1;
    Json w = Json::array();
    for (const auto &x : rep.witnesses) {
        w.push_back({{"logical", logical_str(x.logical)},
                     {"in_merged_span", x.in_merged_span},
                     {"anticommuting_edges", x.anticommuting_edges},
                     {"u_in_stabilizer", x.u_in_stabilizer}});
    }
    j["witnesses"] = w;
    return j;
}

int layout_build(const LayoutArgs &a, const std::string &out) {
    SurgeryLayout lay = resolve_layout(a);
    Json j = layout_to_json(lay);
    Json config = base_config("layout build");
    config.update(layout_config(lay, a));
    j["config"] = config;
    j["leakage"] = leakage_json(verify_no_leakage(lay));
    emit(out, dump(j));
    return 0;
}

// ---------------------------------------------------------------- surgery

struct SurgeryArgs {
    LayoutArgs layout;
    uint64_t seed = 1;
    size_t trials = 100;
    std::string init = "random";
    std::string out, in;
};

Json summary_json(const Json &trials) {
    size_t agree = 0, det_a = 0, det_b = 0, windows_ok = 0;
    for (const auto &t : trials) {
        agree += t.at("agree").get<bool>();
        det_a += t.at("deterministic_a").get<bool>();
        det_b += t.at("deterministic_b").get<bool>();
        windows_ok += t.at("merge_windows").get<size_t>() == 1;
    }
    Json s;
    s["trials"] = trials.size();
    s["agreements"] = agree;
    s["all_agree"] = agree == trials.size();
    s["deterministic_a"] = det_a;
    s["deterministic_b"] = det_b;
    s["single_merge_window"] = windows_ok == trials.size();
    return s;
}

int surgery_run(const SurgeryArgs &a) {
    if (a.trials == 0) {
        throw ValidationError("--trials must be at least 1");
    }
    InitialState init = initial_state_from_name(a.init);
    SurgeryLayout lay = resolve_layout(a.layout);
    LeakageReport leak = verify_no_leakage(lay);
    SurgeryProtocol proto(lay);
    Json config = base_config("surgery run");
    config.update(layout_config(lay, a.layout));
    config["seed"] = a.seed;
    config["trials"] = a.trials;
    config["init"] = initial_state_name(init);
    ReferenceSummary sum = verify_against_reference(proto, a.seed, a.trials, g_threads, init);
    Json trials = Json::array();
    for (const auto &t : sum.trials) {
        Json j;
        j["seed"] = t.seed;
        j["outcome_a"] = t.result.outcome_a;
        j["outcome_b"] = t.result.outcome_b;
        j["deterministic_a"] = t.result.deterministic_a;
        j["deterministic_b"] = t.result.deterministic_b;
        j["reference_a"] = t.reference_a;
        j["reference_b"] = t.reference_b;
        j["agree"] = t.agree;
        j["merge_windows"] = t.merge_windows;
        j["compared_logicals"] = t.compared_logicals;
        if (!t.diff.empty()) {
            j["diff"] = t.diff;
        }
        trials.push_back(j);
    }
    Json out;
    out["format"] = "colorsurg.surgery";
    out["config"] = config;
    out["leakage"] = leakage_json(leak);
    out["trace"] = sum.trials.front().trace;
    out["summary"] = summary_json(trials);
    out["trials"] = trials;
    emit(a.out, dump(out));
    if (!leak.ok()) {
        throw RuntimeFailure("layout leaks logical information");
    }
    if (!sum.all_agree()) {
        throw RuntimeFailure("lattice outcomes disagree with the reference in " +
                             std::to_string(sum.trials.size() - sum.agreements) + " trials");
    }
    return 0;
}

int surgery_summarize(const SurgeryArgs &a) {
    Json doc = read_json(a.in);
    if (doc.value("format", "") != "colorsurg.surgery") {
        throw ValidationError("'" + a.in + "' is not a surgery result document");
    }
    Json s = summary_json(doc.at("trials"));
    if (s != doc.at("summary")) {
        throw ValidationError("stored summary does not match the trial list");
    }
    Json out;
    out["config"] = doc.at("config");
    out["summary"] = s;
    out["leakage_ok"] = doc.at("leakage").at("ok");
    emit(a.out, dump(out));
    return 0;
}

// ---------------------------------------------------------------- decode

struct DecodeArgs {
    LayoutArgs layout;
    std::string p_list = "0.003,0.01,0.03";
    size_t trials = 10000;
    uint64_t seed = 1;
    std::string observable = "red-edge";
    int max_weight = 2;
    std::string csv, out, in;
};

ObservableModel observable_model(const std::string &s) {
    if (s == "red-edge") {
        return ObservableModel::RedEdgeSet;
    }
    if (s == "dressed") {
        return ObservableModel::DressedRecipe;
    }
    throw ValidationError("unknown observable model '" + s + "'");
}

Json decode_config(const std::string &cmd, const SurgeryLayout &lay, const DecodeArgs &a) {
    Json c = base_config(cmd);
    c.update(layout_config(lay, a.layout));
    c["observable"] = a.observable;
    return c;
}

int decode_sweep(const DecodeArgs &a) {
    auto ps = parse_double_list(a.p_list);
    if (a.trials == 0) {
        throw ValidationError("--trials must be at least 1");
    }
    SurgeryLayout lay = resolve_layout(a.layout);
    SurgeryProtocol proto(lay);
    SplitDecoder dec(proto, observable_model(a.observable));
    Json config = decode_config("decode sweep", lay, a);
    config["p_list"] = ps;
    config["trials"] = a.trials;
    config["seed"] = a.seed;
    std::string text = csv_comment(config) + "d,p,trials,failures,rate,ci_low,ci_high\n";
    for (size_t i = 0; i < ps.size(); i++) {
        FailureEstimate f = dec.monte_carlo_failure(ps[i], a.trials, trial_seed(a.seed, i), g_threads);
        text += std::to_string(lay.d) + "," + format_double(ps[i]) + "," + std::to_string(f.trials) + "," +
                std::to_string(f.failures) + "," + format_double(f.rate) + "," + format_double(f.ci_low) + "," +
                format_double(f.ci_high) + "\n";
    }
    emit(a.csv.empty() ? a.out : a.csv, text);
    return 0;
}

// Least-squares slope of log rate against log p over rows with failures.
std::optional<double> loglog_slope(const std::vector<std::pair<double, double>> &pts) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    size_t n = 0;
    for (auto [p, r] : pts) {
        if (p > 0 && r > 0) {
            double x = std::log(p), y = std::log(r);
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
            n++;
        }
    }
    if (n < 2 || n * sxx - sx * sx == 0) {
        return std::nullopt;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

int decode_summarize(const DecodeArgs &a) {
    CsvTable t = parse_csv(read_text_file(a.in));
    size_t cp = t.column("p"), cr = t.column("rate"), cf = t.column("failures"), cn = t.column("trials");
    Json rows = Json::array();
    std::vector<std::pair<double, double>> pts;
    for (const auto &r : t.rows) {
        double p = std::stod(r[cp]), rate = std::stod(r[cr]);
        size_t fails = std::stoul(r[cf]), n = std::stoul(r[cn]);
        FailureEstimate w = wilson(fails, n);
        if (std::abs(w.rate - rate) > 1e-12) {
            throw ValidationError("rate column disagrees with failures/trials");
        }
        pts.push_back({p, rate});
        rows.push_back({{"p", p}, {"trials", n}, {"failures", fails}, {"rate", rate}});
    }
    Json out;
    out["config"] = base_config("decode summarize");
    out["config"]["in"] = a.in;
    out["source_config"] = t.comments.empty() ? Json(nullptr) : Json(t.comments);
    out["rows"] = rows;
    auto slope = loglog_slope(pts);
    out["loglog_slope"] = slope ? Json(*slope) : Json(nullptr);
    emit(a.out, dump(out));
    return 0;
}

int decode_mincut(const DecodeArgs &a) {
    SurgeryLayout lay = resolve_layout(a.layout);
    SurgeryProtocol proto(lay);
    SplitDecoder dec(proto, observable_model(a.observable));
    Json out;
    out["config"] = decode_config("decode mincut", lay, a);
    out["detectors"] = dec.detectors().size();
    out["mechanisms"] = dec.num_mechanisms();
    for (char w : {'A', 'B'}) {
        auto m = dec.min_cut_distance(w);
        out[std::string("min_cut_") + static_cast<char>(std::tolower(w))] = m ? Json(*m) : Json("infinite");
    }
    emit(a.out, dump(out));
    return 0;
}

int decode_exhaustive(const DecodeArgs &a) {
    SurgeryLayout lay = resolve_layout(a.layout);
    SurgeryProtocol proto(lay);
    SplitDecoder dec(proto, observable_model(a.observable));
    Json out;
    out["config"] = decode_config("decode exhaustive", lay, a);
    out["config"]["max_weight"] = a.max_weight;
    Json rows = Json::array();
    for (const auto &r : dec.exhaustive_sweep(a.max_weight, g_threads)) {
        rows.push_back({{"weight", r.weight}, {"configurations", r.configurations}, {"failures", r.failures}});
    }
    out["weights"] = rows;
    emit(a.out, dump(out));
    return 0;
}

// ---------------------------------------------------------------- anyons

Json names(const std::vector<Anyon> &v) {
    Json j = Json::array();
    for (Anyon a : v) {
        j.push_back(a.name());
    }
    return j;
}

std::vector<Anyon> anyons_from(const Json &j) {
    std::vector<Anyon> out;
    for (const auto &s : j) {
        out.push_back(Anyon::parse(s.get<std::string>()));
    }
    std::sort(out.begin(), out.end());
    return out;
}

Json wall_json(const WallSpec &w) {
    Json j;
    j["kind"] = wall_kind_name(w.kind);
    j["describe"] = w.describe();
    switch (w.kind) {
        case WallKind::Transparent: {
            Json cols = Json::array();
            for (uint8_t c : w.columns) {
                cols.push_back(static_cast<int>(c));
            }
            j["columns"] = cols;
            j["row_perm"] = w.row_perm;
            j["col_perm"] = w.col_perm;
            j["transpose"] = w.transpose;
            break;
        }
        case WallKind::SemiTransparent:
            j["c_left"] = w.c_left.name();
            j["c_right"] = w.c_right.name();
            j["swap_labels"] = w.swap_labels;
            break;
        default:
            j["left"] = names(w.left.condensed);
            j["right"] = names(w.right.condensed);
    }
    return j;
}

WallSpec wall_from(const Json &j) {
    WallSpec w;
    w.kind = wall_kind_from_name(j.at("kind").get<std::string>());
    switch (w.kind) {
        case WallKind::Transparent:
            for (int i = 0; i < 4; i++) {
                w.columns[i] = static_cast<uint8_t>(j.at("columns").at(i).get<int>());
            }
            w.row_perm = j.at("row_perm").get<std::array<int, 3>>();
            w.col_perm = j.at("col_perm").get<std::array<int, 3>>();
            w.transpose = j.at("transpose").get<bool>();
            break;
        case WallKind::SemiTransparent:
            w.c_left = Anyon::parse(j.at("c_left").get<std::string>());
            w.c_right = Anyon::parse(j.at("c_right").get<std::string>());
            w.swap_labels = j.at("swap_labels").get<bool>();
            break;
        default:
            w.left.condensed = anyons_from(j.at("left"));
            w.right.condensed = anyons_from(j.at("right"));
    }
    return w;
}

struct AnyonArgs {
    std::string kind = "boundaries";
    bool validate = false;
    std::string out, in;
};

int anyons_enumerate(const AnyonArgs &a) {
    Json config = base_config("anyons enumerate");
    config["kind"] = a.kind;
    config["validate"] = a.validate;
    Json items = Json::array();
    size_t valid = 0;
    std::string why;
    if (a.kind == "boundaries") {
        for (const auto &b : enumerate_boundaries()) {
            items.push_back({{"condensed", names(b.condensed)}, {"describe", b.describe()}});
            valid += a.validate && validate_boundary(b, &why);
        }
    } else {
        WallKind k = wall_kind_from_name(a.kind);
        auto walls = k == WallKind::Transparent       ? enumerate_transparent_walls()
                     : k == WallKind::SemiTransparent ? enumerate_semitransparent_walls()
                                                      : enumerate_opaque_walls();
        for (const auto &w : walls) {
            items.push_back(wall_json(w));
            valid += a.validate && validate_wall(w, &why);
        }
    }
    Json out;
    out["format"] = "colorsurg.anyons";
    out["config"] = config;
    out["kind"] = a.kind;
    out["count"] = items.size();
    if (a.validate) {
        out["validated"] = valid;
        out["all_valid"] = valid == items.size();
    }
    out["items"] = items;
    emit(a.out, dump(out));
    if (a.validate && valid != items.size()) {
        throw ValidationError("validator rejected an enumerated item: " + why);
    }
    return 0;
}

int anyons_validate(const AnyonArgs &a) {
    Json doc = read_json(a.in);
    if (doc.value("format", "") != "colorsurg.anyons") {
        throw ValidationError("'" + a.in + "' is not an anyon enumeration document");
    }
    std::string kind = doc.at("kind").get<std::string>();
    size_t valid = 0;
    std::set<std::string> seen;
    std::string why;
    for (const auto &item : doc.at("items")) {
        if (kind == "boundaries") {
            BoundarySpec b{anyons_from(item.at("condensed"))};
            valid += validate_boundary(b, &why);
            seen.insert(b.describe());
        } else {
            WallSpec w = wall_from(item);
            valid += validate_wall(w, &why);
            seen.insert(w.describe());
        }
    }
    Json out;
    out["config"] = base_config("anyons validate");
    out["config"]["in"] = a.in;
    out["kind"] = kind;
    out["count"] = doc.at("items").size();
    out["distinct"] = seen.size();
    out["validated"] = valid;
    out["all_valid"] = valid == doc.at("items").size() && seen.size() == valid;
    emit(a.out, dump(out));
    if (!out["all_valid"].get<bool>()) {
        throw ValidationError("invalid or duplicate items: " + why);
    }
    return 0;
}

// ---------------------------------------------------------------- estimate

struct EstimateArgs {
    double n = 100, tcount = 1e8, budget = 0.01;
    double p_min = 5e-5, p_max = 2e-3;
    int points = 50;
    std::string csv, out, in;
};

const char *kSweepHeader =
    "p,feasible,d_surface,d_color,d_surface_odd,d_color_odd,qubits_surface,qubits_color,spacetime_surface,"
    "spacetime_color,qubit_ratio,spacetime_ratio,literal_d_surface,literal_d_color,literal_spacetime_ratio";

int estimate_sweep(const EstimateArgs &a) {
    AlgorithmSpec alg{a.n, a.tcount, a.budget};
    alg.validate();
    Json config = base_config("estimate sweep");
    config["n"] = a.n;
    config["tcount"] = a.tcount;
    config["budget"] = a.budget;
    config["p_min"] = a.p_min;
    config["p_max"] = a.p_max;
    config["points"] = a.points;
    std::string text = csv_comment(config) + kSweepHeader + "\n";
    auto f = format_double;
    for (const SweepPoint &s : compare_sweep(alg, log_grid(a.p_min, a.p_max, a.points))) {
        text += f(s.p) + "," + (s.feasible ? "1" : "0") + "," + f(s.d_surface) + "," + f(s.d_color) + "," +
                std::to_string(s.d_surface_odd) + "," + std::to_string(s.d_color_odd) + "," + f(s.qubits_surface) +
                "," + f(s.qubits_color) + "," + f(s.spacetime_surface) + "," + f(s.spacetime_color) + "," +
                f(s.qubit_ratio) + "," + f(s.spacetime_ratio) + "," + std::to_string(s.literal_d_surface) + "," +
                std::to_string(s.literal_d_color) + "," + f(s.literal_spacetime_ratio) + "\n";
    }
    emit(a.csv.empty() ? a.out : a.csv, text);
    return 0;
}

// Linear interpolation of column `col` at p (in log p) from a sweep table.
double interpolate(const std::vector<std::pair<double, double>> &pts, double p) {
    for (size_t i = 0; i + 1 < pts.size(); i++) {
        double p0 = pts[i].first, p1 = pts[i + 1].first;
        if ((p0 - p) * (p1 - p) <= 0) {
            double t = p1 == p0 ? 0 : (std::log(p) - std::log(p0)) / (std::log(p1) - std::log(p0));
            return pts[i].second + t * (pts[i + 1].second - pts[i].second);
        }
    }
    return std::nan("");
}

int estimate_summarize(const EstimateArgs &a) {
    CsvTable t = parse_csv(read_text_file(a.in));
    size_t cp = t.column("p"), cfz = t.column("feasible"), cq = t.column("qubit_ratio"),
           cs = t.column("spacetime_ratio");
    std::vector<std::pair<double, double>> q, st;
    for (const auto &r : t.rows) {
        if (r[cfz] == "1") {
            q.push_back({std::stod(r[cp]), std::stod(r[cq])});
            st.push_back({std::stod(r[cp]), std::stod(r[cs])});
        }
    }
    Json out;
    out["config"] = base_config("estimate summarize");
    out["config"]["in"] = a.in;
    out["source_config"] = t.comments.empty() ? Json(nullptr) : Json(t.comments);
    out["rows"] = t.rows.size();
    out["feasible_rows"] = q.size();
    auto num = [](double v) { return std::isnan(v) ? Json(nullptr) : Json(v); };
    out["spacetime_ratio_at_1e-3"] = num(interpolate(st, 1e-3));
    out["spacetime_ratio_at_1e-4"] = num(interpolate(st, 1e-4));
    Json cross = nullptr;
    for (size_t i = 0; i + 1 < q.size(); i++) {
        double y0 = q[i].second - 1, y1 = q[i + 1].second - 1;
        if (y0 * y1 <= 0 && y0 != y1) {
            double t0 = y0 / (y0 - y1);
            cross = std::exp(std::log(q[i].first) + t0 * (std::log(q[i + 1].first) - std::log(q[i].first)));
            break;
        }
    }
    out["qubit_crossover"] = cross;
    emit(a.out, dump(out));
    return 0;
}

int estimate_table1(const EstimateArgs &a) {
    Json config = base_config("estimate table1");
    config["n"] = a.n;
    Json rows = Json::array();
    auto t = table1(a.n);
    for (const auto &r : t) {
        rows.push_back({{"scheme", r.spec.name},
                        {"space_formula", r.spec.space_formula},
                        {"time_formula", r.spec.time_formula},
                        {"spacetime_formula", r.spec.spacetime_formula},
                        {"space_d2", r.space},
                        {"time_Td", r.time},
                        {"spacetime_Td3", r.spacetime}});
    }
    Json out;
    out["config"] = config;
    out["rows"] = rows;
    out["spacetime_ratio_surface_over_color"] = t[0].spacetime > 0 ? Json(t[1].spacetime / t[0].spacetime) : Json(nullptr);
    if (a.n == 0) {
        out["warning"] = "N = 0 is degenerate: the color footprint vanishes";
    }
    emit(a.out, dump(out));
    return 0;
}

int estimate_distill(const EstimateArgs &a) {
    DistillationOverhead c = distillation_overhead(Scheme::Color), s = distillation_overhead(Scheme::Surface);
    Json out;
    out["config"] = base_config("estimate distill");
    for (const auto &d : {c, s}) {
        out[scheme_name(d.scheme)] = {{"space_d2", d.space}, {"time_d", d.time}, {"spacetime_d3", d.spacetime}};
    }
    out["space_ratio_color_over_surface"] = c.space / s.space;
    out["time_speedup"] = s.time / c.time;
    out["spacetime_improvement"] = s.spacetime / c.spacetime;
    emit(a.out, dump(out));
    return 0;
}

void fail_line(const std::string &kind, const std::string &message) {
    Json j;
    j["error"] = {{"kind", kind}, {"message", message}};
    std::cerr << j.dump() << "\n";
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"colorsurg: color-code lattice surgery toolkit"};
    app.set_version_flag("--version", std::string("colorsurg ") + COLORSURG_VERSION + " (kernels: " +
                                          active_kernels().name + ")");
    app.add_option("--threads", g_threads, "Worker threads for trial loops; results do not depend on it")
        ->check(CLI::Range(1u, 1024u));
    app.require_subcommand(1);
    app.fallthrough();

    std::function<int()> action;

    auto add_layout_flags = [](CLI::App *c, LayoutArgs &l) {
        c->add_option("--layout", l.layout, "Layout or patch JSON document");
        c->add_option("--distance", l.distance, "Code distance when no --layout is given");
        c->add_option("--patches", l.patches, "Number of patches (default: highest index used)");
        c->add_option("--la", l.la, "First logical, e.g. \"X1 X3 Z4\"");
        c->add_option("--lb", l.lb, "Second logical, e.g. \"Z1 Z2 Z3 Z4\" (\"I\" for none)");
        c->add_option("--ancilla-depth", l.depth, "Ancilla rows (multiple of 3)");
    };

    // lattice
    LatticeArgs lat;
    auto *lattice = app.add_subcommand("lattice", "Build and inspect code patches");
    lattice->require_subcommand(1);
    auto *lbuild = lattice->add_subcommand("build", "Build a patch and write it as JSON");
    lbuild->add_option("--family", lat.family, "triangular or thin")->check(CLI::IsMember({"triangular", "thin"}));
    lbuild->add_option("--distance", lat.distance, "Distance of a triangular patch");
    lbuild->add_option("--c0", lat.c0, "Column offset of a triangular patch");
    lbuild->add_option("--dx", lat.dx, "X distance of a thin patch");
    lbuild->add_option("--dz", lat.dz, "Z distance of a thin patch");
    lbuild->add_option("--out", lat.out, "Output file (default stdout)");
    lbuild->callback([&] { action = [&] { return lattice_build(lat); }; });
    auto *linspect = lattice->add_subcommand("inspect", "Read a patch document and verify it");
    linspect->add_option("--in", lat.in, "Patch JSON")->required();
    linspect->add_flag("--brute-force", lat.brute_force, "Confirm distances by exhaustive search");
    linspect->add_option("--out", lat.out, "Output file (default stdout)");
    linspect->callback([&] { action = [&] { return lattice_inspect(lat); }; });

    // layout
    LayoutArgs lay;
    std::string lay_out;
    auto *layout = app.add_subcommand("layout", "Build merged surgery layouts");
    layout->require_subcommand(1);
    auto *laybuild = layout->add_subcommand("build", "Build a layout and write it as JSON");
    add_layout_flags(laybuild, lay);
    laybuild->add_option("--out", lay_out, "Output file (default stdout)");
    laybuild->callback([&] { action = [&] { return layout_build(lay, lay_out); }; });

    // surgery
    SurgeryArgs sur;
    auto *surgery = app.add_subcommand("surgery", "Run lattice surgery against the reference simulator");
    surgery->require_subcommand(1);
    auto *srun = surgery->add_subcommand("run", "Seeded merge/split trials");
    add_layout_flags(srun, sur.layout);
    srun->add_option("--seed", sur.seed, "Base seed");
    srun->add_option("--trials", sur.trials, "Number of trials");
    srun->add_option("--init", sur.init, "Initial logical state: zero, plus, random or eigen");
    srun->add_option("--out", sur.out, "Results JSON (default stdout)");
    srun->callback([&] { action = [&] { return surgery_run(sur); }; });
    auto *ssum = surgery->add_subcommand("summarize", "Re-read a results document");
    ssum->add_option("--in", sur.in, "Results JSON")->required();
    ssum->add_option("--out", sur.out, "Output file (default stdout)");
    ssum->callback([&] { action = [&] { return surgery_summarize(sur); }; });

    // decode
    DecodeArgs dec;
    auto *decode = app.add_subcommand("decode", "Split-step decoding of Bell-measurement errors");
    decode->require_subcommand(1);
    auto *dsweep = decode->add_subcommand("sweep", "Monte Carlo failure rates");
    add_layout_flags(dsweep, dec.layout);
    dsweep->add_option("--p-list", dec.p_list, "Comma separated error rates");
    dsweep->add_option("--trials", dec.trials, "Samples per error rate");
    dsweep->add_option("--seed", dec.seed, "Base seed");
    dsweep->add_option("--observable", dec.observable, "red-edge or dressed");
    dsweep->add_option("--csv", dec.csv, "Output CSV (default stdout)");
    dsweep->callback([&] { action = [&] { return decode_sweep(dec); }; });
    auto *dmin = decode->add_subcommand("mincut", "Fault distance of the split step");
    add_layout_flags(dmin, dec.layout);
    dmin->add_option("--observable", dec.observable, "red-edge or dressed");
    dmin->add_option("--out", dec.out, "Output file (default stdout)");
    dmin->callback([&] { action = [&] { return decode_mincut(dec); }; });
    auto *dex = decode->add_subcommand("exhaustive", "Decode every error up to a weight");
    add_layout_flags(dex, dec.layout);
    dex->add_option("--max-weight", dec.max_weight, "1 to 3")->check(CLI::Range(1, 3));
    dex->add_option("--observable", dec.observable, "red-edge or dressed");
    dex->add_option("--out", dec.out, "Output file (default stdout)");
    dex->callback([&] { action = [&] { return decode_exhaustive(dec); }; });
    auto *dsum = decode->add_subcommand("summarize", "Re-read a sweep CSV and fit its slope");
    dsum->add_option("--in", dec.in, "Sweep CSV")->required();
    dsum->add_option("--out", dec.out, "Output file (default stdout)");
    dsum->callback([&] { action = [&] { return decode_summarize(dec); }; });

    // anyons
    AnyonArgs any;
    auto *anyons = app.add_subcommand("anyons", "Anyon boundaries and domain walls");
    anyons->require_subcommand(1);
    auto *aenum = anyons->add_subcommand("enumerate", "List boundaries or walls of one kind");
    aenum->add_option("--kind", any.kind, "boundaries, transparent, semitransparent or opaque")
        ->check(CLI::IsMember({"boundaries", "transparent", "semitransparent", "opaque"}));
    aenum->add_flag("--validate", any.validate, "Run the validator on every item");
    aenum->add_option("--out", any.out, "Output file (default stdout)");
    aenum->callback([&] { action = [&] { return anyons_enumerate(any); }; });
    auto *aval = anyons->add_subcommand("validate", "Re-read and validate an enumeration document");
    aval->add_option("--in", any.in, "Enumeration JSON")->required();
    aval->add_option("--out", any.out, "Output file (default stdout)");
    aval->callback([&] { action = [&] { return anyons_validate(any); }; });

    // estimate
    EstimateArgs est;
    auto *estimate = app.add_subcommand("estimate", "Resource estimates");
    estimate->require_subcommand(1);
    auto *esweep = estimate->add_subcommand("sweep", "Color versus surface comparison over error rates");
    esweep->add_option("--n", est.n, "Logical data qubits");
    esweep->add_option("--tcount", est.tcount, "Logical Pauli measurement steps");
    esweep->add_option("--budget", est.budget, "Total failure budget");
    esweep->add_option("--p-min", est.p_min, "Smallest error rate");
    esweep->add_option("--p-max", est.p_max, "Largest error rate");
    esweep->add_option("--points", est.points, "Grid points (log spaced)");
    esweep->add_option("--csv", est.csv, "Output CSV (default stdout)");
    esweep->callback([&] { action = [&] { return estimate_sweep(est); }; });
    auto *esum = estimate->add_subcommand("summarize", "Re-read a sweep CSV");
    esum->add_option("--in", est.in, "Sweep CSV")->required();
    esum->add_option("--out", est.out, "Output file (default stdout)");
    esum->callback([&] { action = [&] { return estimate_summarize(est); }; });
    auto *etab = estimate->add_subcommand("table1", "Space and time formulas for N data qubits");
    etab->add_option("--n", est.n, "Logical data qubits");
    etab->add_option("--out", est.out, "Output file (default stdout)");
    etab->callback([&] { action = [&] { return estimate_table1(est); }; });
    auto *edist = estimate->add_subcommand("distill", "15-to-1 distillation overheads");
    edist->add_option("--out", est.out, "Output file (default stdout)");
    edist->callback([&] { action = [&] { return estimate_distill(est); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        fail_line("parse", e.what());
        return 2;
    }

    try {
        return action();
    } catch (const ValidationError &e) {
        fail_line("validation", e.what());
        return 3;
    } catch (const std::exception &e) {
        fail_line("runtime", e.what());
        return 1;
    }
}
