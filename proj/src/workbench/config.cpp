// Copyright 2026 The qns Authors
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

#include <algorithm>
#include <cmath>
#include <fstream>
#include <initializer_list>
#include <limits>
#include <string>

#include "qns/errors.hpp"
#include "qns/linalg.hpp"
#include "qns/spin.hpp"
#include "qns/workbench.hpp"

namespace qns::workbench {

using nlohmann::json;

namespace {

constexpr std::size_t kMaxTargetDim = 4096;

void check_keys(const json& obj, std::initializer_list<const char*> allowed, const std::string& where) {
    if (!obj.is_object()) {
        throw ConfigError(where + " must be an object");
    }
    for (const auto& item : obj.items()) {
        if (std::none_of(allowed.begin(), allowed.end(), [&](const char* k) { return item.key() == k; })) {
            throw ConfigError("unknown key '" + item.key() + "' in " + where);
        }
    }
}

double number(const json& obj, const char* key, const std::string& where) {
    if (!obj.contains(key)) {
        throw ConfigError(where + "." + key + " is required");
    }
    const json& v = obj.at(key);
    if (!v.is_number()) {
        throw ConfigError(where + "." + key + " must be a number");
    }
    const double d = v.get<double>();
    if (!std::isfinite(d)) {
        throw ConfigError(where + "." + key + " must be finite");
    }
    return d;
}

double number_or(const json& obj, const char* key, const std::string& where, double fallback) {
    return obj.contains(key) ? number(obj, key, where) : fallback;
}

std::uint64_t unsigned_integer(const json& v, const std::string& where) {
    if (v.is_number_unsigned()) {
        return v.get<std::uint64_t>();
    }
    if (v.is_number_integer() && v.get<std::int64_t>() >= 0) {
        return static_cast<std::uint64_t>(v.get<std::int64_t>());
    }
    if (v.is_number_float()) {
        const double d = v.get<double>();
        if (d >= 0.0 && d == std::floor(d) && d < 1.8e19) {
            return static_cast<std::uint64_t>(d);
        }
    }
    throw ConfigError(where + " must be a non-negative integer");
}

std::string text(const json& obj, const char* key, const std::string& where) {
    if (!obj.contains(key) || !obj.at(key).is_string()) {
        throw ConfigError(where + "." + key + " must be a string");
    }
    return obj.at(key).get<std::string>();
}

bool flag_or(const json& obj, const char* key, const std::string& where, bool fallback) {
    if (!obj.contains(key)) {
        return fallback;
    }
    if (!obj.at(key).is_boolean()) {
        throw ConfigError(where + "." + key + " must be a boolean");
    }
    return obj.at(key).get<bool>();
}

std::vector<double> real_list(const json& v, const std::string& where) {
    if (!v.is_array()) {
        throw ConfigError(where + " must be a list of numbers");
    }
    std::vector<double> out;
    for (const auto& x : v) {
        if (!x.is_number()) {
            throw ConfigError(where + " must be a list of numbers");
        }
        out.push_back(x.get<double>());
    }
    return out;
}

std::vector<cplx> complex_vector(const json& v, const std::string& where) {
    if (v.is_array()) {
        const auto re = real_list(v, where);
        return {re.begin(), re.end()};
    }
    check_keys(v, {"re", "im"}, where);
    const auto re = real_list(v.at("re"), where + ".re");
    const auto im = v.contains("im") ? real_list(v.at("im"), where + ".im") : std::vector<double>(re.size(), 0.0);
    if (im.size() != re.size()) {
        throw ConfigError(where + ": re and im lengths differ");
    }
    std::vector<cplx> out(re.size());
    for (std::size_t i = 0; i < re.size(); ++i) {
        out[i] = {re[i], im[i]};
    }
    return out;
}

std::vector<std::vector<double>> real_rows(const json& v, const std::string& where) {
    if (!v.is_array() || v.empty()) {
        throw ConfigError(where + " must be a non-empty list of rows");
    }
    std::vector<std::vector<double>> rows;
    for (const auto& r : v) {
        rows.push_back(real_list(r, where));
    }
    return rows;
}

Operator matrix(const json& v, const std::string& where) {
    std::vector<std::vector<double>> re, im;
    if (v.is_array()) {
        re = real_rows(v, where);
    } else {
        check_keys(v, {"re", "im"}, where);
        if (!v.contains("re")) {
            throw ConfigError(where + ".re is required");
        }
        re = real_rows(v.at("re"), where + ".re");
        if (v.contains("im")) {
            im = real_rows(v.at("im"), where + ".im");
        }
    }
    const std::size_t d = re.size();
    if (d > kMaxTargetDim) {
        throw ResourceError(where + ": matrix dimension exceeds the target-space limit");
    }
    if (!im.empty() && im.size() != d) {
        throw ConfigError(where + ": re and im shapes differ");
    }
    Operator out(d);
    for (std::size_t i = 0; i < d; ++i) {
        if (re[i].size() != d || (!im.empty() && im[i].size() != d)) {
            throw ConfigError(where + " must be square");
        }
        for (std::size_t j = 0; j < d; ++j) {
            out(i, j) = {re[i][j], im.empty() ? 0.0 : im[i][j]};
        }
    }
    return out;
}

std::vector<cplx> product_state(const std::vector<cplx>& local, std::size_t sites) {
    std::vector<cplx> psi{1.0};
    for (std::size_t s = 0; s < sites; ++s) {
        std::vector<cplx> next(psi.size() * local.size());
        for (std::size_t i = 0; i < psi.size(); ++i) {
            for (std::size_t j = 0; j < local.size(); ++j) {
                next[i * local.size() + j] = psi[i] * local[j];
            }
        }
        psi = std::move(next);
    }
    return psi;
}

DensityMatrix initial_state(const json& v, const Operator& h, const std::optional<SpinOperators>& local,
                            std::size_t sites) {
    const std::string where = "model.initial_state";
    check_keys(v, {"pure", "density", "thermal_beta"}, where);
    if (v.size() != 1) {
        throw ConfigError(where + " needs exactly one of pure, density, thermal_beta");
    }
    if (v.contains("thermal_beta")) {
        const double beta = number(v, "thermal_beta", where);
        if (beta < 0.0) {
            throw ConfigError(where + ".thermal_beta must be non-negative");
        }
        return thermal_state(h, beta);
    }
    if (v.contains("density")) {
        const Operator rho = matrix(v.at("density"), where + ".density");
        if (rho.dim() != h.dim()) {
            throw ConfigError(where + ".density has the wrong dimension");
        }
        return DensityMatrix(rho);
    }
    const json& p = v.at("pure");
    std::vector<cplx> psi;
    if (p.is_string()) {
        if (!local) {
            throw ConfigError(where + ": state labels need a spin model");
        }
        const std::string label = p.get<std::string>();
        const std::size_t d = local->jz.dim();
        std::vector<cplx> site(d, 0.0);
        if (label == "up") {
            site[0] = 1.0;
        } else if (label == "down") {
            site[d - 1] = 1.0;
        } else if (label == "x_up") {
            const EigenSystem es = eigh(local->jx);
            for (std::size_t i = 0; i < d; ++i) {
                site[i] = es.vectors(i, d - 1);
            }
        } else {
            throw ConfigError(where + ".pure: unknown label '" + label + "' (up, down, x_up)");
        }
        psi = product_state(site, sites);
    } else {
        psi = complex_vector(p, where + ".pure");
        if (psi.size() != h.dim()) {
            throw ConfigError(where + ".pure has the wrong length");
        }
        double norm = 0.0;
        for (const auto& a : psi) {
            norm += std::norm(a);
        }
        if (!(norm > 0.0)) {
            throw ConfigError(where + ".pure must be non-zero");
        }
        for (auto& a : psi) {
            a /= std::sqrt(norm);
        }
    }
    return DensityMatrix::pure(psi);
}

TargetModel parse_model(const json& v) {
    const std::string where = "model";
    const std::string kind = text(v, "kind", where);
    if (kind == "matrix") {
        check_keys(v, {"kind", "hamiltonian", "coupling", "initial_state"}, where);
        for (const char* k : {"hamiltonian", "coupling", "initial_state"}) {
            if (!v.contains(k)) {
                throw ConfigError(where + "." + k + " is required");
            }
        }
        Operator h = matrix(v.at("hamiltonian"), where + ".hamiltonian");
        Operator b = matrix(v.at("coupling"), where + ".coupling");
        if (b.dim() != h.dim()) {
            throw ConfigError(where + ": hamiltonian and coupling dimensions differ");
        }
        DensityMatrix rho = initial_state(v.at("initial_state"), h, std::nullopt, 1);
        return TargetModel(std::move(h), std::move(b), std::move(rho));
    }
    if (kind != "spin") {
        throw ConfigError(where + ".kind must be 'spin' or 'matrix'");
    }
    check_keys(v, {"kind", "sites", "two_j", "hamiltonian", "coupling", "initial_state"}, where);
    const std::uint64_t sites = v.contains("sites") ? unsigned_integer(v.at("sites"), where + ".sites") : 1;
    const std::uint64_t two_j = v.contains("two_j") ? unsigned_integer(v.at("two_j"), where + ".two_j") : 1;
    if (sites < 1 || two_j < 1) {
        throw ConfigError(where + ": sites and two_j must be at least 1");
    }
    double dim = std::pow(static_cast<double>(two_j + 1), static_cast<double>(sites));
    if (dim > static_cast<double>(kMaxTargetDim)) {
        throw ResourceError(where + ": target dimension exceeds " + std::to_string(kMaxTargetDim));
    }
    const SpinOperators local = spin_operators(static_cast<unsigned>(two_j));
    const std::size_t n = sites;
    const std::size_t d = static_cast<std::size_t>(dim);

    std::vector<double> field{0.0, 0.0, 0.0};
    double exchange = 0.0;
    if (v.contains("hamiltonian")) {
        const json& hv = v.at("hamiltonian");
        check_keys(hv, {"field", "exchange"}, where + ".hamiltonian");
        if (hv.contains("field")) {
            field = real_list(hv.at("field"), where + ".hamiltonian.field");
            if (field.size() != 3) {
                throw ConfigError(where + ".hamiltonian.field must have three components");
            }
        }
        exchange = number_or(hv, "exchange", where + ".hamiltonian", 0.0);
    }
    const Operator* comps[3] = {&local.jx, &local.jy, &local.jz};
    Operator h(d);
    for (std::size_t i = 0; i < n; ++i) {
        for (int a = 0; a < 3; ++a) {
            if (field[a] != 0.0) {
                h += field[a] * site_operator(*comps[a], i, n);
            }
        }
    }
    if (exchange != 0.0) {
        for (std::size_t i = 0; i + 1 < n; ++i) {
            for (int a = 0; a < 3; ++a) {
                h += exchange * (site_operator(*comps[a], i, n) * site_operator(*comps[a], i + 1, n));
            }
        }
    }

    if (!v.contains("coupling")) {
        throw ConfigError(where + ".coupling is required");
    }
    const json& cv = v.at("coupling");
    check_keys(cv, {"axis", "scale"}, where + ".coupling");
    const std::string axis = text(cv, "axis", where + ".coupling");
    const double scale = number_or(cv, "scale", where + ".coupling", 1.0);
    int ax = axis == "x" ? 0 : axis == "y" ? 1 : axis == "z" ? 2 : -1;
    if (ax < 0) {
        throw ConfigError(where + ".coupling.axis must be x, y or z");
    }
    Operator b(d);
    for (std::size_t i = 0; i < n; ++i) {
        b += scale * site_operator(*comps[ax], i, n);
    }
    if (!v.contains("initial_state")) {
        throw ConfigError(where + ".initial_state is required");
    }
    DensityMatrix rho = initial_state(v.at("initial_state"), h, local, n);
    return TargetModel(std::move(h), std::move(b), std::move(rho));
}

ProtocolSpec parse_protocol(const json& v) {
    const std::string where = "protocol";
    check_keys(v, {"alpha", "tau", "shots", "coupling_time", "swap_detectors"}, where);
    ProtocolSpec p;
    p.sensor.alpha = number(v, "alpha", where);
    p.sensor.tau = number(v, "tau", where);
    p.sensor.swap_detectors = flag_or(v, "swap_detectors", where, false);
    if (v.contains("coupling_time")) {
        const std::string ct = text(v, "coupling_time", where);
        if (ct == "start") {
            p.coupling_time = CouplingTime::start;
        } else if (ct == "midpoint") {
            p.coupling_time = CouplingTime::midpoint;
        } else {
            throw ConfigError(where + ".coupling_time must be 'start' or 'midpoint'");
        }
    }
    if (!v.contains("shots") || !v.at("shots").is_array()) {
        throw ConfigError(where + ".shots must be a list");
    }
    for (std::size_t j = 0; j < v.at("shots").size(); ++j) {
        const json& s = v.at("shots").at(j);
        const std::string sw = where + ".shots[" + std::to_string(j) + "]";
        check_keys(s, {"time", "basis"}, sw);
        ShotSpec shot;
        shot.time = number(s, "time", sw);
        const std::string basis = text(s, "basis", sw);
        if (basis == "S2") {
            shot.basis = Basis::S2;
        } else if (basis == "S3") {
            shot.basis = Basis::S3;
        } else {
            throw ConfigError(sw + ".basis must be 'S2' or 'S3'");
        }
        p.shots.push_back(shot);
    }
    p.validate();
    return p;
}

ExactSpec parse_exact(const json& v) {
    const std::string where = "exact";
    check_keys(v, {"full_order", "n_max", "method", "scan"}, where);
    ExactSpec e;
    e.full_order = flag_or(v, "full_order", where, false);
    if (v.contains("n_max")) {
        const std::uint64_t n = unsigned_integer(v.at("n_max"), where + ".n_max");
        if (n < 1 || n > 100000) {
            throw ConfigError(where + ".n_max out of range");
        }
        e.n_max = static_cast<unsigned>(n);
    }
    if (v.contains("method")) {
        const std::string m = text(v, "method", where);
        if (m != "factored" && m != "dense") {
            throw ConfigError(where + ".method must be 'factored' or 'dense'");
        }
        e.dense = m == "dense";
    }
    if (v.contains("scan")) {
        const json& s = v.at("scan");
        check_keys(s, {"shot", "times"}, where + ".scan");
        if (!s.contains("shot") || !s.contains("times")) {
            throw ConfigError(where + ".scan needs shot and times");
        }
        e.scan_shot = unsigned_integer(s.at("shot"), where + ".scan.shot");
        e.scan_times = real_list(s.at("times"), where + ".scan.times");
        if (e.scan_times.empty()) {
            throw ConfigError(where + ".scan.times must not be empty");
        }
    }
    return e;
}

McSpec parse_mc(const json& v) {
    const std::string where = "mc";
    check_keys(v, {"sequences", "mode", "field", "poisson_normal_threshold"}, where);
    McSpec m;
    if (!v.contains("sequences")) {
        throw ConfigError(where + ".sequences is required");
    }
    m.sequences = unsigned_integer(v.at("sequences"), where + ".sequences");
    if (m.sequences < 1) {
        throw ConfigError(where + ".sequences must be at least 1");
    }
    if (v.contains("mode")) {
        const std::string mode = text(v, "mode", where);
        if (mode == "kraus_quantum") {
            m.mode = TrajectoryMode::kraus_quantum;
        } else if (mode == "semiclassical_field") {
            m.mode = TrajectoryMode::semiclassical_field;
        } else {
            throw ConfigError(where + ".mode must be 'kraus_quantum' or 'semiclassical_field'");
        }
    }
    if (v.contains("field")) {
        const json& f = v.at("field");
        check_keys(f, {"kind", "amplitude", "correlation_time"}, where + ".field");
        ClassicalFieldModel field;
        const std::string kind = text(f, "kind", where + ".field");
        if (kind == "constant") {
            field.kind = ClassicalFieldModel::Kind::constant;
        } else if (kind == "ornstein_uhlenbeck") {
            field.kind = ClassicalFieldModel::Kind::ornstein_uhlenbeck;
        } else if (kind == "telegraph") {
            field.kind = ClassicalFieldModel::Kind::telegraph;
        } else {
            throw ConfigError(where + ".field.kind must be constant, ornstein_uhlenbeck or telegraph");
        }
        field.amplitude = number(f, "amplitude", where + ".field");
        field.correlation_time = number_or(f, "correlation_time", where + ".field", 1.0);
        field.validate();
        m.field = field;
    }
    m.poisson_normal_threshold = number_or(v, "poisson_normal_threshold", where, m.poisson_normal_threshold);
    if (!(m.poisson_normal_threshold > 0.0)) {
        throw ConfigError(where + ".poisson_normal_threshold must be positive");
    }
    return m;
}

json load_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open " + path.string());
    }
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw ConfigError("invalid JSON in " + path.string() + ": " + e.what());
    }
}

json builtin_preset(const std::string& name) {
    if (name == "lihof4") {
        return json{{"name", "LiHoF4"},
                    {"g", 20.0},
                    {"D", 1.0},
                    {"n_s", 1.39e28},
                    {"focus_size", 1e-4},
                    {"spot", "square"},
                    {"N_ph", 1e14},
                    {"moment_per_factor", 8.0}};
    }
    return nullptr;
}

// Replaces a preset reference by the preset's snr section with inline keys
// layered on top.
json resolve_snr_section(const json& snr, const std::filesystem::path& base_dir) {
    if (!snr.is_object() || !snr.contains("preset")) {
        return snr;
    }
    const std::string ref = text(snr, "preset", "snr");
    json resolved;
    if (json b = builtin_preset(ref); !b.is_null()) {
        resolved = json{{"scenario", b}};
    } else {
        std::filesystem::path p(ref);
        if (p.is_relative() && !base_dir.empty() && std::filesystem::exists(base_dir / p)) {
            p = base_dir / p;
        }
        const json preset = load_json_file(p);
        check_keys(preset, {"snr"}, "preset " + ref);
        if (!preset.contains("snr") || !preset.at("snr").is_object() || preset.at("snr").contains("preset")) {
            throw ConfigError("preset " + ref + " must hold an snr section without a nested preset");
        }
        resolved = preset.at("snr");
    }
    json overlay = snr;
    overlay.erase("preset");
    resolved.merge_patch(overlay);
    return resolved;
}

SnrSpec parse_snr(const json& v) {
    const std::string where = "snr";
    check_keys(v, {"scenario", "orders"}, where);
    SnrSpec s;
    if (!v.contains("scenario")) {
        throw ConfigError(where + ".scenario is required");
    }
    const json& sc = v.at("scenario");
    const std::string sw = where + ".scenario";
    check_keys(sc, {"name", "g", "D", "n_s", "A", "focus_size", "spot", "N_ph", "L", "moment_per_factor", "xi"}, sw);
    s.scenario.name = sc.contains("name") ? text(sc, "name", sw) : "scenario";
    SnrScenario& b = s.scenario.base;
    b.g = number(sc, "g", sw);
    b.D = number(sc, "D", sw);
    b.n_s = number(sc, "n_s", sw);
    b.N_ph = number(sc, "N_ph", sw);
    b.L = number_or(sc, "L", sw, 1.0);
    if (sc.contains("A") == sc.contains("focus_size")) {
        throw ConfigError(sw + " needs exactly one of A, focus_size");
    }
    if (sc.contains("A")) {
        if (sc.contains("spot")) {
            throw ConfigError(sw + ".spot only applies with focus_size");
        }
        b.A = number(sc, "A", sw);
    } else {
        SpotShape shape = SpotShape::square;
        if (sc.contains("spot")) {
            const std::string spot = text(sc, "spot", sw);
            if (spot == "circular") {
                shape = SpotShape::circular;
            } else if (spot != "square") {
                throw ConfigError(sw + ".spot must be 'square' or 'circular'");
            }
        }
        b.A = spot_area(number(sc, "focus_size", sw), shape);
    }
    s.scenario.moment_per_factor = number_or(sc, "moment_per_factor", sw, 1.0);
    if (sc.contains("xi")) {
        b.xi = number(sc, "xi", sw);
    }
    if (!v.contains("orders") || !v.at("orders").is_array() || v.at("orders").empty()) {
        throw ConfigError(where + ".orders must be a non-empty list");
    }
    for (const auto& k : v.at("orders")) {
        const std::uint64_t K = unsigned_integer(k, where + ".orders");
        if (K < 1 || K > 64) {
            throw ConfigError(where + ".orders entries must be in 1..64");
        }
        s.orders.push_back(static_cast<int>(K));
    }
    SnrScenario probe = b;
    probe.moment_k = s.scenario.moment_per_factor;
    probe.validate();
    return s;
}

SweepSpec parse_sweep(const json& v) {
    const std::string where = "sweep";
    check_keys(v, {"parameter", "values", "command"}, where);
    SweepSpec s;
    s.parameter = text(v, "parameter", where);
    if (!v.contains("values")) {
        throw ConfigError(where + ".values is required");
    }
    s.values = real_list(v.at("values"), where + ".values");
    if (s.values.empty()) {
        throw ConfigError(where + ".values must not be empty");
    }
    s.command = parse_command(text(v, "command", where));
    if (s.command == Command::sweep) {
        throw ConfigError(where + ".command cannot itself be sweep");
    }
    return s;
}

}  // namespace

const char* command_name(Command c) {
    switch (c) {
        case Command::exact:
            return "exact";
        case Command::simulate:
            return "simulate";
        case Command::snr:
            return "snr";
        case Command::sweep:
            return "sweep";
    }
    return "?";
}

Command parse_command(const std::string& name) {
    for (Command c : {Command::exact, Command::simulate, Command::snr, Command::sweep}) {
        if (name == command_name(c)) {
            return c;
        }
    }
    throw ConfigError("unknown command '" + name + "' (exact, simulate, snr, sweep)");
}

RunConfig parse_config(const json& doc, const std::filesystem::path& base_dir) {
    try {
        check_keys(doc, {"command", "seed", "model", "protocol", "exact", "mc", "snr", "sweep"}, "config");
        RunConfig cfg;
        cfg.document = doc;
        cfg.command = parse_command(text(doc, "command", "config"));
        if (doc.contains("seed")) {
            cfg.seed = unsigned_integer(doc.at("seed"), "config.seed");
        }
        if (doc.contains("model")) {
            cfg.model = parse_model(doc.at("model"));
        }
        if (doc.contains("protocol")) {
            cfg.protocol = parse_protocol(doc.at("protocol"));
        }
        if (doc.contains("exact")) {
            cfg.exact = parse_exact(doc.at("exact"));
        }
        if (doc.contains("mc")) {
            cfg.mc = parse_mc(doc.at("mc"));
        }
        if (doc.contains("snr")) {
            cfg.document["snr"] = resolve_snr_section(doc.at("snr"), base_dir);
            cfg.snr = parse_snr(cfg.document.at("snr"));
        }
        if (doc.contains("sweep")) {
            cfg.sweep = parse_sweep(doc.at("sweep"));
        }

        const Command effective = cfg.command == Command::sweep && cfg.sweep ? cfg.sweep->command : cfg.command;
        if (cfg.command == Command::sweep && !cfg.sweep) {
            throw ConfigError("sweep command needs a sweep section");
        }
        if (cfg.model && cfg.protocol && cfg.model->dim() == 0) {
            throw ConfigError("model has zero dimension");
        }
        switch (effective) {
            case Command::exact:
                if (!cfg.model || !cfg.protocol) {
                    throw ConfigError("exact needs model and protocol sections");
                }
                if (cfg.exact.scan_shot && *cfg.exact.scan_shot >= cfg.protocol->order()) {
                    throw ConfigError("exact.scan.shot is out of range");
                }
                break;
            case Command::simulate:
                if (!cfg.seed) {
                    throw ConfigError("simulate needs an explicit seed");
                }
                if (!cfg.protocol || !cfg.mc) {
                    throw ConfigError("simulate needs protocol and mc sections");
                }
                if (cfg.mc->mode == TrajectoryMode::kraus_quantum && !cfg.model) {
                    throw ConfigError("quantum simulation needs a model section");
                }
                if (cfg.mc->mode == TrajectoryMode::semiclassical_field && !cfg.mc->field) {
                    throw ConfigError("semiclassical simulation needs mc.field");
                }
                break;
            case Command::snr:
                if (!cfg.snr) {
                    throw ConfigError("snr needs an snr section");
                }
                break;
            case Command::sweep:
                break;
        }
        return cfg;
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
}

RunConfig load_config(const std::filesystem::path& path) {
    return parse_config(load_json_file(path), path.parent_path());
}

}  // namespace qns::workbench
