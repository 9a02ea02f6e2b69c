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
#include <string>

#include "qns/errors.hpp"
#include "qns/workbench.hpp"

namespace qns::workbench {

using nlohmann::json;

namespace {

std::string power_unit(const char* base, std::size_t k) {
    return k == 1 ? std::string(base) : std::string(base) + "^" + std::to_string(k);
}

void add_warnings(RunResult& r, const std::vector<std::string>& ws) {
    for (const auto& w : ws) {
        if (std::find(r.warnings.begin(), r.warnings.end(), w) == r.warnings.end()) {
            r.warnings.push_back(w);
        }
    }
}

std::size_t count_s2(const ProtocolSpec& p) {
    return static_cast<std::size_t>(
        std::count_if(p.shots.begin(), p.shots.end(), [](const ShotSpec& s) { return s.basis == Basis::S2; }));
}

json::json_pointer to_pointer(const std::string& path) {
    if (path.empty()) {
        throw ConfigError("sweep.parameter must not be empty");
    }
    if (path.front() == '/') {
        try {
            return json::json_pointer(path);
        } catch (const json::exception& e) {
            throw ConfigError("sweep.parameter: " + std::string(e.what()));
        }
    }
    std::string ptr;
    std::size_t start = 0;
    while (start <= path.size()) {
        const std::size_t dot = path.find('.', start);
        const std::string part = path.substr(start, dot == std::string::npos ? std::string::npos : dot - start);
        if (part.empty()) {
            throw ConfigError("sweep.parameter '" + path + "' has an empty component");
        }
        ptr += "/" + part;
        if (dot == std::string::npos) {
            break;
        }
        start = dot + 1;
    }
    return json::json_pointer(ptr);
}

}  // namespace

RunResult cmd_exact(const RunConfig& cfg, const RunOptions&) {
    if (!cfg.model || !cfg.protocol) {
        throw ConfigError("exact needs model and protocol sections");
    }
    RunResult result;
    const std::size_t points = cfg.exact.scan_shot ? cfg.exact.scan_times.size() : 1;
    for (std::size_t p = 0; p < points; ++p) {
        ProtocolSpec proto = *cfg.protocol;
        std::string parameter;
        double parameter_value = 0.0;
        if (cfg.exact.scan_shot) {
            const std::size_t j = *cfg.exact.scan_shot;
            proto.shots[j].time = cfg.exact.scan_times[p];
            parameter = "shot[" + std::to_string(j) + "].time";
            parameter_value = cfg.exact.scan_times[p];
            proto.validate();
        }
        add_warnings(result, proto.warnings());
        const std::size_t k = proto.order();
        const GkResult lead = gk_leading(*cfg.model, proto);
        auto row = [&](const char* quantity, double value, std::string unit, const char* module) {
            result.table.rows.push_back({p, parameter, parameter_value, lead.label, k, quantity, value, std::move(unit), module});
        };
        row("C", lead.correlation, power_unit("(rad/s)", k), "correlations");
        row("G_leading", lead.value, power_unit("counts", k), "weak-measurement");
        row("predicted_from_C", lead.predicted_from_c, power_unit("counts", k), "weak-measurement");
        if (cfg.exact.full_order) {
            const FockTruncation tr =
                cfg.exact.n_max ? FockTruncation{*cfg.exact.n_max} : FockTruncation::for_alpha(proto.sensor.alpha);
            const GkResult full = cfg.exact.dense ? gk_exact_dense(*cfg.model, proto, tr) : gk_exact_unitary(*cfg.model, proto, tr);
            row("G_exact", full.value, power_unit("counts", k), "weak-measurement");
        }
    }
    return result;
}

RunResult cmd_simulate(const RunConfig& cfg, const RunOptions& opt) {
    if (!cfg.protocol || !cfg.mc || !cfg.seed) {
        throw ConfigError("simulate needs seed, protocol and mc sections");
    }
    TrajectoryConfig tc;
    tc.sequences = cfg.mc->sequences;
    tc.seed = *cfg.seed;
    tc.mode = cfg.mc->mode;
    tc.proto = *cfg.protocol;
    tc.model = cfg.model;
    tc.field = cfg.mc->field;
    tc.threads = std::max(1u, opt.threads);
    tc.poisson_normal_threshold = cfg.mc->poisson_normal_threshold;
    const McEstimate est = run_sequences(tc);

    RunResult result;
    add_warnings(result, tc.proto.warnings());
    const std::size_t k = tc.proto.order();
    const std::string label = tc.proto.label();
    auto row = [&](const char* quantity, double value, std::string unit, const char* module) {
        result.table.rows.push_back({0, "", 0.0, label, k, quantity, value, std::move(unit), module});
    };
    row("mc_mean", est.mean, power_unit("counts", k), "trajectory-mc");
    row("mc_std_error", est.std_error, power_unit("counts", k), "trajectory-mc");
    row("per_shot_variance", est.per_shot_variance, "counts^2", "trajectory-mc");
    row("raw_difference_variance", est.raw_difference_variance, "counts^2", "trajectory-mc");
    row("empirical_snr", empirical_snr(est), "1", "trajectory-mc");
    row("n_sequences", static_cast<double>(est.n_sequences), "sequences", "trajectory-mc");

    if (tc.mode == TrajectoryMode::kraus_quantum) {
        const GkResult lead = gk_leading(*cfg.model, tc.proto);
        row("C", lead.correlation, power_unit("(rad/s)", k), "correlations");
        row("G_leading", lead.value, power_unit("counts", k), "weak-measurement");
        const double formula = snr_kth_order(tc.proto.sensor.alpha, tc.proto.sensor.tau,
                                           static_cast<double>(tc.sequences), static_cast<int>(k), lead.correlation);
        row("snr_predicted", recorded_snr(formula, count_s2(tc.proto)), "1", "snr-feasibility");
        if (cfg.exact.full_order) {
            const FockTruncation tr = cfg.exact.n_max ? FockTruncation{*cfg.exact.n_max}
                                                      : FockTruncation::for_alpha(tc.proto.sensor.alpha);
            row("G_exact", gk_exact_unitary(*cfg.model, tc.proto, tr).value, power_unit("counts", k),
                "weak-measurement");
        }
    } else {
        row("G_semiclassical", semiclassical_expectation(*tc.field, tc.proto), power_unit("counts", k),
            "trajectory-mc");
    }
    return result;
}

RunResult cmd_snr(const RunConfig& cfg, const RunOptions&) {
    if (!cfg.snr) {
        throw ConfigError("snr needs an snr section");
    }
    RunResult result;
    const NamedScenario& ns = cfg.snr->scenario;
    for (int k : cfg.snr->orders) {
        SnrScenario s = ns.base;
        s.K = k;
        s.moment_k = std::pow(ns.moment_per_factor, k);
        const FeasibilityReport rep = snr_material(s);
        const std::string label = ns.name + "/" + regime_name(rep.regime);
        const auto order = static_cast<std::size_t>(k);
        auto row = [&](const char* quantity, double value, const char* unit) {
            result.table.rows.push_back({0, "", 0.0, label, order, quantity, value, unit, "snr-feasibility"});
        };
        row("snr", rep.snr, "1");
        row("snr_per_sqrt_L", rep.snr_per_sqrt_L, "1");
        row("L_for_unit_snr", rep.L_for_unit_snr, "sequences");
        row("base_factor", rep.base_factor, "1");
        row("prefactor", rep.prefactor, "1");
    }
    return result;
}

RunResult cmd_sweep(const RunConfig& cfg, const RunOptions& opt) {
    if (!cfg.sweep) {
        throw ConfigError("sweep needs a sweep section");
    }
    if (cfg.exact.scan_shot) {
        throw ConfigError("sweep cannot be combined with exact.scan");
    }
    const json::json_pointer ptr = to_pointer(cfg.sweep->parameter);
    if (!cfg.document.contains(ptr) || !cfg.document.at(ptr).is_number()) {
        throw ConfigError("sweep.parameter '" + cfg.sweep->parameter + "' does not name a numeric config value");
    }
    const bool integral = cfg.document.at(ptr).is_number_integer();
    RunResult result;
    for (std::size_t i = 0; i < cfg.sweep->values.size(); ++i) {
        const double v = cfg.sweep->values[i];
        json doc = cfg.document;
        doc.erase("sweep");
        doc["command"] = command_name(cfg.sweep->command);
        if (integral && v == std::floor(v) && std::abs(v) < 9e15) {
            doc[ptr] = static_cast<std::int64_t>(v);
        } else {
            doc[ptr] = v;
        }
        const RunConfig point = parse_config(doc);
        RunResult r = run(point, opt);
        for (auto& row : r.table.rows) {
            row.point = i;
            row.parameter = cfg.sweep->parameter;
            row.parameter_value = v;
            result.table.rows.push_back(std::move(row));
        }
        add_warnings(result, r.warnings);
    }
    return result;
}

RunResult run(const RunConfig& cfg, const RunOptions& opt) {
    switch (cfg.command) {
        case Command::exact:
            return cmd_exact(cfg, opt);
        case Command::simulate:
            return cmd_simulate(cfg, opt);
        case Command::snr:
            return cmd_snr(cfg, opt);
        case Command::sweep:
            return cmd_sweep(cfg, opt);
    }
    throw ConfigError("unknown command");
}

}  // namespace qns::workbench
