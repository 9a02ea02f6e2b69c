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

#include "qns/workbench.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <unistd.h>

#include "gtest/gtest.h"
#include "qns/errors.hpp"
#include "test_util.hpp"

using namespace qns;
using namespace qns::workbench;
using nlohmann::json;

namespace fs = std::filesystem;

namespace {

const fs::path kConfigs = fs::path(QNS_SOURCE_DIR) / "configs";

fs::path scratch(const std::string& name) {
    const fs::path p = fs::temp_directory_path() / ("qns_test_" + std::to_string(::getpid())) / name;
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

int run_cli(const std::string& args) {
    const std::string cmd = std::string(QNS_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

fs::path write_json(const fs::path& dir, const std::string& name, const json& doc) {
    const fs::path p = dir / name;
    std::ofstream(p) << doc.dump(2);
    return p;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json load(const std::string& name) { return json::parse(std::ifstream(kConfigs / name)); }

double value_of(const Table& t, const std::string& quantity, std::size_t point = 0, std::size_t order = 0) {
    for (const auto& r : t.rows) {
        if (r.quantity == quantity && r.point == point && (order == 0 || r.order == order)) {
            return r.value;
        }
    }
    ADD_FAILURE() << "no row " << quantity;
    return std::nan("");
}

}  // namespace

TEST(Config, rejects_unknown_keys) {
    json doc = load("k2_spin_half.json");
    doc["protocol"]["alpah"] = 2.0;
    EXPECT_THROW(parse_config(doc, kConfigs), ConfigError);
    doc = load("k2_spin_half.json");
    doc["extra"] = 1;
    EXPECT_THROW(parse_config(doc, kConfigs), ConfigError);
}

TEST(Config, simulate_requires_seed) {
    json doc = load("k2_simulate.json");
    doc.erase("seed");
    EXPECT_THROW(parse_config(doc, kConfigs), ConfigError);
}

TEST(Config, bad_values_are_config_errors) {
    json doc = load("k2_spin_half.json");
    doc["protocol"]["shots"][0]["basis"] = "S1";
    EXPECT_THROW(parse_config(doc, kConfigs), ConfigError);
    doc = load("k2_spin_half.json");
    doc["protocol"]["tau"] = "fast";
    EXPECT_THROW(parse_config(doc, kConfigs), ConfigError);
    doc = load("k2_spin_half.json");
    doc["exact"]["scan"]["shot"] = 5;
    EXPECT_THROW(parse_config(doc, kConfigs), ConfigError);
}

TEST(Config, preset_is_merged_into_document) {
    const RunConfig cfg = load_config(kConfigs / "snr_critical.json");
    ASSERT_TRUE(cfg.snr);
    EXPECT_EQ(cfg.snr->scenario.name, "critical-boundary");
    EXPECT_DOUBLE_EQ(cfg.snr->scenario.base.g, 20.0);
    EXPECT_FALSE(cfg.document["snr"].contains("preset"));
    // The resolved document parses on its own.
    EXPECT_NO_THROW(parse_config(cfg.document));
}

TEST(CmdExact, scan_reproduces_keldysh_correlation) {
    const RunConfig cfg = load_config(kConfigs / "k2_spin_half.json");
    const RunResult r = cmd_exact(cfg);
    const auto& times = cfg.exact.scan_times;
    for (std::size_t p = 0; p < times.size(); ++p) {
        EXPECT_NEAR(value_of(r.table, "C", p), 2 * std::sin(times[p]), 1e-12);
        EXPECT_NEAR(value_of(r.table, "G_leading", p), value_of(r.table, "predicted_from_C", p), 1e-15);
    }
    EXPECT_TRUE(r.warnings.empty());
}

TEST(CmdExact, trailing_s3_gives_zero_and_warning) {
    const RunResult r = cmd_exact(load_config(kConfigs / "null_trailing_s3.json"));
    EXPECT_EQ(value_of(r.table, "C"), 0.0);
    EXPECT_LT(std::abs(value_of(r.table, "G_leading")), 1e-12);
    EXPECT_LT(std::abs(value_of(r.table, "G_exact")), 1e-12);
    EXPECT_EQ(r.warnings.size(), 1u);
}

TEST(CmdExact, fourth_order_label) {
    const RunResult r = cmd_exact(load_config(kConfigs / "k4_exact.json"));
    for (const auto& row : r.table.rows) {
        EXPECT_EQ(row.label, "+--+");
        EXPECT_EQ(row.order, 4u);
    }
}

TEST(CmdSnr, lihof4_thresholds) {
    const RunResult r = cmd_snr(load_config(kConfigs / "snr_lihof4.json"));
    EXPECT_LT(std::abs(std::log10(value_of(r.table, "L_for_unit_snr", 0, 2) / 1e5)), 1.0);
    EXPECT_GT(value_of(r.table, "L_for_unit_snr", 0, 4), 1e48);
}

TEST(CmdSnr, critical_boundary_base_factor) {
    const RunResult r = cmd_snr(load_config(kConfigs / "snr_critical.json"));
    for (std::size_t k = 1; k <= 4; ++k) {
        EXPECT_NEAR(value_of(r.table, "base_factor", 0, k), 1.0, 1e-12);
    }
}

TEST(CmdSweep, tau_sweep_feeds_convergence_fit) {
    const RunResult r = cmd_sweep(load_config(kConfigs / "sweep_tau.json"));
    std::vector<double> taus, residual;
    for (std::size_t p = 0; p < 4; ++p) {
        residual.push_back(value_of(r.table, "G_exact", p) - value_of(r.table, "G_leading", p));
    }
    for (const auto& row : r.table.rows) {
        if (row.quantity == "G_exact") {
            taus.push_back(row.parameter_value);
        }
    }
    EXPECT_GE(qns_test::loglog_slope(taus, residual), 2.8);
}

TEST(CmdSweep, std_error_scales_as_inverse_sqrt_l) {
    const RunResult r = cmd_sweep(load_config(kConfigs / "sweep_sequences.json"));
    std::vector<double> ls, ses;
    for (std::size_t p = 0; p < 3; ++p) {
        ls.push_back(value_of(r.table, "n_sequences", p));
        ses.push_back(value_of(r.table, "mc_std_error", p));
    }
    EXPECT_NEAR(qns_test::loglog_slope(ls, ses), -0.5, 0.05);
}

TEST(CmdSweep, xi_sweep_crosses_over) {
    const RunResult r = cmd_sweep(load_config(kConfigs / "sweep_xi.json"));
    // Below the boundary higher orders lose, above it they win.
    EXPECT_LT(value_of(r.table, "snr_per_sqrt_L", 0, 4), value_of(r.table, "snr_per_sqrt_L", 0, 2));
    EXPECT_GT(value_of(r.table, "snr_per_sqrt_L", 4, 4), value_of(r.table, "snr_per_sqrt_L", 4, 2));
}

TEST(CmdSweep, bad_parameter_paths) {
    json doc = load("sweep_tau.json");
    doc["sweep"]["parameter"] = "protocol.nonexistent";
    EXPECT_THROW(cmd_sweep(parse_config(doc)), ConfigError);
    doc["sweep"]["parameter"] = "model.kind";
    EXPECT_THROW(cmd_sweep(parse_config(doc)), ConfigError);
    doc["sweep"]["parameter"] = "/protocol/shots/1/time";
    EXPECT_NO_THROW(cmd_sweep(parse_config(doc)));
}

TEST(Csv, round_trip_number_format) {
    for (double v : {0.1, 1.0 / 3.0, 6.02e23, -2.5e-300}) {
        EXPECT_EQ(std::stod(format_number(v)), v);
    }
    EXPECT_EQ(format_number(std::numeric_limits<double>::infinity()), "inf");
}

TEST(Manifest, rows_rederivable_from_manifest) {
    const RunConfig cfg = load_config(kConfigs / "k4_exact.json");
    const RunResult r = run(cfg);
    const json m = make_manifest(cfg, r, {}, "t0", "t1", "exact.csv");
    EXPECT_EQ(m["config_hash"], config_hash(cfg.document));
    const RunResult again = run(parse_config(m["config"]));
    std::ostringstream a, b;
    write_csv(r.table, a);
    write_csv(again.table, b);
    EXPECT_EQ(a.str(), b.str());
    EXPECT_EQ(m["provenance"]["C"], "correlations");
}

TEST(Cli, exit_codes) {
    const fs::path dir = scratch("exit_codes");
    const std::string out = " --out " + (dir / "out").string();
    EXPECT_EQ(run_cli("exact --config " + (kConfigs / "k2_spin_half.json").string() + out), 0);

    // Config errors: unknown key, missing seed, empty sweep, unreadable file, bad CLI usage.
    json doc = load("k2_spin_half.json");
    doc["bogus"] = true;
    EXPECT_EQ(run_cli("exact --config " + write_json(dir, "unknown.json", doc).string() + out), 2);
    doc = load("k2_simulate.json");
    doc.erase("seed");
    EXPECT_EQ(run_cli("simulate --config " + write_json(dir, "noseed.json", doc).string() + out), 2);
    doc = load("sweep_tau.json");
    doc["sweep"]["values"] = json::array();
    EXPECT_EQ(run_cli("sweep --config " + write_json(dir, "empty.json", doc).string() + out), 2);
    EXPECT_EQ(run_cli("exact --config " + (dir / "missing.json").string() + out), 2);
    EXPECT_EQ(run_cli("exact" + out), 2);
    EXPECT_EQ(run_cli("snr --config " + (kConfigs / "k2_spin_half.json").string() + out), 2);

    // Numeric guard: truncation below the coherent-state rule.
    doc = load("k2_spin_half.json");
    doc["exact"]["n_max"] = 5;
    EXPECT_EQ(run_cli("exact --config " + write_json(dir, "trunc.json", doc).string() + out), 3);
    // Numeric guard: non-Hermitian Hamiltonian.
    doc = load("k2_spin_half.json");
    doc["model"] = {{"kind", "matrix"},
                    {"hamiltonian", {{0.0, 1.0}, {0.0, 0.0}}},
                    {"coupling", {{0.0, 1.0}, {1.0, 0.0}}},
                    {"initial_state", {{"pure", {1.0, 0.0}}}}};
    EXPECT_EQ(run_cli("exact --config " + write_json(dir, "nonherm.json", doc).string() + out), 3);

    // Resource guards: target space too large, dense joint space too large.
    doc = load("k2_spin_half.json");
    doc["model"]["sites"] = 13;
    EXPECT_EQ(run_cli("exact --config " + write_json(dir, "big.json", doc).string() + out), 4);
    doc = load("k2_spin_half.json");
    doc["protocol"]["alpha"] = 10.0;
    doc["exact"]["n_max"] = 210;
    doc["exact"]["method"] = "dense";
    doc["exact"].erase("scan");
    EXPECT_EQ(run_cli("exact --config " + write_json(dir, "dense.json", doc).string() + out), 4);
    fs::remove_all(dir.parent_path());
}

TEST(Cli, simulate_is_byte_identical_across_runs_and_threads) {
    const fs::path dir = scratch("determinism");
    json doc = load("k2_simulate.json");
    doc["mc"]["sequences"] = 3000;
    doc["exact"]["full_order"] = false;
    const std::string cfg = write_json(dir, "sim.json", doc).string();
    ASSERT_EQ(run_cli("simulate --config " + cfg + " --out " + (dir / "a").string()), 0);
    ASSERT_EQ(run_cli("simulate --config " + cfg + " --out " + (dir / "b").string() + " --threads 3"), 0);
    const std::string a = slurp(dir / "a" / "simulate.csv");
    EXPECT_FALSE(a.empty());
    EXPECT_EQ(a, slurp(dir / "b" / "simulate.csv"));
    const json ma = json::parse(slurp(dir / "a" / "simulate.manifest.json"));
    const json mb = json::parse(slurp(dir / "b" / "simulate.manifest.json"));
    EXPECT_EQ(ma["config_hash"], mb["config_hash"]);
    EXPECT_EQ(ma["seed"], 20261018);
    fs::remove_all(dir.parent_path());
}
