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

#pragma once

// Config-driven front end shared by the qns CLI and its integration tests.
//
// A run is described by one JSON document (schema in docs/config_schema.md).
// Every command produces a long-format table (one value per row) and a
// manifest that embeds the fully resolved config, so each row can be
// recomputed from the manifest alone.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qns/operator.hpp"
#include "qns/snr.hpp"
#include "qns/trajectory.hpp"
#include "qns/weak_measurement.hpp"

namespace qns::workbench {

inline constexpr const char* kVersion = "0.1.0";

enum class Command { exact, simulate, snr, sweep };

const char* command_name(Command c);
/// Throws ConfigError on an unknown name.
Command parse_command(const std::string& name);

struct ExactSpec {
    bool full_order = false;
    std::optional<unsigned> n_max;
    bool dense = false;  ///< use the literal joint-space path
    std::optional<std::size_t> scan_shot;
    std::vector<double> scan_times;
};

struct McSpec {
    std::size_t sequences = 0;
    TrajectoryMode mode = TrajectoryMode::kraus_quantum;
    std::optional<ClassicalFieldModel> field;
    double poisson_normal_threshold = kTol.poisson_normal_threshold;
};

struct NamedScenario {
    std::string name;
    SnrScenario base;  ///< K and moment_k filled per order
    double moment_per_factor = 1.0;
};

struct SnrSpec {
    NamedScenario scenario;
    std::vector<int> orders;
};

struct SweepSpec {
    std::string parameter;  ///< dotted path or JSON pointer
    std::vector<double> values;
    Command command = Command::exact;
};

struct RunConfig {
    Command command = Command::exact;
    std::optional<std::uint64_t> seed;
    std::optional<TargetModel> model;
    std::optional<ProtocolSpec> protocol;
    ExactSpec exact;
    std::optional<McSpec> mc;
    std::optional<SnrSpec> snr;
    std::optional<SweepSpec> sweep;
    nlohmann::json document;  ///< resolved config (presets merged)
};

/// Validates and parses a config document. Preset paths are resolved against
/// `base_dir`. Throws ConfigError on any schema violation, including unknown
/// keys.
RunConfig parse_config(const nlohmann::json& doc, const std::filesystem::path& base_dir = {});
RunConfig load_config(const std::filesystem::path& path);

/// Long-format result table.
struct Table {
    struct Row {
        std::size_t point = 0;
        std::string parameter;
        double parameter_value = 0.0;
        std::string label;
        std::size_t order = 0;
        std::string quantity;
        double value = 0.0;
        std::string unit;
        std::string module;
    };
    std::vector<Row> rows;
};

void write_csv(const Table& table, std::ostream& out);
/// Shortest round-trip decimal form.
std::string format_number(double v);

struct RunResult {
    Table table;
    std::vector<std::string> warnings;
};

struct RunOptions {
    unsigned threads = 1;
};

RunResult cmd_exact(const RunConfig& cfg, const RunOptions& opt = {});
RunResult cmd_simulate(const RunConfig& cfg, const RunOptions& opt = {});
RunResult cmd_snr(const RunConfig& cfg, const RunOptions& opt = {});
RunResult cmd_sweep(const RunConfig& cfg, const RunOptions& opt = {});
RunResult run(const RunConfig& cfg, const RunOptions& opt = {});

/// 64-bit FNV-1a of the canonical serialization.
std::string config_hash(const nlohmann::json& doc);

nlohmann::json make_manifest(const RunConfig& cfg, const RunResult& result, const RunOptions& opt,
                             const std::string& started_utc, const std::string& finished_utc,
                             const std::string& csv_name);

/// Writes <out_dir>/<command>.csv and <out_dir>/<command>.manifest.json.
void write_outputs(const RunConfig& cfg, const RunResult& result, const RunOptions& opt,
                   const std::filesystem::path& out_dir, const std::string& started_utc);

std::string utc_now();

/// Process exit code for an exception: 2 config, 3 numeric, 4 resource, 1 other.
int exit_code_for(const std::exception& e);

}  // namespace qns::workbench
