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

// qns: run exact, simulate, snr or sweep from a JSON config.
//
//   qns <command> --config <path> --out <dir> [--threads N]
//
// Exit codes: 0 success, 2 config error, 3 numeric guard, 4 resource guard.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qns/errors.hpp"
#include "qns/workbench.hpp"

namespace {

unsigned threads_from_env() {
    if (const char* env = std::getenv("QNS_THREADS")) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1 && v <= 1024) {
            return static_cast<unsigned>(v);
        }
        throw qns::ConfigError("QNS_THREADS must be an integer in 1..1024");
    }
    return 1;
}

int execute(const std::string& command, const std::string& config_path, const std::string& out_dir,
            unsigned threads) {
    using namespace qns::workbench;
    const std::string started = utc_now();
    std::ifstream in(config_path);
    if (!in) {
        throw qns::ConfigError("cannot open config " + config_path);
    }
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw qns::ConfigError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        throw qns::ConfigError("config must be a JSON object");
    }
    if (!doc.contains("command")) {
        doc["command"] = command;
    } else if (doc["command"] != command) {
        throw qns::ConfigError("config command '" + doc["command"].dump() + "' does not match '" + command + "'");
    }
    const RunConfig cfg = parse_config(doc, std::filesystem::path(config_path).parent_path());
    const RunOptions opt{threads};
    const RunResult result = run(cfg, opt);
    for (const auto& w : result.warnings) {
        std::cerr << "warning: " << w << '\n';
    }
    write_outputs(cfg, result, opt, out_dir, started);
    std::cout << "wrote " << (std::filesystem::path(out_dir) / (command + ".csv")).string() << " ("
              << result.table.rows.size() << " rows)\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sequential weak-measurement spectroscopy workbench"};
    app.require_subcommand(1);
    std::string config_path;
    std::string out_dir;
    unsigned threads = 0;
    for (const char* name : {"exact", "simulate", "snr", "sweep"}) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("--config", config_path, "JSON run config")->required();
        sub->add_option("--out", out_dir, "output directory")->required();
        sub->add_option("--threads", threads, "worker threads (overrides QNS_THREADS)")->check(CLI::Range(1u, 1024u));
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    try {
        const std::string command = app.get_subcommands().front()->get_name();
        if (threads == 0) {
            threads = threads_from_env();
        }
        return execute(command, config_path, out_dir, threads);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return qns::workbench::exit_code_for(e);
    }
}
