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

#include <charconv>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <map>
#include <ostream>

#include "qns/errors.hpp"
#include "qns/kernels.hpp"
#include "qns/workbench.hpp"

namespace qns::workbench {

using nlohmann::json;

namespace {

std::string quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + '"';
}

}  // namespace

std::string format_number(double v) {
    if (std::isnan(v)) {
        return "nan";
    }
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

void write_csv(const Table& table, std::ostream& out) {
    out << "point,parameter,parameter_value,label,order,quantity,value,unit,module\n";
    for (const auto& r : table.rows) {
        out << r.point << ',' << quote(r.parameter) << ','
            << (r.parameter.empty() ? std::string() : format_number(r.parameter_value)) << ',' << quote(r.label)
            << ',' << r.order << ',' << quote(r.quantity) << ',' << format_number(r.value) << ',' << quote(r.unit)
            << ',' << quote(r.module) << '\n';
    }
}

std::string config_hash(const json& doc) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : doc.dump()) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string utc_now() {
    const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

json make_manifest(const RunConfig& cfg, const RunResult& result, const RunOptions& opt,
                   const std::string& started_utc, const std::string& finished_utc, const std::string& csv_name) {
    std::map<std::string, std::string> provenance;
    for (const auto& r : result.table.rows) {
        provenance.emplace(r.quantity, r.module);
    }
    json m;
    m["tool"] = "qns";
    m["version"] = kVersion;
    m["command"] = command_name(cfg.command);
    m["config_hash"] = config_hash(cfg.document);
    m["seed"] = cfg.seed ? json(*cfg.seed) : json(nullptr);
    m["threads"] = opt.threads;
    m["isa"] = kernels::isa_name(kernels::active_isa());
    m["started_utc"] = started_utc;
    m["finished_utc"] = finished_utc;
    m["csv"] = csv_name;
    m["rows"] = result.table.rows.size();
    m["provenance"] = provenance;
    m["warnings"] = result.warnings;
    m["config"] = cfg.document;
    return m;
}

void write_outputs(const RunConfig& cfg, const RunResult& result, const RunOptions& opt,
                   const std::filesystem::path& out_dir, const std::string& started_utc) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) {
        throw ConfigError("cannot create output directory " + out_dir.string() + ": " + ec.message());
    }
    const std::string stem = command_name(cfg.command);
    const std::string csv_name = stem + ".csv";
    {
        std::ofstream csv(out_dir / csv_name);
        if (!csv) {
            throw ConfigError("cannot write " + (out_dir / csv_name).string());
        }
        write_csv(result.table, csv);
    }
    std::ofstream man(out_dir / (stem + ".manifest.json"));
    if (!man) {
        throw ConfigError("cannot write manifest in " + out_dir.string());
    }
    man << make_manifest(cfg, result, opt, started_utc, utc_now(), csv_name).dump(2) << '\n';
}

int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const ConfigError*>(&e) || dynamic_cast<const DimensionError*>(&e)) {
        return 2;
    }
    if (dynamic_cast<const NumericError*>(&e)) {
        return 3;
    }
    if (dynamic_cast<const ResourceError*>(&e)) {
        return 4;
    }
    return 1;
}

}  // namespace qns::workbench
