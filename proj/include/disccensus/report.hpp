#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace disccensus {

inline constexpr const char* kToolVersion = "disc-census 0.1.0";

// Everything that determines a run's persisted bytes, plus execution knobs
// (worker_count, output_path) that deliberately never reach the output.
struct RunConfig {
    std::string command;
    std::vector<std::pair<std::string, std::string>> params; // sorted by key
    std::uint64_t seed = 0;
    int worker_count = 1;
    std::string output_path; // empty writes to stdout
    bool offline = false;
};

// FNV-1a over command, params, seed and the offline flag; worker count and
// output path are excluded so they cannot alter persisted bytes.
std::uint64_t config_hash(const RunConfig& config);
std::string config_hash_hex(const RunConfig& config);

struct Report {
    RunConfig config;
    std::vector<std::string> columns;            // empty for single-object reports
    std::vector<std::vector<std::string>> rows;  // builders emit rows sorted by key
    std::vector<std::pair<std::string, std::string>> metrics; // sorted by key
    std::string version = kToolVersion;
};

// RFC-4180 quoting, "# config=<hash>" comment first. Tables render their
// columns; reports without columns render metrics as key,value rows.
std::string to_csv(const Report& report);

// Big integers are already decimal strings in rows/metrics and stay strings.
std::string to_json(const Report& report);

// Minimal JSON-schema subset: type, required, properties, items,
// additionalProperties. Throws std::invalid_argument on the first violation.
void validate_report_json(const std::string& json_text, const std::string& schema_text);

} // namespace disccensus
