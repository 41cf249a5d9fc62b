#include "disccensus/report.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace disccensus {

namespace {

void fnv_mix(std::uint64_t& h, const std::string& s) {
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    h ^= 0xff; // field separator
    h *= 1099511628211ULL;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    out += '"';
    return out;
}

using nlohmann::ordered_json;

void check_schema(const ordered_json& value, const ordered_json& schema,
                  const std::string& path) {
    if (schema.is_boolean()) {
        if (!schema.get<bool>())
            throw std::invalid_argument("schema: " + path + " is not allowed");
        return;
    }
    if (schema.contains("type")) {
        const std::string type = schema["type"].get<std::string>();
        const bool ok = (type == "object" && value.is_object()) ||
                        (type == "array" && value.is_array()) ||
                        (type == "string" && value.is_string()) ||
                        (type == "integer" && value.is_number_integer()) ||
                        (type == "number" && value.is_number()) ||
                        (type == "boolean" && value.is_boolean());
        if (!ok)
            throw std::invalid_argument("schema: " + path + " is not of type " + type);
    }
    if (schema.contains("required"))
        for (const auto& key : schema["required"]) {
            const std::string k = key.get<std::string>();
            if (!value.contains(k))
                throw std::invalid_argument("schema: " + path + " misses required key " + k);
        }
    if (value.is_object()) {
        const auto& props = schema.contains("properties") ? schema["properties"]
                                                          : ordered_json::object();
        for (const auto& [k, v] : value.items()) {
            if (props.contains(k)) {
                check_schema(v, props[k], path + "." + k);
            } else if (schema.contains("additionalProperties")) {
                check_schema(v, schema["additionalProperties"], path + "." + k);
            }
        }
    }
    if (value.is_array() && schema.contains("items")) {
        std::size_t i = 0;
        for (const auto& v : value) {
            check_schema(v, schema["items"], path + "[" + std::to_string(i) + "]");
            ++i;
        }
    }
}

} // namespace

std::uint64_t config_hash(const RunConfig& config) {
    std::uint64_t h = 1469598103934665603ULL;
    fnv_mix(h, config.command);
    for (const auto& [key, value] : config.params) {
        fnv_mix(h, key);
        fnv_mix(h, value);
    }
    fnv_mix(h, std::to_string(config.seed));
    fnv_mix(h, config.offline ? "offline" : "online");
    return h;
}

std::string config_hash_hex(const RunConfig& config) {
    std::ostringstream out;
    out << std::hex << std::setw(16) << std::setfill('0') << config_hash(config);
    return out.str();
}

std::string to_csv(const Report& report) {
    std::ostringstream out;
    out << "# config=" << config_hash_hex(report.config) << "\n";
    if (!report.columns.empty()) {
        for (std::size_t i = 0; i < report.columns.size(); ++i)
            out << (i ? "," : "") << csv_field(report.columns[i]);
        out << "\n";
        for (const auto& row : report.rows) {
            for (std::size_t i = 0; i < row.size(); ++i)
                out << (i ? "," : "") << csv_field(row[i]);
            out << "\n";
        }
    } else {
        out << "key,value\n";
        for (const auto& [key, value] : report.metrics)
            out << csv_field(key) << "," << csv_field(value) << "\n";
    }
    return out.str();
}

std::string to_json(const Report& report) {
    ordered_json j;
    j["version"] = report.version;
    ordered_json params = ordered_json::object();
    for (const auto& [key, value] : report.config.params)
        params[key] = value;
    j["config"] = {{"command", report.config.command},
                   {"hash", config_hash_hex(report.config)},
                   {"seed", report.config.seed},
                   {"offline", report.config.offline},
                   {"params", params}};
    j["columns"] = report.columns;
    j["rows"] = report.rows;
    ordered_json metrics = ordered_json::object();
    for (const auto& [key, value] : report.metrics)
        metrics[key] = value;
    j["metrics"] = metrics;
    return j.dump(2) + "\n";
}

void validate_report_json(const std::string& json_text, const std::string& schema_text) {
    ordered_json value, schema;
    try {
        value = ordered_json::parse(json_text);
        schema = ordered_json::parse(schema_text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("schema: unparsable input: ") + e.what());
    }
    check_schema(value, schema, "$");
}

} // namespace disccensus
