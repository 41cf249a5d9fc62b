#define CPPHTTPLIB_OPENSSL_SUPPORT
#include "httplib.h"

#include "disccensus/lmfdb.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "disccensus/errors.hpp"

namespace disccensus {

namespace {

using nlohmann::json;

mpz_class parse_big(const json& value, const char* what) {
    if (value.is_string())
        return mpz_class(value.get<std::string>());
    if (value.is_number_integer())
        return mpz_class(static_cast<long>(value.get<long long>()));
    throw std::invalid_argument(std::string("lmfdb: ") + what + " is neither string nor integer");
}

FieldRecord parse_record(const json& rec, const std::string& label,
                         const std::string& source) {
    FieldRecord out;
    out.label = rec.value("label", label);
    if (out.label != label)
        throw std::invalid_argument("lmfdb: record label " + out.label +
                                    " does not match requested " + label);
    if (!rec.contains("degree") || !rec.contains("disc_abs"))
        throw std::invalid_argument("lmfdb: record misses degree or disc_abs");
    out.degree = rec["degree"].get<int>();
    out.disc_abs = parse_big(rec["disc_abs"], "disc_abs");
    out.disc_sign = rec.value("disc_sign", 1);
    if (rec.contains("coeffs"))
        for (const auto& c : rec["coeffs"])
            out.coeffs.push_back(parse_big(c, "coefficient"));
    out.source = source;
    if (out.degree < 1 || out.disc_abs < 1)
        throw std::invalid_argument("lmfdb: implausible record for " + label);
    if (!out.coeffs.empty() &&
        static_cast<int>(out.coeffs.size()) != out.degree + 1)
        throw std::invalid_argument("lmfdb: coefficient count does not match degree");
    return out;
}

FieldRecord read_fixture(const std::string& path, const std::string& label) {
    std::ifstream in(path);
    if (!in)
        throw network_error("lmfdb: offline and no fixture at " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    json parsed;
    try {
        parsed = json::parse(buffer.str());
    } catch (const json::exception& e) {
        throw std::invalid_argument("lmfdb: unparsable fixture " + path + ": " + e.what());
    }
    return parse_record(parsed, label, "fixture");
}

FieldRecord fetch_online(const std::string& label) {
    httplib::SSLClient client("www.lmfdb.org");
    client.set_connection_timeout(10);
    client.set_read_timeout(20);
    const std::string path = "/api/nf_fields/?_format=json&label=" + label;
    auto res = client.Get(path);
    if (!res)
        throw network_error("lmfdb: no response from www.lmfdb.org");
    if (res->status != 200)
        throw network_error("lmfdb: HTTP " + std::to_string(res->status) + " for " + label);
    json parsed;
    try {
        parsed = json::parse(res->body);
    } catch (const json::exception& e) {
        throw network_error(std::string("lmfdb: unparsable response: ") + e.what());
    }
    if (!parsed.contains("data") || !parsed["data"].is_array() || parsed["data"].empty())
        throw network_error("lmfdb: no record returned for " + label);
    return parse_record(parsed["data"][0], label, "network");
}

void cache_record(const FieldRecord& rec, const std::string& path) {
    json j;
    j["label"] = rec.label;
    j["degree"] = rec.degree;
    j["disc_abs"] = rec.disc_abs.get_str();
    j["disc_sign"] = rec.disc_sign;
    json coeffs = json::array();
    for (const mpz_class& c : rec.coeffs)
        coeffs.push_back(c.get_str());
    j["coeffs"] = coeffs;
    std::ofstream out(path);
    if (out)
        out << j.dump(2) << "\n";
}

} // namespace

bool lmfdb_label_valid(const std::string& label) {
    int dots = 0;
    bool digit_needed = true;
    for (char c : label) {
        if (std::isdigit(static_cast<unsigned char>(c))) {
            digit_needed = false;
        } else if (c == '.') {
            if (digit_needed)
                return false;
            ++dots;
            digit_needed = true;
        } else {
            return false;
        }
    }
    return dots == 3 && !digit_needed;
}

std::string lmfdb_cache_dir() {
    if (const char* env = std::getenv("DISC_CENSUS_CACHE_DIR"))
        return env;
    return "data/lmfdb";
}

FieldRecord lmfdb_lookup(const std::string& label, bool offline) {
    if (!lmfdb_label_valid(label))
        throw std::invalid_argument("lmfdb: malformed label " + label);
    const std::string path = lmfdb_cache_dir() + "/" + label + ".json";
    if (offline)
        return read_fixture(path, label);
    FieldRecord rec = fetch_online(label);
    cache_record(rec, path);
    return rec;
}

} // namespace disccensus
