#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

namespace disccensus {

struct FieldRecord {
    std::string label;
    int degree = 0;
    mpz_class disc_abs;
    int disc_sign = 1;
    std::vector<mpz_class> coeffs; // defining polynomial, constant first
    std::string source;            // "network" or "fixture"
};

bool lmfdb_label_valid(const std::string& label);

// Directory holding fixture/cache files <label>.json; DISC_CENSUS_CACHE_DIR
// overrides, falling back to data/lmfdb under the current directory.
std::string lmfdb_cache_dir();

// Offline reads the fixture; online fetches the public LMFDB API over HTTPS
// and caches on success. Malformed labels throw std::invalid_argument;
// unreachable service or missing fixture throw network_error.
FieldRecord lmfdb_lookup(const std::string& label, bool offline);

} // namespace disccensus
