#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "disccensus/poly.hpp"

namespace disccensus {

struct VectorResult {
    std::string name;
    bool pass = false;
    bool skipped = false;
    std::string detail;
};

// Reference vectors in a fixed order; the degree-24 splitting-field
// discriminant only runs when slow is set and is otherwise marked skipped.
std::vector<VectorResult> verify_reference_vectors(bool slow = false);

// Defining polynomial of the splitting field of X^4 - X - 1 and the
// published factorization of its discriminant.
const MonicIntPoly& splitting_poly_deg24();
const mpz_class& printed_disc_deg24();

} // namespace disccensus
