#pragma once

#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "disccensus/int_arith.hpp"
#include "disccensus/poly.hpp"

namespace disccensus {

enum class PMaximality { maximal, not_maximal };

struct DedekindReport {
    MonicIntPoly polynomial;
    mpz_class disc;
    // Exactly the primes p with p^2 | disc.
    std::vector<std::pair<mpz_class, PMaximality>> tested_primes;
    // Present iff every verdict is maximal; then equals disc.
    std::optional<mpz_class> certified_field_disc;
    // Always equals squarefree_part(disc): Disc/Delta is a square.
    SquarefreeDecomposition sf_part_of_field_disc;
};

// Dedekind's criterion for p-maximality of Z[X]/(f); f irreducible over Q.
PMaximality dedekind_p_maximal(const MonicIntPoly& f, const mpz_class& p);

DedekindReport field_disc(const MonicIntPoly& f,
                          const FactorizationLimits& limits = {});

struct MonogenicDensity {
    long long certified = 0;    // Delta(f) = Disc(f) via Dedekind at all bad primes
    long long irreducible = 0;
    long long box_points = 0;   // (2H-1)^n
    double density = 0.0;       // certified / irreducible
    double density_box = 0.0;   // certified / box_points (the conjecture's form)
};

// Certified Delta(f) = Disc(f) over I_n(H) (strict box), reported both as a
// fraction of the irreducible sample and of the whole box.
MonogenicDensity monogenic_density(int n, long height, int workers = 1);

} // namespace disccensus
