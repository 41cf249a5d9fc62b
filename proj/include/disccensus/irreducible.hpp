#pragma once

#include <optional>
#include <string>

#include <gmpxx.h>

#include "disccensus/int_arith.hpp"
#include "disccensus/poly.hpp"

namespace disccensus {

enum class IrredStatus { irreducible, reducible, inconclusive_escalated };

struct IrreducibilityVerdict {
    IrredStatus status = IrredStatus::inconclusive_escalated;
    std::optional<IntPoly> witness; // monic proper factor when reducible
    std::string certificate;        // deciding route
};

struct IrredOptions {
    bool use_eisenstein = true;
    bool use_degree_patterns = true;
    bool use_fallback = true;
    int pattern_primes = 6;
    long long fallback_node_budget = 20'000'000;
    FactorizationLimits limits{};
};

// Smallest prime p with p | a_i for all i < n and p^2 not dividing a_0.
std::optional<mpz_class> eisenstein_test(const MonicIntPoly& f,
                                         const FactorizationLimits& limits = {});

// Exact verdict over Q: rational-root screen, Eisenstein shortcut,
// factor-degree patterns mod primes away from Disc(f), then a bounded
// divisor search (Mignotte box, interpolation through divisor tuples).
IrreducibilityVerdict is_irreducible(const MonicIntPoly& f,
                                     const IrredOptions& options = {});

struct IrreducibleCount {
    long long irreducible = 0;
    long long box_points = 0;     // (2H-1)^n
    double ratio_strict = 0.0;    // irreducible / (2H-1)^n
    double ratio_main_term = 0.0; // irreducible / (2H)^n
};

// #I_n(H) under the strict bound |a_i| < H.
IrreducibleCount count_irreducible(int n, long height, int workers = 1,
                                   long long budget = 20'000'000);

} // namespace disccensus
