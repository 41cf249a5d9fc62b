#pragma once

#include <vector>

#include <gmpxx.h>

#include "disccensus/poly.hpp"

namespace disccensus {

// Primes in the half-open window (z, 2z].
struct SieveWindow {
    long z = 0;
    std::vector<long> primes;

    long pi_count() const { return static_cast<long>(primes.size()); }
};

SieveWindow make_window(long z); // 2 <= z <= 10^8

struct IdentityCheck {
    long long lhs = 0; // sum of (u Disc(f) / p) over the window
    long long rhs = 0; // pi_count minus the window primes dividing Disc(f)
    bool equal = false;
};

// Requires f irreducible of degree >= 2; u is the square-free part of Disc(f).
IdentityCheck sieve_identity_check(const MonicIntPoly& f, const SieveWindow& window);

struct SieveBound {
    double value = 0.0;          // 4 * weight_sum / pi_count^2
    long long weight_sum = 0;    // sum over the box of S_f^2
    long long exact_squares = 0; // #{f : u Disc(f) = r^2, r >= 1}
    long pi_count = 0;
    int max_omega = 0;           // max omega(Disc f) over nonzero discriminants
    bool condition_holds = false; // pi_count >= 2 * max_omega; else an estimate
};

// Square-sieve bound on polynomials with u Disc(f) a perfect square, over all
// monic f of degree n with |a_i| < height.
SieveBound sieve_upper_bound(int n, long height, const mpz_class& u, long z,
                             int workers = 1, long long budget = 20'000'000);

// H^{n/(2n-1)} (ln H)^{-(n-1)/(2n-1)}, clamped below at (ln H)^2; n >= 3, H >= 3.
double optimal_z(int n, long height);

} // namespace disccensus
