#ifndef DISCCENSUS_INT_ARITH_HPP
#define DISCCENSUS_INT_ARITH_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "disccensus/errors.hpp"

namespace disccensus {

struct FactorizationLimits {
    unsigned long trial_division_bound = 100000; // try primes up to min(this, sqrt n)
    unsigned long rho_iteration_budget = 20000000;
    int primality_rounds = 25; // extra Miller-Rabin rounds above the deterministic range

    void validate() const;
};

// Sign and sorted (prime, exponent) pairs; value() == sign * prod p^e.
struct Factorization {
    int sign = 1;
    std::vector<std::pair<mpz_class, int>> factors;

    mpz_class value() const;
    // number of distinct prime divisors (the omega function)
    int omega() const { return static_cast<int>(factors.size()); }
};

// k = u * v^2 with u square-free, sign(u) = sign(k), v >= 1.
struct SquarefreeDecomposition {
    mpz_class u;
    mpz_class v;
};

// Deterministic Miller-Rabin below 3.317e24 (fixed base set), seeded
// pseudo-random bases with `rounds` extra rounds above.
bool is_probable_prime(const mpz_class& n, int rounds = 25);

// Trial division followed by Brent-cycle rho with deterministic seeds.
// Throws budget_error if a cofactor resists splitting within the limits.
Factorization factorize(const mpz_class& k, const FactorizationLimits& limits = {});

// Throws std::invalid_argument for k = 0.
SquarefreeDecomposition squarefree_part(const mpz_class& k,
                                        const FactorizationLimits& limits = {});

// Jacobi symbol (u/m) for odd m >= 1, by quadratic reciprocity; m is never
// factored. Throws std::invalid_argument for even or non-positive m.
int jacobi_symbol(const mpz_class& u, const mpz_class& m);

bool is_perfect_square(const mpz_class& k);
bool is_perfect_square(const mpz_class& k, mpz_class& root); // root >= 0 when true

enum class SquareTest { certainly_not_square, probably_square };

// Samples `prime_count` odd primes from a deterministic stream (given seed),
// skipping primes dividing k; answers certainly_not_square iff some sampled
// prime has (k/p) = -1. Never rejects an actual square.
SquareTest probabilistic_square_test(const mpz_class& k, int prime_count,
                                     std::uint64_t seed);

// Shared table of the primes below 2^16, built lazily. Handy for trial
// division and window sieves.
const std::vector<std::uint32_t>& small_primes();

} // namespace disccensus

#endif
