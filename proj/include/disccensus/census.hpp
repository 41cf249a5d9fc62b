#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "disccensus/int_arith.hpp"
#include "disccensus/poly.hpp"

namespace disccensus {

// Arithmetic progression of coefficient values inside [lo, hi].
struct CoeffRange {
    long lo = 0;
    long hi = 0;  // inclusive
    long mod = 1; // keep values congruent to res
    long res = 0;

    long long count() const;
    std::vector<long> values() const;
};

struct HeightBox {
    int n = 0;
    std::vector<CoeffRange> ranges; // ranges[j] bounds the coefficient of X^j

    static HeightBox strict(int n, long height); // |a_j| < height
    static HeightBox closed(int n, std::vector<std::pair<long, long>> bounds);
    long long volume() const;
};

// X^n + aX - b with a in [H/2, H] even and b in [1, H/(3n)], b = 2 mod 4:
// Eisenstein at 2, pairwise distinct discriminants for large H.
HeightBox eisenstein_trinomial_box(int n, long height);

enum class CensusKey { squarefree_signed, squarefree_absolute, disc_value };

struct CountTable {
    CensusKey key = CensusKey::squarefree_signed;
    int n = 0;
    std::map<mpz_class, long long> counts;
    long long total = 0; // irreducible polynomials enumerated
};

CountTable count_by_squarefree_class(const HeightBox& box,
                                     CensusKey key = CensusKey::squarefree_signed,
                                     int workers = 1,
                                     long long budget = 20'000'000);

// True iff |u|(n-1)^{n-1} or |u| n^n is a perfect square (the excluded case
// of the discriminant-multiplicity theorem).
bool square_condition_fails(int n, const mpz_class& u);

struct MaxClass {
    mpz_class u;
    long long count = 0;
    bool condition_fails = false;
};

MaxClass max_class_multiplicity(int n, long height, int workers = 1,
                                long long budget = 20'000'000);

struct SmallDiscMass {
    long long certified = 0;  // certified |Delta(f)| <= bound
    long long unresolved = 0; // no certificate and square-free part |u| <= bound
};

SmallDiscMass small_disc_mass(int n, long height, const mpz_class& bound,
                              int workers = 1, long long budget = 20'000'000);

long long distinct_disc_count(const HeightBox& box,
                              CensusKey key = CensusKey::disc_value,
                              int workers = 1, long long budget = 20'000'000);

struct TrinomialCount {
    long long total = 0;
    long long per_a_max = 0;
    std::map<long, long long> per_a; // a values with at least one hit
};

// Pairs (a, b) in [C, C+A] x [D, D+B] with Delta_n(a, b) = s r^2, r >= 1.
TrinomialCount trinomial_count(int n, long A, long B, long C, long D,
                               const mpz_class& s,
                               long long budget = 100'000'000);

struct PellCount {
    long long count = 0;
    std::optional<long long> cross_check; // present when sM or -sM is a square
};

// Integer pairs (r, c), |r|, |c| <= bound, with s r^2 - M c^2 = rhs.
PellCount pell_count(const mpz_class& s, const mpz_class& M,
                     const mpz_class& rhs, long bound,
                     long long budget = 1'000'000'000);

struct QuadraticFieldCount {
    long long distinct_fields = 0; // distinct square-free u != 1
    long long rational_pairs = 0;  // pairs with a square discriminant
};

// Distinct Q(sqrt(Disc f)) over the box, f = X^n + aX + b irreducible.
QuadraticFieldCount quadratic_field_count(int n, long A, long B, long C, long D,
                                          long long budget = 100'000'000);

// Same classes over a, b >= 1 with |Delta_n(a, b)| <= bound.
QuadraticFieldCount quadratic_field_count_delta(int n, const mpz_class& bound,
                                                long long budget = 100'000'000);

struct LineCountParams {
    int n = 3;
    std::vector<mpz_class> upper; // fixed a_2..a_{n-1}
    mpz_class u = 1;              // square-free twist
    mpz_class d0 = 0, d1 = 0, d2 = 0; // line d0 a_0 + d1 a_1 + d2 = 0
    long height = 10;             // |a_0|, |a_1| <= height
    double z_exponent = 1.0;      // |z| <= height^c
};

// Tuples (z, a_0, a_1) on the line with z^2 = u Disc(f).
long long lemma_l3_solution_count(const LineCountParams& params);

} // namespace disccensus
