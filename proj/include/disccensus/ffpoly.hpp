#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "disccensus/errors.hpp"
#include "disccensus/poly.hpp"

namespace disccensus {

// Monic polynomial over F_p; stores a_0..a_{n-1}, leading 1 implicit.
struct FpPoly {
    long p = 0;
    int n = 0;
    std::vector<long> low;

    FpPoly(long p, int n, std::vector<long> low_coeffs);
    static FpPoly from_int_poly(const MonicIntPoly& f, long p);
};

// lambda_1..lambda_n with <lambda o f> = lambda_1 a_{n-1} + ... + lambda_n a_0.
struct LambdaVector {
    long modulus = 0;
    std::vector<long> values;
};

// Exact sum of m-th roots of unity: counts[j] multiplies e(j/m).
struct ExpSum {
    long modulus = 0;
    std::vector<long long> counts;

    explicit ExpSum(long m);
    void add(long residue, long long amount = 1);
    // True iff the sum is exactly zero as an algebraic number.
    bool is_zero() const;
    std::complex<double> value() const;
    double magnitude() const;
};

// Exact equality as algebraic numbers (reduction mod the m-th cyclotomic).
bool exp_equal(const ExpSum& a, const ExpSum& b);

// Combines a sum over e(s/p) and one over e(t/q) into a sum over e(./pq).
ExpSum compose_crt(const ExpSum& sp, const ExpSum& sq);

IntPoly cyclotomic(long m);

long fp_resultant(long p, std::vector<long> a, std::vector<long> b);

// Dense polynomials over F_p as constant-first coefficient vectors, trimmed.
// Results of gcd/radical are monic; quotient requires exact divisibility.
std::vector<long> fp_gcd(long p, std::vector<long> a, std::vector<long> b);
std::vector<long> fp_radical(long p, std::vector<long> f);
std::vector<long> fp_quotient(long p, std::vector<long> a, std::vector<long> b);

// Factor degrees of a square-free monic polynomial, ascending, one entry per
// irreducible factor.
std::vector<int> fp_factor_degrees(const FpPoly& f);

long disc_mod_p(const FpPoly& f);
int legendre_symbol_fp(long a, long p);

struct FactorCount {
    bool squarefree = false;
    int r = 0;
};

FactorCount distinct_irreducible_factor_count(const FpPoly& f);

// Legendre symbol of Disc(f) mod p, computed both by Euler's criterion and
// by (-1)^{n-r}; throws std::logic_error if the routes ever disagree.
int stickelberger_symbol(const FpPoly& f);

mpz_class charsum_disc_total(long p, int n, long long budget = 10'000'000,
                             int workers = 1);

ExpSum mixed_charsum(long p, int n, const LambdaVector& lambda,
                     long long budget = 10'000'000);

struct SweepResult {
    double max_ratio = 0.0;   // max |S(lambda)| / p^{n-1} over nonzero lambda
    double max_abs = 0.0;
    std::vector<long> argmax; // lexicographically first maximizing lambda
};

SweepResult mixed_charsum_sweep(long p, int n, long long budget = 2'000'000'000,
                                int workers = 1);

// Direct enumeration mod m = p*q; asserts agreement with the CRT-composed
// product of the two prime-modulus sums before returning the direct value.
ExpSum jacobi_charsum(long p, long q, int n, const LambdaVector& lambda,
                      long long budget = 10'000'000);

struct BoxCharSum {
    mpz_class sum;
    double bound = 0.0; // H^{n-1} log m + m^{n-1} (log m)^n
};

BoxCharSum box_charsum(long p, long q, int n, long H,
                       long long budget = 10'000'000);

FpPoly fp_transform(const FpPoly& f, long u, long v);

// Number of monic f whose p(p-1) transforms f_{u,v} are not pairwise
// distinct; throws std::logic_error if it exceeds slack * p^{floor(n/2)+1}.
long exceptional_set_count(long p, int n, int slack = 8,
                           long long budget = 100'000'000);

// Exhaustive check of Disc(f_{u,v}) = u^{n(n-1)} Disc(f) over F_p.
bool ff_transform_disc_check(long p, int n, long long budget = 100'000'000);

} // namespace disccensus
