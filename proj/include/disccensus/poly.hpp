#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "disccensus/errors.hpp"

namespace disccensus {

// Dense integer polynomial, constant term first, no trailing zeros.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<mpz_class> coeffs);

    static IntPoly monomial(int degree, const mpz_class& coeff = 1);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    // Coefficient of X^i; zero beyond the degree.
    const mpz_class& operator[](int i) const;
    const std::vector<mpz_class>& coeffs() const { return c_; }
    const mpz_class& lc() const;

    IntPoly derivative() const;
    mpz_class eval(const mpz_class& x) const;
    mpq_class eval(const mpq_class& x) const;

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    IntPoly operator*(const mpz_class& s) const;
    IntPoly operator-() const;
    bool operator==(const IntPoly&) const = default;

private:
    std::vector<mpz_class> c_;
    void normalize();
};

struct PolyDivision {
    IntPoly quotient;
    IntPoly remainder;
};

// Division with remainder by a monic divisor; exact over Z.
PolyDivision divide_monic(const IntPoly& f, const IntPoly& g);

// Monic polynomial of degree >= 1; stores a_0..a_{n-1}, leading 1 implicit.
class MonicIntPoly {
public:
    explicit MonicIntPoly(IntPoly p);
    // low_coeffs holds a_0..a_{n-1}.
    MonicIntPoly(int n, std::vector<mpz_class> low_coeffs);

    const IntPoly& poly() const { return p_; }
    int degree() const { return p_.degree(); }
    const mpz_class& operator[](int i) const { return p_[i]; }
    mpz_class eval(const mpz_class& x) const { return p_.eval(x); }
    bool operator==(const MonicIntPoly&) const = default;

private:
    IntPoly p_;
};

// Dense rational polynomial for the Tschirnhaus transform.
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<mpq_class> coeffs);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const mpq_class& operator[](int i) const;
    const std::vector<mpq_class>& coeffs() const { return c_; }

    RatPoly derivative() const;
    mpq_class eval(const mpq_class& x) const;
    bool operator==(const RatPoly&) const = default;

private:
    std::vector<mpq_class> c_;
    void normalize();
};

// Text encoding is highest-degree first: "1,0,0,0,-2" is X^4 - 2.
IntPoly parse_poly(const std::string& text);
std::string format_poly(const IntPoly& f);

// Sylvester determinant by fraction-free Bareiss elimination.
mpz_class resultant(const IntPoly& f, const IntPoly& g);

// (-1)^{n(n-1)/2} Res(f, f'); requires deg f >= 2.
mpz_class discriminant(const MonicIntPoly& f);
mpq_class discriminant(const RatPoly& f);

// Disc(X^n + aX + b) in closed form; n >= 2.
mpz_class trinomial_disc(int n, const mpz_class& a, const mpz_class& b);

// The unsigned trinomial form (n-1)^{n-1} a^n + n^n b^{n-1}.
mpz_class delta_n(int n, const mpz_class& a, const mpz_class& b);

// Disc(X^n + aX^3 + b) in closed form; n >= 4, gcd(n, 3) = 1.
mpz_class quadrinomial_disc(int n, const mpz_class& a, const mpz_class& b);

// f_{u,v}(X) = u^n f(u^{-1}(X + v)); u nonzero.
RatPoly tschirnhaus_transform(const MonicIntPoly& f, const mpq_class& u,
                              const mpq_class& v);

// A_{f,j}(u,v) = u^j f^{(n-j)}(u^{-1}v) / (n-j)!, the X^{n-j} coefficient
// of the transform.
mpq_class transform_coefficient(const MonicIntPoly& f, int j, const mpq_class& u,
                                const mpq_class& v);

struct Monomial {
    std::vector<int> exponents; // exponents[j] is the power of a_j
    mpz_class coefficient;
};

struct MonomialList {
    int n = 0;
    std::vector<Monomial> entries;
};

// Full expansion of Disc(X^n + a_{n-1}X^{n-1} + ... + a_0) in a_0..a_{n-1},
// reconstructed by grid evaluation and interpolation. Memoized; 2 <= n <= 5.
const MonomialList& disc_multivariate(int n);

mpz_class evaluate_monomials(const MonomialList& list,
                             const std::vector<mpz_class>& values);

struct LeadingForm {
    int degree = 0;
    mpz_class leading;
    std::vector<mpz_class> coefficients; // constant first, in A_0
};

// D(A_0) = Disc(X^n + a_{n-1}X^{n-1} + ... + a_2 X^2 + (c0*A_0 + c1)X + A_0)
// interpolated as a univariate polynomial; verifies the predicted degree and
// leading coefficient before returning. upper holds a_2..a_{n-1}.
LeadingForm specialized_disc_leading(int n, const std::vector<mpz_class>& upper,
                                     const mpz_class& c0, const mpz_class& c1);

} // namespace disccensus
