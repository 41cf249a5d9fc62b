#include "disccensus/int_arith.hpp"

#include <algorithm>
#include <array>
#include <mutex>

namespace disccensus {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Largest n for which the 12-base Miller-Rabin set is known deterministic.
const mpz_class& deterministic_mr_limit() {
    static const mpz_class limit("3317044064679887385961981");
    return limit;
}

bool miller_rabin_round(const mpz_class& n, const mpz_class& base,
                        const mpz_class& d, unsigned long s) {
    mpz_class a = base % n;
    if (a == 0)
        return true;
    mpz_class x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n - 1)
        return true;
    for (unsigned long r = 1; r < s; ++r) {
        x = (x * x) % n;
        if (x == n - 1)
            return true;
    }
    return false;
}

} // namespace

void FactorizationLimits::validate() const {
    if (trial_division_bound == 0 || rho_iteration_budget == 0 || primality_rounds <= 0)
        throw std::invalid_argument("factorization limits must be positive");
}

mpz_class Factorization::value() const {
    mpz_class v = sign;
    for (const auto& [p, e] : factors)
        for (int i = 0; i < e; ++i)
            v *= p;
    return v;
}

const std::vector<std::uint32_t>& small_primes() {
    static std::vector<std::uint32_t> primes;
    static std::once_flag once;
    std::call_once(once, [] {
        const std::uint32_t limit = 1u << 16;
        std::vector<bool> composite(limit, false);
        for (std::uint32_t i = 2; i * i < limit; ++i)
            if (!composite[i])
                for (std::uint32_t j = i * i; j < limit; j += i)
                    composite[j] = true;
        for (std::uint32_t i = 2; i < limit; ++i)
            if (!composite[i])
                primes.push_back(i);
    });
    return primes;
}

bool is_probable_prime(const mpz_class& n, int rounds) {
    if (n < 2)
        return false;
    static const std::array<unsigned, 12> bases = {2,  3,  5,  7,  11, 13,
                                                   17, 19, 23, 29, 31, 37};
    for (unsigned b : bases) {
        if (n == b)
            return true;
        if (n % b == 0)
            return false;
    }
    mpz_class d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    d >>= s;
    for (unsigned b : bases)
        if (!miller_rabin_round(n, mpz_class(b), d, s))
            return false;
    if (n < deterministic_mr_limit())
        return true;
    // Above the deterministic range: extra rounds with seeded bases.
    std::uint64_t state = 0x5eedULL ^ mpz_fdiv_ui(n.get_mpz_t(), 0xffffffffULL);
    for (int i = 0; i < rounds; ++i) {
        mpz_class base = 2 + mpz_class(splitmix64(state) >> 1) % (n - 3);
        if (!miller_rabin_round(n, base, d, s))
            return false;
    }
    return true;
}

namespace {

// Brent's cycle variant of Pollard rho. Decrements `budget` as it iterates
// and throws budget_error on exhaustion. Returns a nontrivial factor of n
// (n must be composite, odd, and not a perfect power of interest here).
mpz_class brent_rho(const mpz_class& n, unsigned long& budget) {
    for (unsigned long c = 1;; ++c) {
        std::uint64_t state = 0x42d231f7ULL + c;
        mpz_class y = mpz_class(splitmix64(state)) % n;
        mpz_class x, ys, q = 1, g = 1;
        const unsigned long m = 128;
        unsigned long r = 1;
        while (g == 1) {
            x = y;
            for (unsigned long i = 0; i < r; ++i)
                y = (y * y + c) % n;
            for (unsigned long k = 0; k < r && g == 1; k += m) {
                ys = y;
                const unsigned long steps = std::min(m, r - k);
                if (budget < steps)
                    throw budget_error("rho iteration budget exhausted");
                budget -= steps;
                for (unsigned long i = 0; i < steps; ++i) {
                    y = (y * y + c) % n;
                    q = (q * abs(x - y)) % n;
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            }
            r *= 2;
        }
        if (g == n) {
            // Backtrack one step at a time to recover the factor.
            do {
                ys = (ys * ys + c) % n;
                mpz_class diff = abs(x - ys);
                mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != n)
            return g;
        // Cycle collapsed for this polynomial; retry with the next c.
    }
}

void factor_recursive(mpz_class n, const FactorizationLimits& limits,
                      unsigned long& rho_budget, std::vector<mpz_class>& out) {
    if (n == 1)
        return;
    if (is_probable_prime(n, limits.primality_rounds)) {
        out.push_back(n);
        return;
    }
    mpz_class root;
    if (is_perfect_square(n, root)) {
        const std::size_t before = out.size();
        factor_recursive(root, limits, rho_budget, out);
        const std::size_t after = out.size();
        for (std::size_t i = before; i < after; ++i)
            out.push_back(out[i]);
        return;
    }
    mpz_class d = brent_rho(n, rho_budget);
    factor_recursive(d, limits, rho_budget, out);
    factor_recursive(n / d, limits, rho_budget, out);
}

} // namespace

Factorization factorize(const mpz_class& k, const FactorizationLimits& limits) {
    limits.validate();
    if (k == 0)
        throw std::invalid_argument("factorize: k must be nonzero");
    Factorization result;
    result.sign = sgn(k) < 0 ? -1 : 1;
    mpz_class n = abs(k);

    std::vector<mpz_class> primes_found;
    for (std::uint32_t p : small_primes()) {
        if (p > limits.trial_division_bound)
            break;
        if (mpz_class(p) * p > n)
            break;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
            primes_found.emplace_back(p);
        }
    }
    // Trial division beyond the small-prime table when the bound asks for it.
    if (limits.trial_division_bound > 65536) {
        mpz_class p = 65537;
        while (p <= limits.trial_division_bound && p * p <= n) {
            while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
                mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
                primes_found.push_back(p);
            }
            p += 2;
        }
    }
    if (n > 1) {
        mpz_class bound_sq = mpz_class(limits.trial_division_bound);
        bound_sq *= limits.trial_division_bound;
        if (bound_sq >= n) {
            // Below the square of the trial bound a surviving cofactor is prime.
            primes_found.push_back(n);
        } else {
            unsigned long budget = limits.rho_iteration_budget;
            factor_recursive(n, limits, budget, primes_found);
        }
    }

    std::sort(primes_found.begin(), primes_found.end());
    for (std::size_t i = 0; i < primes_found.size();) {
        std::size_t j = i;
        while (j < primes_found.size() && primes_found[j] == primes_found[i])
            ++j;
        result.factors.emplace_back(primes_found[i], static_cast<int>(j - i));
        i = j;
    }
    return result;
}

SquarefreeDecomposition squarefree_part(const mpz_class& k,
                                        const FactorizationLimits& limits) {
    if (k == 0)
        throw std::invalid_argument("squarefree_part: undefined for 0");
    Factorization f = factorize(k, limits);
    SquarefreeDecomposition d;
    d.u = f.sign;
    d.v = 1;
    for (const auto& [p, e] : f.factors) {
        if (e % 2 == 1)
            d.u *= p;
        for (int i = 0; i < e / 2; ++i)
            d.v *= p;
    }
    return d;
}

int jacobi_symbol(const mpz_class& u, const mpz_class& m) {
    if (m <= 0 || mpz_even_p(m.get_mpz_t()))
        throw std::invalid_argument("jacobi_symbol: modulus must be odd and positive");
    mpz_class a = u % m;
    if (a < 0)
        a += m;
    mpz_class b = m;
    int result = 1;
    while (a != 0) {
        while (mpz_even_p(a.get_mpz_t())) {
            a >>= 1;
            unsigned long r = mpz_fdiv_ui(b.get_mpz_t(), 8);
            if (r == 3 || r == 5)
                result = -result;
        }
        std::swap(a, b);
        if (mpz_fdiv_ui(a.get_mpz_t(), 4) == 3 && mpz_fdiv_ui(b.get_mpz_t(), 4) == 3)
            result = -result;
        a %= b;
    }
    return b == 1 ? result : 0;
}

bool is_perfect_square(const mpz_class& k) {
    if (k < 0)
        return false;
    return mpz_perfect_square_p(k.get_mpz_t()) != 0;
}

bool is_perfect_square(const mpz_class& k, mpz_class& root) {
    if (!is_perfect_square(k))
        return false;
    mpz_sqrt(root.get_mpz_t(), k.get_mpz_t());
    return true;
}

SquareTest probabilistic_square_test(const mpz_class& k, int prime_count,
                                     std::uint64_t seed) {
    if (k == 0)
        throw std::invalid_argument("probabilistic_square_test: k must be nonzero");
    if (prime_count < 1)
        throw std::invalid_argument("probabilistic_square_test: prime_count must be >= 1");
    std::uint64_t state = seed;
    int sampled = 0;
    while (sampled < prime_count) {
        // Draw an odd candidate below 2^31 and move to the next prime.
        std::uint64_t c = (splitmix64(state) % (1ULL << 31)) | 1u;
        mpz_class p;
        mpz_nextprime(p.get_mpz_t(), mpz_class(c).get_mpz_t());
        if (p == 2 || k % p == 0)
            continue;
        ++sampled;
        if (jacobi_symbol(k, p) == -1)
            return SquareTest::certainly_not_square;
    }
    return SquareTest::probably_square;
}

} // namespace disccensus
