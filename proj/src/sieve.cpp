#include "disccensus/sieve.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <stdexcept>
#include <thread>
#include <vector>

#include "disccensus/int_arith.hpp"
#include "disccensus/irreducible.hpp"

namespace disccensus {

namespace {

mpz_class strict_box_disc(int n, const std::vector<long>& low) {
    bool tri = true;
    for (std::size_t j = 2; j < low.size(); ++j)
        if (low[j] != 0) {
            tri = false;
            break;
        }
    if (tri)
        return trinomial_disc(n, mpz_class(low[1]), mpz_class(low[0]));
    std::vector<mpz_class> coeffs(low.begin(), low.end());
    return discriminant(MonicIntPoly(n, std::move(coeffs)));
}

} // namespace

SieveWindow make_window(long z) {
    if (z < 2)
        throw std::invalid_argument("make_window: z must be >= 2");
    if (z > 100000000L)
        throw std::invalid_argument("make_window: z must be <= 10^8");
    const long limit = 2 * z;
    std::vector<bool> composite(limit + 1, false);
    for (long p = 2; p * p <= limit; ++p)
        if (!composite[p])
            for (long q = p * p; q <= limit; q += p)
                composite[q] = true;
    SieveWindow window;
    window.z = z;
    for (long p = z + 1; p <= limit; ++p)
        if (!composite[p])
            window.primes.push_back(p);
    return window;
}

IdentityCheck sieve_identity_check(const MonicIntPoly& f, const SieveWindow& window) {
    if (f.degree() < 2)
        throw std::invalid_argument("sieve_identity_check: need degree >= 2");
    if (window.primes.empty())
        throw std::invalid_argument("sieve_identity_check: empty window");
    if (is_irreducible(f).status != IrredStatus::irreducible)
        throw std::invalid_argument("sieve_identity_check: f must be irreducible");

    const mpz_class disc = discriminant(f);
    const mpz_class m = squarefree_part(disc).u * disc;
    IdentityCheck out;
    long long dividing = 0;
    for (long p : window.primes) {
        out.lhs += jacobi_symbol(m, mpz_class(p));
        if (mpz_divisible_ui_p(disc.get_mpz_t(), static_cast<unsigned long>(p)))
            ++dividing;
    }
    out.rhs = window.pi_count() - dividing;
    out.equal = out.lhs == out.rhs;
    return out;
}

SieveBound sieve_upper_bound(int n, long height, const mpz_class& u, long z,
                             int workers, long long budget) {
    if (n < 2)
        throw std::invalid_argument("sieve_upper_bound: need n >= 2");
    if (height < 1)
        throw std::invalid_argument("sieve_upper_bound: height must be >= 1");
    if (u == 0 || squarefree_part(u).v != 1)
        throw std::invalid_argument("sieve_upper_bound: u must be a square-free nonzero integer");
    if (workers < 1)
        throw std::invalid_argument("sieve_upper_bound: worker count must be >= 1");
    const SieveWindow window = make_window(z);
    const std::vector<mpz_class> wprimes(window.primes.begin(), window.primes.end());

    const long side = 2 * height - 1;
    long long total = 1;
    for (int j = 0; j < n; ++j) {
        if (total > budget / side)
            throw budget_error("sieve_upper_bound: box exceeds budget");
        total *= side;
    }

    struct Tally {
        unsigned long long weight = 0;
        long long squares = 0;
        int max_omega = 0;
    };
    auto body = [&](long long begin, long long end, Tally& out) {
        std::vector<long> low(n);
        mpz_class m, root;
        for (long long idx = begin; idx < end; ++idx) {
            long long rest = idx;
            for (int j = 0; j < n; ++j) {
                low[j] = static_cast<long>(rest % side) - (height - 1);
                rest /= side;
            }
            const mpz_class disc = strict_box_disc(n, low);
            if (disc != 0)
                out.max_omega = std::max(out.max_omega, factorize(disc).omega());
            m = u * disc;
            long long s = 0;
            for (const mpz_class& p : wprimes)
                s += jacobi_symbol(m, p);
            out.weight += static_cast<unsigned long long>(s * s);
            if (m > 0 && is_perfect_square(m, root))
                ++out.squares;
        }
    };

    std::vector<Tally> partial(workers);
    if (workers == 1 || total < workers) {
        body(0, total, partial[0]);
    } else {
        std::vector<std::exception_ptr> errors(workers);
        std::vector<std::thread> pool;
        const long long chunk = (total + workers - 1) / workers;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                try {
                    body(std::min<long long>(w * chunk, total),
                         std::min<long long>((w + 1) * chunk, total), partial[w]);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        for (auto& t : pool)
            t.join();
        for (const auto& e : errors)
            if (e)
                std::rethrow_exception(e);
    }

    SieveBound out;
    out.pi_count = window.pi_count();
    unsigned long long weight = 0;
    for (const Tally& t : partial) {
        if (weight > std::numeric_limits<long long>::max() - t.weight)
            throw budget_error("sieve_upper_bound: weight sum overflows");
        weight += t.weight;
        out.exact_squares += t.squares;
        out.max_omega = std::max(out.max_omega, t.max_omega);
    }
    out.weight_sum = static_cast<long long>(weight);
    out.condition_holds = out.pi_count >= 2 * out.max_omega;
    const double p = static_cast<double>(out.pi_count);
    out.value = 4.0 * static_cast<double>(out.weight_sum) / (p * p);
    return out;
}

double optimal_z(int n, long height) {
    if (n < 3)
        throw std::invalid_argument("optimal_z: need n >= 3");
    if (height < 3)
        throw std::invalid_argument("optimal_z: height must be >= 3");
    const double h = static_cast<double>(height);
    const double lh = std::log(h);
    const double denom = 2.0 * n - 1.0;
    const double z = std::pow(h, n / denom) / std::pow(lh, (n - 1.0) / denom);
    return std::max(z, lh * lh);
}

} // namespace disccensus
