#include "disccensus/irreducible.hpp"

#include "disccensus/ffpoly.hpp"

#include <algorithm>
#include <cstdint>
#include <thread>
#include <utility>

namespace disccensus {

namespace {

std::vector<mpz_class> positive_divisors(const mpz_class& k,
                                         const FactorizationLimits& limits) {
    Factorization fac = factorize(k, limits);
    std::vector<mpz_class> divs{1};
    for (const auto& [p, e] : fac.factors) {
        const std::size_t base = divs.size();
        mpz_class power = 1;
        for (int i = 0; i < e; ++i) {
            power *= p;
            for (std::size_t j = 0; j < base; ++j)
                divs.push_back(divs[j] * power);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

IrreducibilityVerdict reducible_with(IntPoly witness, std::string certificate) {
    return {IrredStatus::reducible, std::move(witness), std::move(certificate)};
}

IrreducibilityVerdict irreducible_with(std::string certificate) {
    return {IrredStatus::irreducible, std::nullopt, std::move(certificate)};
}

// Monic gcd(f, g) over Q; integral by Gauss's lemma when f is monic.
IntPoly rational_gcd_monic(const IntPoly& f, const IntPoly& g) {
    std::vector<mpq_class> a(f.coeffs().begin(), f.coeffs().end());
    std::vector<mpq_class> b(g.coeffs().begin(), g.coeffs().end());
    auto trim = [](std::vector<mpq_class>& v) {
        while (!v.empty() && v.back() == 0)
            v.pop_back();
    };
    trim(a);
    trim(b);
    while (!b.empty()) {
        // a mod b
        const mpq_class lead = b.back();
        while (a.size() >= b.size()) {
            const mpq_class c = a.back() / lead;
            const std::size_t shift = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i)
                a[shift + i] -= c * b[i];
            a.pop_back();
            trim(a);
        }
        std::swap(a, b);
    }
    std::vector<mpz_class> out(a.size());
    const mpq_class lead = a.back();
    for (std::size_t i = 0; i < a.size(); ++i) {
        mpq_class c = a[i] / lead;
        c.canonicalize();
        if (c.get_den() != 1)
            throw std::logic_error("rational gcd of a monic polynomial is not integral");
        out[i] = c.get_num();
    }
    return IntPoly(std::move(out));
}

std::optional<IntPoly> rational_root_factor(const MonicIntPoly& f,
                                            const FactorizationLimits& limits) {
    for (const mpz_class& d : positive_divisors(abs(f[0]), limits)) {
        if (f.eval(d) == 0)
            return IntPoly({-d, 1});
        if (f.eval(-d) == 0)
            return IntPoly({d, 1});
    }
    return std::nullopt;
}

// Subset sums of the factor-degree multiset of f mod p, as a bitmask.
std::uint64_t degree_pattern_mask(const MonicIntPoly& f, long p) {
    std::uint64_t mask = 1;
    for (int d : fp_factor_degrees(FpPoly::from_int_poly(f, p)))
        mask |= mask << d;
    return mask;
}

// Monic divisor search of degree d: any monic factor g satisfies
// g(j) | f(j), so interpolate through signed divisor tuples at 0..d-1.
std::optional<IntPoly> divisor_search(const MonicIntPoly& f, int d,
                                      const mpz_class& coeff_bound,
                                      long long& nodes_left,
                                      const FactorizationLimits& limits) {
    std::vector<std::vector<mpz_class>> choices(d);
    long long tuples = 1;
    for (int j = 0; j < d; ++j) {
        for (const mpz_class& t : positive_divisors(abs(f.eval(j)), limits)) {
            choices[j].push_back(t);
            choices[j].push_back(-t);
        }
        if (tuples > nodes_left / static_cast<long long>(choices[j].size()))
            throw budget_error("irreducibility fallback exceeded its node budget");
        tuples *= static_cast<long long>(choices[j].size());
    }
    nodes_left -= tuples;

    IntPoly monic_part(std::vector<mpz_class>{1});
    for (int j = 0; j < d; ++j)
        monic_part = monic_part * IntPoly({mpz_class(-j), 1});

    std::vector<int> idx(d, 0);
    std::vector<mpz_class> dd(d);
    mpz_class diff;
    for (;;) {
        for (int j = 0; j < d; ++j)
            dd[j] = choices[j][idx[j]];
        // Divided differences over nodes 0..d-1; integral iff g can be.
        bool integral = true;
        for (int k = 1; k < d && integral; ++k) {
            for (int i = d - 1; i >= k; --i) {
                diff = dd[i] - dd[i - 1];
                if (!mpz_divisible_ui_p(diff.get_mpz_t(), static_cast<unsigned long>(k))) {
                    integral = false;
                    break;
                }
                mpz_divexact_ui(dd[i].get_mpz_t(), diff.get_mpz_t(),
                                static_cast<unsigned long>(k));
            }
        }
        if (integral) {
            std::vector<mpz_class> low{dd[d - 1]};
            for (int i = d - 2; i >= 0; --i) {
                low.insert(low.begin(), 0);
                for (std::size_t k = 0; k + 1 < low.size(); ++k)
                    low[k] -= low[k + 1] * i;
                low[0] += dd[i];
            }
            IntPoly g = monic_part + IntPoly(std::move(low));
            bool bounded = true;
            for (int i = 0; i <= g.degree(); ++i)
                if (abs(g[i]) > coeff_bound) {
                    bounded = false;
                    break;
                }
            if (bounded && divide_monic(f.poly(), g).remainder.is_zero())
                return g;
        }
        int pos = 0;
        while (pos < d && ++idx[pos] == static_cast<int>(choices[pos].size())) {
            idx[pos] = 0;
            ++pos;
        }
        if (pos == d)
            return std::nullopt;
    }
}

} // namespace

std::optional<mpz_class> eisenstein_test(const MonicIntPoly& f,
                                         const FactorizationLimits& limits) {
    const int n = f.degree();
    if (f[0] == 0)
        return std::nullopt;
    for (const auto& [p, e] : factorize(f[0], limits).factors) {
        if (e >= 2)
            continue;
        bool all = true;
        for (int i = 1; i < n && all; ++i)
            all = mpz_divisible_p(f[i].get_mpz_t(), p.get_mpz_t());
        if (all)
            return p;
    }
    return std::nullopt;
}

IrreducibilityVerdict is_irreducible(const MonicIntPoly& f,
                                     const IrredOptions& options) {
    options.limits.validate();
    const int n = f.degree();
    if (n == 1)
        return irreducible_with("degree 1");
    if (f[0] == 0)
        return reducible_with(IntPoly({0, 1}), "zero constant term");
    if (auto linear = rational_root_factor(f, options.limits))
        return reducible_with(std::move(*linear), "rational root");
    if (n <= 3)
        return irreducible_with("no rational root at degree <= 3");

    if (options.use_eisenstein)
        if (auto p = eisenstein_test(f, options.limits))
            return irreducible_with("eisenstein at " + p->get_str());

    const mpz_class disc = discriminant(f);
    if (disc == 0)
        return reducible_with(rational_gcd_monic(f.poly(), f.poly().derivative()),
                              "repeated factor (zero discriminant)");

    if (options.use_degree_patterns && n < 64) {
        const std::uint64_t middle = (std::uint64_t{1} << n) - 2;
        std::uint64_t possible = ~std::uint64_t{0};
        int used = 0;
        std::string primes;
        for (std::size_t i = 0; used < options.pattern_primes; ++i) {
            if (i >= small_primes().size())
                break;
            const long p = static_cast<long>(small_primes()[i]);
            if (p <= n || mpz_divisible_ui_p(disc.get_mpz_t(),
                                             static_cast<unsigned long>(p)))
                continue;
            possible &= degree_pattern_mask(f, p);
            ++used;
            primes += (primes.empty() ? "" : ",") + std::to_string(p);
            if ((possible & middle) == 0)
                return irreducible_with("factor degree patterns mod " + primes);
        }
    }

    if (!options.use_fallback)
        return {IrredStatus::inconclusive_escalated, std::nullopt,
                "degree patterns inconclusive and exact fallback disabled"};

    mpz_class max_abs = 0;
    for (int i = 0; i < n; ++i)
        max_abs = std::max(max_abs, mpz_class(abs(f[i])));
    mpz_class sqrt_n_ceil;
    mpz_sqrt(sqrt_n_ceil.get_mpz_t(), mpz_class(n).get_mpz_t());
    if (sqrt_n_ceil * sqrt_n_ceil < n)
        ++sqrt_n_ceil;
    const mpz_class mignotte = (mpz_class(1) << n) * (1 + max_abs * sqrt_n_ceil);

    long long nodes_left = options.fallback_node_budget;
    for (int d = 2; 2 * d <= n; ++d)
        if (auto g = divisor_search(f, d, mignotte, nodes_left, options.limits))
            return reducible_with(std::move(*g), "divisor found at degree " +
                                                    std::to_string(d));
    return irreducible_with("no monic divisor of degree <= n/2 in the Mignotte box");
}

IrreducibleCount count_irreducible(int n, long height, int workers,
                                   long long budget) {
    if (n < 1)
        throw std::invalid_argument("count_irreducible: degree must be >= 1");
    if (height < 1)
        throw std::invalid_argument("count_irreducible: height must be >= 1");
    if (workers < 1)
        throw std::invalid_argument("count_irreducible: workers must be >= 1");
    const long side = 2 * height - 1;
    long long total = 1;
    for (int j = 0; j < n; ++j) {
        if (total > budget / side)
            throw budget_error("count_irreducible box exceeds the budget");
        total *= side;
    }

    auto count_range = [&](long long begin, long long end, long long& out) {
        const IrredOptions options{};
        std::vector<mpz_class> low(n);
        long long local = 0;
        for (long long idx = begin; idx < end; ++idx) {
            long long rest = idx;
            for (int j = 0; j < n; ++j) {
                low[j] = static_cast<long>(rest % side) - (height - 1);
                rest /= side;
            }
            MonicIntPoly f(n, low);
            if (is_irreducible(f, options).status == IrredStatus::irreducible)
                ++local;
        }
        out = local;
    };

    std::vector<long long> partial(workers, 0);
    if (workers == 1) {
        count_range(0, total, partial[0]);
    } else {
        std::vector<std::thread> pool;
        const long long chunk = (total + workers - 1) / workers;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back(count_range, std::min<long long>(w * chunk, total),
                              std::min<long long>((w + 1) * chunk, total),
                              std::ref(partial[w]));
        for (auto& t : pool)
            t.join();
    }

    IrreducibleCount out;
    out.box_points = total;
    for (long long c : partial)
        out.irreducible += c;
    out.ratio_strict = static_cast<double>(out.irreducible) /
                       static_cast<double>(total);
    double main_term = 1.0;
    for (int j = 0; j < n; ++j)
        main_term *= 2.0 * static_cast<double>(height);
    out.ratio_main_term = static_cast<double>(out.irreducible) / main_term;
    return out;
}

} // namespace disccensus
