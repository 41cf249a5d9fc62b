#include "disccensus/fielddisc.hpp"

#include "disccensus/ffpoly.hpp"
#include "disccensus/irreducible.hpp"

#include <algorithm>
#include <thread>

namespace disccensus {

namespace {

std::vector<long> reduce_full(const MonicIntPoly& f, long p) {
    std::vector<long> v(f.degree() + 1);
    for (int i = 0; i < f.degree(); ++i)
        v[i] = static_cast<long>(
            mpz_fdiv_ui(f[i].get_mpz_t(), static_cast<unsigned long>(p)));
    v[f.degree()] = 1;
    return v;
}

IntPoly lift(const std::vector<long>& v) {
    std::vector<mpz_class> c(v.begin(), v.end());
    return IntPoly(std::move(c));
}

// Dedekind: with fbar = g * h, g the radical, the order is p-maximal iff
// gcd((lift(g) lift(h) - f)/p mod p, gcd(g, h)) is constant.
PMaximality dedekind_core(const MonicIntPoly& f, long p) {
    const std::vector<long> fbar = reduce_full(f, p);
    const std::vector<long> g = fp_radical(p, fbar);
    const std::vector<long> h = fp_quotient(p, fbar, g);
    const std::vector<long> repeated = fp_gcd(p, g, h);
    if (repeated.size() <= 1)
        return PMaximality::maximal;

    IntPoly t = lift(g) * lift(h) - f.poly();
    std::vector<long> tbar(t.degree() + 1, 0);
    mpz_class q;
    for (int i = 0; i <= t.degree(); ++i) {
        if (!mpz_divisible_ui_p(t[i].get_mpz_t(), static_cast<unsigned long>(p)))
            throw std::logic_error("dedekind: g*h does not reduce to f");
        mpz_divexact_ui(q.get_mpz_t(), t[i].get_mpz_t(),
                        static_cast<unsigned long>(p));
        tbar[i] = static_cast<long>(
            mpz_fdiv_ui(q.get_mpz_t(), static_cast<unsigned long>(p)));
    }
    const std::vector<long> obstruction = fp_gcd(p, tbar, repeated);
    return obstruction.size() <= 1 ? PMaximality::maximal
                                   : PMaximality::not_maximal;
}

long prime_as_long(const mpz_class& p) {
    if (!is_probable_prime(p))
        throw std::invalid_argument("dedekind_p_maximal: p must be prime");
    if (!p.fits_slong_p())
        throw std::invalid_argument("dedekind_p_maximal: prime too large");
    return p.get_si();
}

void require_irreducible(const MonicIntPoly& f) {
    if (is_irreducible(f).status != IrredStatus::irreducible)
        throw std::invalid_argument("field discriminant requires an irreducible polynomial");
}

DedekindReport build_report(const MonicIntPoly& f, mpz_class disc,
                            const Factorization& fac) {
    DedekindReport report{f, std::move(disc), {}, std::nullopt, {1, 1}};
    report.sf_part_of_field_disc.u = fac.sign;
    for (const auto& [p, e] : fac.factors) {
        if (e % 2 == 1)
            report.sf_part_of_field_disc.u *= p;
        for (int i = 0; i < e / 2; ++i)
            report.sf_part_of_field_disc.v *= p;
        if (e >= 2)
            report.tested_primes.emplace_back(
                p, dedekind_core(f, prime_as_long(p)));
    }
    const bool all_maximal =
        std::all_of(report.tested_primes.begin(), report.tested_primes.end(),
                    [](const auto& pv) { return pv.second == PMaximality::maximal; });
    if (all_maximal)
        report.certified_field_disc = report.disc;
    return report;
}

} // namespace

PMaximality dedekind_p_maximal(const MonicIntPoly& f, const mpz_class& p) {
    const long pl = prime_as_long(p);
    require_irreducible(f);
    return dedekind_core(f, pl);
}

DedekindReport field_disc(const MonicIntPoly& f,
                          const FactorizationLimits& limits) {
    require_irreducible(f);
    if (f.degree() == 1)
        return DedekindReport{f, 1, {}, mpz_class(1), {1, 1}};
    const mpz_class disc = discriminant(f);
    return build_report(f, disc, factorize(disc, limits));
}

MonogenicDensity monogenic_density(int n, long height, int workers) {
    if (n < 2)
        throw std::invalid_argument("monogenic_density: degree must be >= 2");
    if (height < 1)
        throw std::invalid_argument("monogenic_density: height must be >= 1");
    if (workers < 1)
        throw std::invalid_argument("monogenic_density: workers must be >= 1");
    const long side = 2 * height - 1;
    long long total = 1;
    for (int j = 0; j < n; ++j)
        total *= side;

    struct Tally {
        long long certified = 0;
        long long irreducible = 0;
    };
    auto count_range = [&](long long begin, long long end, Tally& out) {
        const FactorizationLimits limits{};
        std::vector<mpz_class> low(n);
        Tally local;
        for (long long idx = begin; idx < end; ++idx) {
            long long rest = idx;
            for (int j = 0; j < n; ++j) {
                low[j] = static_cast<long>(rest % side) - (height - 1);
                rest /= side;
            }
            MonicIntPoly f(n, low);
            if (is_irreducible(f).status != IrredStatus::irreducible)
                continue;
            ++local.irreducible;
            const mpz_class disc = discriminant(f);
            bool maximal = true;
            for (const auto& [p, e] : factorize(disc, limits).factors)
                if (e >= 2 && dedekind_core(f, prime_as_long(p)) ==
                                  PMaximality::not_maximal) {
                    maximal = false;
                    break;
                }
            if (maximal)
                ++local.certified;
        }
        out = local;
    };

    std::vector<Tally> partial(workers);
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

    MonogenicDensity out;
    out.box_points = total;
    for (const Tally& t : partial) {
        out.certified += t.certified;
        out.irreducible += t.irreducible;
    }
    if (out.irreducible == 0)
        throw std::invalid_argument("monogenic_density: empty sample");
    out.density = static_cast<double>(out.certified) /
                  static_cast<double>(out.irreducible);
    out.density_box = static_cast<double>(out.certified) /
                      static_cast<double>(total);
    return out;
}

} // namespace disccensus
