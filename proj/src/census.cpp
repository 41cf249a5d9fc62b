#include "disccensus/census.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <exception>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>

#include "disccensus/fielddisc.hpp"
#include "disccensus/irreducible.hpp"

namespace disccensus {

namespace {

bool divisible(const mpz_class& a, const mpz_class& b) {
    return mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()) != 0;
}

long long first_member(const CoeffRange& r) {
    long res = r.res % r.mod;
    if (res < 0)
        res += r.mod;
    long long shift = ((res - static_cast<long long>(r.lo)) % r.mod + r.mod) % r.mod;
    return static_cast<long long>(r.lo) + shift;
}

struct BoxGrid {
    int n = 0;
    std::vector<std::vector<long>> values; // values[j] for the coefficient of X^j
    long long volume = 0;
};

BoxGrid make_grid(const HeightBox& box, long long budget, const std::string& op) {
    if (box.n < 2)
        throw std::invalid_argument(op + ": box degree must be >= 2");
    if (static_cast<int>(box.ranges.size()) != box.n)
        throw std::invalid_argument(op + ": box needs one range per coefficient");
    if (budget < 1)
        throw std::invalid_argument(op + ": budget must be >= 1");
    BoxGrid grid;
    grid.n = box.n;
    unsigned __int128 vol = 1;
    for (const CoeffRange& r : box.ranges) {
        grid.values.push_back(r.values());
        vol *= grid.values.back().size();
        if (vol > static_cast<unsigned __int128>(budget))
            throw budget_error(op + ": box volume exceeds budget");
    }
    grid.volume = static_cast<long long>(vol);
    return grid;
}

void decode(const BoxGrid& grid, long long idx, std::vector<long>& low) {
    long long rest = idx;
    for (int j = 0; j < grid.n; ++j) {
        const auto size = static_cast<long long>(grid.values[j].size());
        low[j] = grid.values[j][rest % size];
        rest /= size;
    }
}

bool trinomial_shape(const std::vector<long>& low) {
    for (std::size_t j = 2; j < low.size(); ++j)
        if (low[j] != 0)
            return false;
    return true;
}

mpz_class box_disc(int n, const std::vector<long>& low) {
    if (trinomial_shape(low))
        return trinomial_disc(n, mpz_class(low[1]), mpz_class(low[0]));
    std::vector<mpz_class> coeffs(low.begin(), low.end());
    return discriminant(MonicIntPoly(n, std::move(coeffs)));
}

bool passes_irreducible(const MonicIntPoly& f) {
    const IrredStatus status = is_irreducible(f).status;
    if (status == IrredStatus::inconclusive_escalated)
        throw std::logic_error("census: irreducibility route escalated");
    return status == IrredStatus::irreducible;
}

mpz_class key_value(CensusKey key, const mpz_class& disc) {
    if (key == CensusKey::disc_value)
        return disc;
    mpz_class u = squarefree_part(disc).u;
    if (key == CensusKey::squarefree_absolute)
        return abs(u);
    return u;
}

// Splits [0, total) into one chunk per worker; rethrows the first worker error.
template <typename Tally, typename Body>
std::vector<Tally> run_chunks(long long total, int workers, const Body& body) {
    if (workers < 1)
        throw std::invalid_argument("census: worker count must be >= 1");
    std::vector<Tally> partial(workers);
    if (workers == 1 || total < workers) {
        body(0, total, partial[0]);
        return partial;
    }
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
    return partial;
}

std::vector<mpz_class> positive_divisors(const mpz_class& k) {
    Factorization fac = factorize(k);
    std::vector<mpz_class> divs{1};
    for (const auto& [p, e] : fac.factors) {
        const std::size_t base = divs.size();
        mpz_class pw = 1;
        for (int i = 0; i < e; ++i) {
            pw *= p;
            for (std::size_t t = 0; t < base; ++t)
                divs.push_back(divs[t] * pw);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

// s M = k^2: multiply by s and factor (sr - kc)(sr + kc) = s * rhs.
long long pell_divisor_route(const mpz_class& s, const mpz_class& k,
                             const mpz_class& rhs, long bound) {
    const mpz_class N = s * rhs;
    std::set<std::pair<mpz_class, mpz_class>> seen;
    for (const mpz_class& d0 : positive_divisors(abs(N)))
        for (int sign : {1, -1}) {
            const mpz_class d = sign * d0;
            const mpz_class e = N / d;
            mpz_class sum = d + e;
            if (mpz_odd_p(sum.get_mpz_t()))
                continue;
            const mpz_class x = sum / 2;
            const mpz_class y = (e - d) / 2;
            if (!divisible(x, s) || !divisible(y, k))
                continue;
            mpz_class r = x / s;
            mpz_class c = y / k;
            if (abs(r) > bound || abs(c) > bound)
                continue;
            seen.emplace(std::move(r), std::move(c));
        }
    return static_cast<long long>(seen.size());
}

// -s M = k^2 (s < 0): the form is definite, (|s|r)^2 + (kc)^2 = s * rhs.
long long pell_definite_route(const mpz_class& s, const mpz_class& k,
                              const mpz_class& rhs, long bound) {
    const mpz_class N = s * rhs;
    if (N < 0)
        return 0;
    const mpz_class as = abs(s);
    long long count = 0;
    for (mpz_class c = 0; c <= bound; ++c) {
        mpz_class y2 = k * k * c * c;
        if (y2 > N)
            break;
        mpz_class x2 = N - y2;
        mpz_class x;
        if (!is_perfect_square(x2, x))
            continue;
        if (!divisible(x, as))
            continue;
        mpz_class r = x / as;
        if (r > bound)
            continue;
        count += (r == 0 ? 1 : 2) * (c == 0 ? 1 : 2);
    }
    return count;
}

} // namespace

long long CoeffRange::count() const {
    if (mod < 1)
        throw std::invalid_argument("CoeffRange: modulus must be >= 1");
    const long long first = first_member(*this);
    if (first > hi)
        return 0;
    return (hi - first) / mod + 1;
}

std::vector<long> CoeffRange::values() const {
    if (mod < 1)
        throw std::invalid_argument("CoeffRange: modulus must be >= 1");
    std::vector<long> out;
    for (long long v = first_member(*this); v <= hi; v += mod)
        out.push_back(static_cast<long>(v));
    return out;
}

HeightBox HeightBox::strict(int n, long height) {
    if (n < 1)
        throw std::invalid_argument("HeightBox: degree must be >= 1");
    if (height < 1)
        throw std::invalid_argument("HeightBox: height must be >= 1");
    HeightBox box;
    box.n = n;
    box.ranges.assign(n, CoeffRange{-(height - 1), height - 1, 1, 0});
    return box;
}

HeightBox HeightBox::closed(int n, std::vector<std::pair<long, long>> bounds) {
    if (n < 1)
        throw std::invalid_argument("HeightBox: degree must be >= 1");
    if (static_cast<int>(bounds.size()) != n)
        throw std::invalid_argument("HeightBox: need one bound pair per coefficient");
    HeightBox box;
    box.n = n;
    for (const auto& [lo, hi] : bounds)
        box.ranges.push_back(CoeffRange{lo, hi, 1, 0});
    return box;
}

long long HeightBox::volume() const {
    unsigned __int128 vol = 1;
    for (const CoeffRange& r : ranges) {
        vol *= static_cast<unsigned long long>(r.count());
        if (vol > static_cast<unsigned __int128>(std::numeric_limits<long long>::max()))
            throw std::overflow_error("HeightBox: volume overflow");
    }
    return static_cast<long long>(vol);
}

HeightBox eisenstein_trinomial_box(int n, long height) {
    if (n < 3)
        throw std::invalid_argument("eisenstein_trinomial_box: need n >= 3");
    if (height < 6L * n)
        throw std::invalid_argument("eisenstein_trinomial_box: height below 6n leaves the family empty");
    HeightBox box;
    box.n = n;
    box.ranges.assign(n, CoeffRange{0, 0, 1, 0});
    box.ranges[0] = CoeffRange{-(height / (3L * n)), -1, 4, 2};
    box.ranges[1] = CoeffRange{(height + 1) / 2, height, 2, 0};
    return box;
}

CountTable count_by_squarefree_class(const HeightBox& box, CensusKey key,
                                     int workers, long long budget) {
    const BoxGrid grid = make_grid(box, budget, "count_by_squarefree_class");
    struct Tally {
        std::map<mpz_class, long long> counts;
        long long total = 0;
    };
    auto body = [&](long long begin, long long end, Tally& out) {
        std::vector<long> low(grid.n);
        for (long long idx = begin; idx < end; ++idx) {
            decode(grid, idx, low);
            std::vector<mpz_class> coeffs(low.begin(), low.end());
            if (!passes_irreducible(MonicIntPoly(grid.n, std::move(coeffs))))
                continue;
            ++out.counts[key_value(key, box_disc(grid.n, low))];
            ++out.total;
        }
    };
    CountTable table;
    table.key = key;
    table.n = grid.n;
    for (const Tally& t : run_chunks<Tally>(grid.volume, workers, body)) {
        table.total += t.total;
        for (const auto& [k, v] : t.counts)
            table.counts[k] += v;
    }
    return table;
}

bool square_condition_fails(int n, const mpz_class& u) {
    if (n < 2)
        throw std::invalid_argument("square_condition_fails: need n >= 2");
    if (u == 0)
        throw std::invalid_argument("square_condition_fails: u must be nonzero");
    const mpz_class au = abs(u);
    mpz_class pw;
    mpz_class base = n - 1;
    mpz_pow_ui(pw.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(n - 1));
    if (is_perfect_square(au * pw))
        return true;
    base = n;
    mpz_pow_ui(pw.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(n));
    return is_perfect_square(au * pw);
}

MaxClass max_class_multiplicity(int n, long height, int workers, long long budget) {
    const CountTable table = count_by_squarefree_class(
        HeightBox::strict(n, height), CensusKey::squarefree_signed, workers, budget);
    if (table.counts.empty())
        throw std::invalid_argument("max_class_multiplicity: no irreducible polynomials in the box");
    MaxClass out;
    for (const auto& [u, c] : table.counts)
        if (c > out.count) {
            out.u = u;
            out.count = c;
        }
    out.condition_fails = square_condition_fails(n, out.u);
    return out;
}

SmallDiscMass small_disc_mass(int n, long height, const mpz_class& bound,
                              int workers, long long budget) {
    if (bound < 0)
        throw std::invalid_argument("small_disc_mass: bound must be >= 0");
    const BoxGrid grid = make_grid(HeightBox::strict(n, height), budget, "small_disc_mass");
    auto body = [&](long long begin, long long end, SmallDiscMass& out) {
        std::vector<long> low(grid.n);
        for (long long idx = begin; idx < end; ++idx) {
            decode(grid, idx, low);
            std::vector<mpz_class> coeffs(low.begin(), low.end());
            MonicIntPoly f(grid.n, std::move(coeffs));
            if (!passes_irreducible(f))
                continue;
            const DedekindReport report = field_disc(f);
            if (report.certified_field_disc) {
                if (abs(*report.certified_field_disc) <= bound)
                    ++out.certified;
            } else if (abs(report.sf_part_of_field_disc.u) <= bound) {
                ++out.unresolved;
            }
        }
    };
    SmallDiscMass mass;
    for (const SmallDiscMass& t : run_chunks<SmallDiscMass>(grid.volume, workers, body)) {
        mass.certified += t.certified;
        mass.unresolved += t.unresolved;
    }
    return mass;
}

long long distinct_disc_count(const HeightBox& box, CensusKey key,
                              int workers, long long budget) {
    const BoxGrid grid = make_grid(box, budget, "distinct_disc_count");
    using Tally = std::set<mpz_class>;
    auto body = [&](long long begin, long long end, Tally& out) {
        std::vector<long> low(grid.n);
        for (long long idx = begin; idx < end; ++idx) {
            decode(grid, idx, low);
            std::vector<mpz_class> coeffs(low.begin(), low.end());
            if (!passes_irreducible(MonicIntPoly(grid.n, std::move(coeffs))))
                continue;
            out.insert(key_value(key, box_disc(grid.n, low)));
        }
    };
    Tally merged;
    for (Tally& t : run_chunks<Tally>(grid.volume, workers, body))
        merged.merge(t);
    return static_cast<long long>(merged.size());
}

TrinomialCount trinomial_count(int n, long A, long B, long C, long D,
                               const mpz_class& s, long long budget) {
    if (n < 2)
        throw std::invalid_argument("trinomial_count: need n >= 2");
    if (A < 0 || B < 0)
        throw std::invalid_argument("trinomial_count: box extents must be >= 0");
    if (s == 0)
        throw std::invalid_argument("trinomial_count: s must be nonzero");
    if (squarefree_part(s).v != 1)
        throw std::invalid_argument("trinomial_count: s must be square-free");
    const long long pairs = (static_cast<long long>(A) + 1) * (static_cast<long long>(B) + 1);
    if (pairs > budget)
        throw budget_error("trinomial_count: box exceeds budget");
    TrinomialCount out;
    const long long a_end = static_cast<long long>(C) + A;
    const long long b_end = static_cast<long long>(D) + B;
    for (long long a = C; a <= a_end; ++a) {
        long long hits = 0;
        for (long long b = D; b <= b_end; ++b) {
            const mpz_class delta = delta_n(n, mpz_class(static_cast<long>(a)),
                                            mpz_class(static_cast<long>(b)));
            if (!divisible(delta, s))
                continue;
            const mpz_class q = delta / s;
            if (q <= 0 || !is_perfect_square(q))
                continue;
            ++hits;
        }
        if (hits > 0) {
            out.per_a[static_cast<long>(a)] = hits;
            out.total += hits;
            out.per_a_max = std::max(out.per_a_max, hits);
        }
    }
    return out;
}

PellCount pell_count(const mpz_class& s, const mpz_class& M,
                     const mpz_class& rhs, long bound, long long budget) {
    if (s == 0)
        throw std::invalid_argument("pell_count: s must be nonzero");
    if (M <= 0)
        throw std::invalid_argument("pell_count: M must be positive");
    if (rhs == 0)
        throw std::invalid_argument("pell_count: rhs must be nonzero");
    if (bound < 0)
        throw std::invalid_argument("pell_count: bound must be >= 0");
    if (static_cast<long long>(bound) + 1 > budget)
        throw budget_error("pell_count: bound exceeds budget");

    PellCount out;
    for (long c = 0; c <= bound; ++c) {
        const mpz_class cc(c);
        const mpz_class t = rhs + M * cc * cc;
        if (!divisible(t, s))
            continue;
        const mpz_class q = t / s;
        if (q < 0)
            continue;
        mpz_class r;
        if (!is_perfect_square(q, r))
            continue;
        if (r > bound)
            continue;
        out.count += (r == 0 ? 1 : 2) * (c == 0 ? 1 : 2);
    }

    const mpz_class sm = s * M;
    mpz_class k;
    if (is_perfect_square(sm, k))
        out.cross_check = pell_divisor_route(s, k, rhs, bound);
    else if (is_perfect_square(mpz_class(-sm), k))
        out.cross_check = pell_definite_route(s, k, rhs, bound);
    if (out.cross_check && *out.cross_check != out.count)
        throw std::logic_error("pell_count: routes disagree");
    return out;
}

QuadraticFieldCount quadratic_field_count(int n, long A, long B, long C, long D,
                                          long long budget) {
    if (n < 2)
        throw std::invalid_argument("quadratic_field_count: need n >= 2");
    if (A < 0 || B < 0)
        throw std::invalid_argument("quadratic_field_count: box extents must be >= 0");
    const long long pairs = (static_cast<long long>(A) + 1) * (static_cast<long long>(B) + 1);
    if (pairs > budget)
        throw budget_error("quadratic_field_count: box exceeds budget");
    std::set<mpz_class> fields;
    QuadraticFieldCount out;
    const long long a_end = static_cast<long long>(C) + A;
    const long long b_end = static_cast<long long>(D) + B;
    for (long long a = C; a <= a_end; ++a)
        for (long long b = D; b <= b_end; ++b) {
            std::vector<mpz_class> low(n);
            low[0] = static_cast<long>(b);
            low[1] = static_cast<long>(a);
            if (!passes_irreducible(MonicIntPoly(n, std::move(low))))
                continue;
            const mpz_class disc = trinomial_disc(n, mpz_class(static_cast<long>(a)),
                                                  mpz_class(static_cast<long>(b)));
            const mpz_class u = squarefree_part(disc).u;
            if (u == 1)
                ++out.rational_pairs;
            else
                fields.insert(u);
        }
    out.distinct_fields = static_cast<long long>(fields.size());
    return out;
}

QuadraticFieldCount quadratic_field_count_delta(int n, const mpz_class& bound,
                                                long long budget) {
    if (n < 2)
        throw std::invalid_argument("quadratic_field_count_delta: need n >= 2");
    if (bound < 0)
        throw std::invalid_argument("quadratic_field_count_delta: bound must be >= 0");
    std::set<mpz_class> fields;
    QuadraticFieldCount out;
    long long examined = 0;
    for (long long a = 1;; ++a) {
        if (delta_n(n, mpz_class(static_cast<long>(a)), 1) > bound)
            break;
        for (long long b = 1;; ++b) {
            const mpz_class bz(static_cast<long>(b));
            const mpz_class az(static_cast<long>(a));
            if (delta_n(n, az, bz) > bound)
                break;
            if (++examined > budget)
                throw budget_error("quadratic_field_count_delta: budget exceeded");
            std::vector<mpz_class> low(n);
            low[0] = bz;
            low[1] = az;
            if (!passes_irreducible(MonicIntPoly(n, std::move(low))))
                continue;
            const mpz_class u = squarefree_part(trinomial_disc(n, az, bz)).u;
            if (u == 1)
                ++out.rational_pairs;
            else
                fields.insert(u);
        }
    }
    out.distinct_fields = static_cast<long long>(fields.size());
    return out;
}

long long lemma_l3_solution_count(const LineCountParams& params) {
    const int n = params.n;
    if (n < 2)
        throw std::invalid_argument("lemma_l3_solution_count: need n >= 2");
    if (static_cast<int>(params.upper.size()) != n - 2)
        throw std::invalid_argument("lemma_l3_solution_count: upper must hold a_2..a_{n-1}");
    if (params.u == 0 || squarefree_part(params.u).v != 1)
        throw std::invalid_argument("lemma_l3_solution_count: u must be a square-free nonzero integer");
    if (params.d0 == 0 && params.d1 == 0)
        throw std::invalid_argument("lemma_l3_solution_count: line must involve a_0 or a_1");
    if (params.height < 1)
        throw std::invalid_argument("lemma_l3_solution_count: height must be >= 1");
    if (!(params.z_exponent > 0))
        throw std::invalid_argument("lemma_l3_solution_count: z exponent must be positive");

    const double zd = std::floor(std::pow(static_cast<double>(params.height), params.z_exponent));
    if (!std::isfinite(zd) || zd > 9e18)
        throw std::invalid_argument("lemma_l3_solution_count: z bound overflows");
    const mpz_class zmax(static_cast<long>(zd));

    const long H = params.height;
    std::vector<std::pair<long, long>> points;
    if (params.d1 != 0) {
        for (long a0 = -H; a0 <= H; ++a0) {
            const mpz_class num = -(params.d2 + params.d0 * a0);
            if (!divisible(num, params.d1))
                continue;
            const mpz_class a1 = num / params.d1;
            if (abs(a1) > H)
                continue;
            points.emplace_back(a0, static_cast<long>(a1.get_si()));
        }
    } else {
        const mpz_class num = -params.d2;
        if (divisible(num, params.d0)) {
            const mpz_class a0 = num / params.d0;
            if (abs(a0) <= H) {
                const long a0l = static_cast<long>(a0.get_si());
                for (long a1 = -H; a1 <= H; ++a1)
                    points.emplace_back(a0l, a1);
            }
        }
    }

    bool tri = true;
    for (const mpz_class& c : params.upper)
        if (c != 0)
            tri = false;

    long long count = 0;
    for (const auto& [a0, a1] : points) {
        mpz_class disc;
        if (tri) {
            disc = trinomial_disc(n, mpz_class(a1), mpz_class(a0));
        } else {
            std::vector<mpz_class> low(n);
            low[0] = a0;
            low[1] = a1;
            for (int j = 2; j < n; ++j)
                low[j] = params.upper[j - 2];
            disc = discriminant(MonicIntPoly(n, std::move(low)));
        }
        const mpz_class target = params.u * disc;
        if (target < 0)
            continue;
        mpz_class z;
        if (!is_perfect_square(target, z))
            continue;
        if (z > zmax)
            continue;
        count += (z == 0 ? 1 : 2);
    }
    return count;
}

} // namespace disccensus
