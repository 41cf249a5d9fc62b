#include "disccensus/ffpoly.hpp"

#include "disccensus/int_arith.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <thread>

namespace disccensus {

namespace {

using FpVec = std::vector<long>; // constant-first, trimmed, entries in [0, p)

long norm_mod(long a, long p) {
    a %= p;
    if (a < 0)
        a += p;
    return a;
}

long mulmod(long a, long b, long p) {
    return static_cast<long>(static_cast<long long>(a) * b % p);
}

long powmod(long b, long e, long p) {
    long r = 1 % p;
    b = norm_mod(b, p);
    while (e > 0) {
        if (e & 1)
            r = mulmod(r, b, p);
        b = mulmod(b, b, p);
        e >>= 1;
    }
    return r;
}

long invmod(long a, long p) { return powmod(a, p - 2, p); }

void trim(FpVec& v) {
    while (!v.empty() && v.back() == 0)
        v.pop_back();
}

int fdeg(const FpVec& v) { return static_cast<int>(v.size()) - 1; }

FpVec fp_derivative(const FpVec& f, long p) {
    FpVec d;
    for (std::size_t i = 1; i < f.size(); ++i)
        d.push_back(mulmod(f[i], static_cast<long>(i % p), p));
    trim(d);
    return d;
}

FpVec fp_mul(const FpVec& a, const FpVec& b, long p) {
    if (a.empty() || b.empty())
        return {};
    FpVec c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = static_cast<long>((c[i + j] +
                                          static_cast<long long>(a[i]) * b[j]) % p);
    trim(c);
    return c;
}

// Remainder and optional quotient of a by b.
FpVec fp_divmod(FpVec a, const FpVec& b, long p, FpVec* quotient = nullptr) {
    if (b.empty())
        throw std::invalid_argument("fp_divmod: division by zero polynomial");
    const int db = fdeg(b);
    const long inv_lead = invmod(b.back(), p);
    if (quotient)
        quotient->assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
    while (fdeg(a) >= db) {
        const int shift = fdeg(a) - db;
        const long c = mulmod(a.back(), inv_lead, p);
        if (quotient)
            (*quotient)[shift] = c;
        for (int i = 0; i <= db; ++i)
            a[shift + i] = norm_mod(a[shift + i] - mulmod(c, b[i], p), p);
        trim(a);
    }
    if (quotient)
        trim(*quotient);
    return a;
}

FpVec fp_divexact(const FpVec& a, const FpVec& b, long p) {
    FpVec q;
    FpVec r = fp_divmod(a, b, p, &q);
    if (!r.empty())
        throw std::logic_error("fp_divexact: division left a remainder");
    return q;
}

void fp_monicize(FpVec& f, long p) {
    if (f.empty() || f.back() == 1)
        return;
    const long inv = invmod(f.back(), p);
    for (auto& c : f)
        c = mulmod(c, inv, p);
}

FpVec fp_gcd(FpVec a, FpVec b, long p) {
    while (!b.empty()) {
        FpVec r = fp_divmod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    fp_monicize(a, p);
    return a;
}

FpVec fp_poly_powmod(FpVec base, long e, const FpVec& mod, long p) {
    FpVec r{1};
    base = fp_divmod(std::move(base), mod, p);
    while (e > 0) {
        if (e & 1)
            r = fp_divmod(fp_mul(r, base, p), mod, p);
        base = fp_divmod(fp_mul(base, base, p), mod, p);
        e >>= 1;
    }
    return r;
}

// Square-free part of a monic polynomial over F_p.
FpVec fp_radical(FpVec f, long p) {
    if (fdeg(f) <= 0)
        return {1};
    FpVec d = fp_derivative(f, p);
    if (d.empty()) {
        // f lies in F_p[X^p], so it is a p-th power.
        FpVec root((f.size() - 1) / p + 1);
        for (std::size_t i = 0; i < root.size(); ++i)
            root[i] = f[i * p];
        return fp_radical(std::move(root), p);
    }
    FpVec g = fp_gcd(f, d, p);
    if (fdeg(g) == 0)
        return f;
    FpVec w = fp_divexact(f, g, p);
    FpVec rg = fp_radical(std::move(g), p);
    FpVec shared = fp_gcd(w, rg, p);
    return fp_divexact(fp_mul(w, rg, p), shared, p);
}

// Degrees of the distinct irreducible factors of a monic square-free
// polynomial, ascending, one entry per factor.
std::vector<int> fp_ddf_degrees(FpVec g, long p) {
    std::vector<int> out;
    if (fdeg(g) <= 0)
        return out;
    FpVec x{0, 1};
    FpVec cur = fp_divmod(x, g, p);
    int d = 0;
    while (2 * (d + 1) <= fdeg(g)) {
        ++d;
        cur = fp_poly_powmod(std::move(cur), p, g, p);
        FpVec diff = cur;
        if (diff.size() < 2)
            diff.resize(2, 0);
        diff[1] = norm_mod(diff[1] - 1, p);
        trim(diff);
        FpVec common = fp_gcd(diff, g, p);
        if (fdeg(common) > 0) {
            out.insert(out.end(), fdeg(common) / d, d);
            g = fp_divexact(g, common, p);
            cur = fp_divmod(std::move(cur), g, p);
        }
    }
    if (fdeg(g) > 0)
        out.push_back(fdeg(g));
    return out;
}

int fp_ddf_count(FpVec g, long p) {
    return static_cast<int>(fp_ddf_degrees(std::move(g), p).size());
}

long fp_resultant_vec(FpVec a, FpVec b, long p) {
    if (a.empty() || b.empty())
        return 0;
    long res = 1 % p;
    while (fdeg(b) > 0) {
        FpVec r = fp_divmod(a, b, p);
        if (r.empty())
            return 0;
        long scale = powmod(b.back(), fdeg(a) - fdeg(r), p);
        res = mulmod(res, scale, p);
        if ((static_cast<long long>(fdeg(a)) * fdeg(b)) % 2 == 1)
            res = norm_mod(-res, p);
        a = std::move(b);
        b = std::move(r);
    }
    res = mulmod(res, powmod(b[0], fdeg(a), p), p);
    return res;
}

void require_odd_prime(long p) {
    if (p < 3 || p % 2 == 0 || !is_probable_prime(mpz_class(p)))
        throw std::invalid_argument("modulus must be an odd prime");
}

void require_prime(long p) {
    if (p < 2 || !is_probable_prime(mpz_class(p)))
        throw std::invalid_argument("modulus must be prime");
}

bool pow_within(long base, int exp, long long limit, long long& out) {
    out = 1;
    for (int i = 0; i < exp; ++i) {
        if (out > limit / base)
            return false;
        out *= base;
    }
    return true;
}

FpVec full_vec(const FpPoly& f) {
    FpVec v = f.low;
    v.push_back(1);
    return v;
}

int disc_sign(int n) {
    return (static_cast<long>(n) * (n - 1) / 2) % 2 == 0 ? 1 : -1;
}

void check_lambda(const LambdaVector& lambda, long modulus, int n) {
    if (lambda.modulus != modulus)
        throw std::invalid_argument("lambda modulus mismatch");
    if (static_cast<int>(lambda.values.size()) != n)
        throw std::invalid_argument("lambda length must equal the degree");
    for (long v : lambda.values)
        if (v < 0 || v >= modulus)
            throw std::invalid_argument("lambda entries must lie in [0, modulus)");
}

} // namespace

FpPoly::FpPoly(long p_in, int n_in, std::vector<long> low_coeffs)
    : p(p_in), n(n_in), low(std::move(low_coeffs)) {
    require_prime(p);
    if (n < 1)
        throw std::invalid_argument("FpPoly degree must be >= 1");
    if (static_cast<int>(low.size()) != n)
        throw std::invalid_argument("FpPoly expects exactly n low coefficients");
    for (auto& c : low)
        c = norm_mod(c, p);
}

FpPoly FpPoly::from_int_poly(const MonicIntPoly& f, long p) {
    std::vector<long> low(f.degree());
    for (int i = 0; i < f.degree(); ++i)
        low[i] = static_cast<long>(mpz_fdiv_ui(f[i].get_mpz_t(),
                                               static_cast<unsigned long>(p)));
    return FpPoly(p, f.degree(), std::move(low));
}

ExpSum::ExpSum(long m) : modulus(m) {
    if (m < 1)
        throw std::invalid_argument("ExpSum modulus must be positive");
    counts.assign(m, 0);
}

void ExpSum::add(long residue, long long amount) {
    counts[norm_mod(residue, modulus)] += amount;
}

bool ExpSum::is_zero() const {
    std::vector<mpz_class> c(counts.size());
    for (std::size_t i = 0; i < counts.size(); ++i)
        c[i] = static_cast<long>(counts[i]);
    IntPoly f(std::move(c));
    if (f.is_zero())
        return true;
    return divide_monic(f, cyclotomic(modulus)).remainder.is_zero();
}

std::complex<double> ExpSum::value() const {
    double re = 0, im = 0;
    for (long j = 0; j < modulus; ++j) {
        if (counts[j] == 0)
            continue;
        const double angle = 2.0 * std::numbers::pi * j / modulus;
        re += static_cast<double>(counts[j]) * std::cos(angle);
        im += static_cast<double>(counts[j]) * std::sin(angle);
    }
    return {re, im};
}

double ExpSum::magnitude() const { return std::abs(value()); }

bool exp_equal(const ExpSum& a, const ExpSum& b) {
    if (a.modulus != b.modulus)
        throw std::invalid_argument("exp_equal requires matching moduli");
    ExpSum diff(a.modulus);
    for (long j = 0; j < a.modulus; ++j)
        diff.counts[j] = a.counts[j] - b.counts[j];
    return diff.is_zero();
}

ExpSum compose_crt(const ExpSum& sp, const ExpSum& sq) {
    const long p = sp.modulus, q = sq.modulus;
    ExpSum out(p * q);
    for (long s = 0; s < p; ++s) {
        if (sp.counts[s] == 0)
            continue;
        for (long t = 0; t < q; ++t) {
            if (sq.counts[t] == 0)
                continue;
            out.counts[(q * s + p * t) % (p * q)] += sp.counts[s] * sq.counts[t];
        }
    }
    return out;
}

IntPoly cyclotomic(long m) {
    if (m < 1)
        throw std::invalid_argument("cyclotomic order must be positive");
    Factorization fact = factorize(mpz_class(m));
    std::vector<long> primes;
    for (const auto& [pr, e] : fact.factors)
        primes.push_back(pr.get_si());
    IntPoly num = IntPoly({1});
    std::vector<IntPoly> dens;
    const std::size_t k = primes.size();
    for (std::size_t mask = 0; mask < (std::size_t(1) << k); ++mask) {
        long d = 1;
        int bits = 0;
        for (std::size_t i = 0; i < k; ++i)
            if (mask & (std::size_t(1) << i)) {
                d *= primes[i];
                ++bits;
            }
        IntPoly factor = IntPoly::monomial(static_cast<int>(m / d)) - IntPoly({1});
        if (bits % 2 == 0)
            num = num * factor;
        else
            dens.push_back(factor);
    }
    for (const auto& den : dens) {
        auto [quo, rem] = divide_monic(num, den);
        if (!rem.is_zero())
            throw std::logic_error("cyclotomic division left a remainder");
        num = std::move(quo);
    }
    return num;
}

long fp_resultant(long p, std::vector<long> a, std::vector<long> b) {
    require_prime(p);
    for (auto& c : a)
        c = norm_mod(c, p);
    for (auto& c : b)
        c = norm_mod(c, p);
    trim(a);
    trim(b);
    return fp_resultant_vec(std::move(a), std::move(b), p);
}

std::vector<long> fp_gcd(long p, std::vector<long> a, std::vector<long> b) {
    require_prime(p);
    for (auto& c : a)
        c = norm_mod(c, p);
    for (auto& c : b)
        c = norm_mod(c, p);
    trim(a);
    trim(b);
    return fp_gcd(std::move(a), std::move(b), p);
}

std::vector<long> fp_radical(long p, std::vector<long> f) {
    require_prime(p);
    for (auto& c : f)
        c = norm_mod(c, p);
    trim(f);
    if (f.empty())
        throw std::invalid_argument("fp_radical: zero polynomial");
    fp_monicize(f, p);
    return fp_radical(std::move(f), p);
}

std::vector<long> fp_quotient(long p, std::vector<long> a,
                              std::vector<long> b) {
    require_prime(p);
    for (auto& c : a)
        c = norm_mod(c, p);
    for (auto& c : b)
        c = norm_mod(c, p);
    trim(a);
    trim(b);
    return fp_divexact(a, b, p);
}

std::vector<int> fp_factor_degrees(const FpPoly& f) {
    FpVec v = full_vec(f);
    FpVec d = fp_derivative(v, f.p);
    if (d.empty() || fdeg(fp_gcd(v, d, f.p)) > 0)
        throw std::logic_error("fp_factor_degrees requires a square-free input");
    return fp_ddf_degrees(std::move(v), f.p);
}

long disc_mod_p(const FpPoly& f) {
    FpVec v = full_vec(f);
    FpVec d = fp_derivative(v, f.p);
    if (d.empty())
        return 0;
    long res = fp_resultant_vec(std::move(v), std::move(d), f.p);
    return disc_sign(f.n) == 1 ? res : norm_mod(-res, f.p);
}

namespace {

int euler_symbol(long a, long p) {
    a = norm_mod(a, p);
    if (a == 0)
        return 0;
    return powmod(a, (p - 1) / 2, p) == 1 ? 1 : -1;
}

} // namespace

int legendre_symbol_fp(long a, long p) {
    require_odd_prime(p);
    return euler_symbol(a, p);
}

FactorCount distinct_irreducible_factor_count(const FpPoly& f) {
    FpVec v = full_vec(f);
    FpVec d = fp_derivative(v, f.p);
    FpVec g = d.empty() ? v : fp_gcd(v, d, f.p);
    FactorCount out;
    out.squarefree = fdeg(g) == 0;
    if (out.squarefree)
        out.r = fp_ddf_count(v, f.p);
    else
        out.r = fp_ddf_count(fp_radical(std::move(v), f.p), f.p);
    return out;
}

int stickelberger_symbol(const FpPoly& f) {
    const int via_euler = legendre_symbol_fp(disc_mod_p(f), f.p);
    FactorCount fc = distinct_irreducible_factor_count(f);
    const int via_factors = fc.squarefree ? ((f.n - fc.r) % 2 == 0 ? 1 : -1) : 0;
    if (via_euler != via_factors)
        throw std::logic_error("stickelberger symbol routes disagree");
    return via_euler;
}

namespace {

// Enumerates monic degree-n polynomials mod p in lexicographic order on
// (a_{n-1}, ..., a_0); flat index uses a_0 as the least significant digit.
void decode_flat(long long idx, long p, int n, FpVec& low) {
    for (int j = 0; j < n; ++j) {
        low[j] = static_cast<long>(idx % p);
        idx /= p;
    }
}

signed char disc_symbol_of(const FpVec& low, long p) {
    FpVec v = low;
    v.push_back(1);
    FpVec d = fp_derivative(v, p);
    if (d.empty())
        return 0;
    long res = fp_resultant_vec(std::move(v), std::move(d), p);
    const int n = static_cast<int>(low.size());
    long disc = disc_sign(n) == 1 ? res : norm_mod(-res, p);
    return static_cast<signed char>(euler_symbol(disc, p));
}

} // namespace

mpz_class charsum_disc_total(long p, int n, long long budget, int workers) {
    require_odd_prime(p);
    if (n < 2)
        throw std::invalid_argument("charsum_disc_total requires n >= 2");
    if (workers < 1)
        throw std::invalid_argument("worker count must be positive");
    long long total;
    if (!pow_within(p, n, budget, total))
        throw budget_error("charsum_disc_total: p^n exceeds the budget");
    std::vector<long long> partial(workers, 0);
    const long long chunk = (total + workers - 1) / workers;
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            FpVec low(n);
            const long long lo = w * chunk;
            const long long hi = std::min(total, lo + chunk);
            long long sum = 0;
            for (long long idx = lo; idx < hi; ++idx) {
                decode_flat(idx, p, n, low);
                sum += disc_symbol_of(low, p);
            }
            partial[w] = sum;
        });
    }
    for (auto& t : pool)
        t.join();
    long long grand = 0;
    for (long long s : partial)
        grand += s;
    return mpz_class(static_cast<long>(grand));
}

ExpSum mixed_charsum(long p, int n, const LambdaVector& lambda, long long budget) {
    require_odd_prime(p);
    if (n < 2)
        throw std::invalid_argument("mixed_charsum requires n >= 2");
    check_lambda(lambda, p, n);
    long long total;
    if (!pow_within(p, n, budget, total))
        throw budget_error("mixed_charsum: p^n exceeds the budget");
    ExpSum out(p);
    FpVec low(n);
    for (long long idx = 0; idx < total; ++idx) {
        decode_flat(idx, p, n, low);
        const signed char s = disc_symbol_of(low, p);
        if (s == 0)
            continue;
        long long dot = 0;
        for (int k = 0; k < n; ++k)
            dot += static_cast<long long>(lambda.values[k]) * low[n - 1 - k];
        out.add(static_cast<long>(dot % p), s);
    }
    return out;
}

SweepResult mixed_charsum_sweep(long p, int n, long long budget, int workers) {
    require_odd_prime(p);
    if (n < 2)
        throw std::invalid_argument("mixed_charsum_sweep requires n >= 2");
    if (workers < 1)
        throw std::invalid_argument("worker count must be positive");
    long long cost;
    if (!pow_within(p, 2 * n, budget, cost))
        throw budget_error("mixed_charsum_sweep: p^{2n} exceeds the budget");
    long long total;
    pow_within(p, n, budget, total);
    std::vector<signed char> chi(total);
    {
        FpVec low(n);
        for (long long idx = 0; idx < total; ++idx) {
            decode_flat(idx, p, n, low);
            chi[idx] = disc_symbol_of(low, p);
        }
    }
    const long long bucket_size = total * p;
    std::vector<std::vector<int>> buckets(workers);
    const long long chunk = (total + workers - 1) / workers;
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            auto& bucket = buckets[w];
            bucket.assign(bucket_size, 0);
            FpVec low(n);
            std::vector<long> digit(n); // digit[k] multiplies lambda_{k+1}
            const long long lo = w * chunk;
            const long long hi = std::min(total, lo + chunk);
            for (long long idx = lo; idx < hi; ++idx) {
                const int s = chi[idx];
                if (s == 0)
                    continue;
                decode_flat(idx, p, n, low);
                for (int k = 0; k < n; ++k)
                    digit[k] = low[n - 1 - k];
                // Walk all lambda vectors, residue updated incrementally.
                auto fill = [&](auto&& self, int level, long long base,
                                long res) -> void {
                    if (level == n - 1) {
                        const long step = digit[level];
                        long r = res;
                        long long at = base * p * p;
                        for (long l = 0; l < p; ++l) {
                            bucket[at + r] += s;
                            at += p;
                            r += step;
                            if (r >= p)
                                r -= p;
                        }
                        return;
                    }
                    const long step = digit[level];
                    long r = res;
                    for (long l = 0; l < p; ++l) {
                        self(self, level + 1, base * p + l, r);
                        r += step;
                        if (r >= p)
                            r -= p;
                    }
                };
                fill(fill, 0, 0, 0);
            }
        });
    }
    for (auto& t : pool)
        t.join();
    std::vector<int>& merged = buckets[0];
    for (int w = 1; w < workers; ++w)
        for (long long i = 0; i < bucket_size; ++i)
            merged[i] += buckets[w][i];
    std::vector<double> cosv(p), sinv(p);
    for (long j = 0; j < p; ++j) {
        const double angle = 2.0 * std::numbers::pi * j / p;
        cosv[j] = std::cos(angle);
        sinv[j] = std::sin(angle);
    }
    double norm = 1.0;
    for (int i = 0; i < n - 1; ++i)
        norm *= p;
    SweepResult out;
    out.argmax.assign(n, 0);
    for (long long lam = 1; lam < total; ++lam) {
        double re = 0, im = 0;
        const int* slice = merged.data() + lam * p;
        for (long r = 0; r < p; ++r) {
            if (slice[r] == 0)
                continue;
            re += slice[r] * cosv[r];
            im += slice[r] * sinv[r];
        }
        const double mag = std::hypot(re, im);
        if (mag > out.max_abs) {
            out.max_abs = mag;
            long long t = lam;
            // lam digits are lambda_1 (most significant) .. lambda_n
            for (int k = n - 1; k >= 0; --k) {
                out.argmax[k] = static_cast<long>(t % p);
                t /= p;
            }
        }
    }
    out.max_ratio = out.max_abs / norm;
    return out;
}

ExpSum jacobi_charsum(long p, long q, int n, const LambdaVector& lambda,
                      long long budget) {
    require_odd_prime(p);
    require_odd_prime(q);
    if (p == q)
        throw std::invalid_argument("jacobi_charsum requires distinct primes");
    if (n < 2)
        throw std::invalid_argument("jacobi_charsum requires n >= 2");
    const long m = p * q;
    check_lambda(lambda, m, n);
    long long total;
    if (!pow_within(m, n, budget, total))
        throw budget_error("jacobi_charsum: m^n exceeds the budget");
    ExpSum direct(m);
    std::vector<mpz_class> coeffs(n);
    std::vector<long> low(n);
    for (long long idx = 0; idx < total; ++idx) {
        long long t = idx;
        for (int j = 0; j < n; ++j) {
            low[j] = static_cast<long>(t % m);
            coeffs[j] = low[j];
            t /= m;
        }
        mpz_class d = discriminant(MonicIntPoly(n, coeffs));
        const int s = jacobi_symbol(d, mpz_class(m));
        if (s == 0)
            continue;
        long long dot = 0;
        for (int k = 0; k < n; ++k)
            dot += static_cast<long long>(lambda.values[k]) * low[n - 1 - k];
        direct.add(static_cast<long>(dot % m), s);
    }
    // CRT route: twisted lambdas against the prime-modulus sums.
    const long q_inv_p = invmod(norm_mod(q, p), p);
    const long p_inv_q = invmod(norm_mod(p, q), q);
    LambdaVector lp{p, std::vector<long>(n)};
    LambdaVector lq{q, std::vector<long>(n)};
    for (int k = 0; k < n; ++k) {
        lp.values[k] = mulmod(q_inv_p, norm_mod(lambda.values[k], p), p);
        lq.values[k] = mulmod(p_inv_q, norm_mod(lambda.values[k], q), q);
    }
    ExpSum sp = mixed_charsum(p, n, lp, budget);
    ExpSum sq = mixed_charsum(q, n, lq, budget);
    if (!exp_equal(direct, compose_crt(sp, sq)))
        throw std::logic_error("jacobi charsum CRT composition mismatch");
    return direct;
}

BoxCharSum box_charsum(long p, long q, int n, long H, long long budget) {
    require_odd_prime(p);
    require_odd_prime(q);
    if (p == q)
        throw std::invalid_argument("box_charsum requires distinct primes");
    if (n < 2)
        throw std::invalid_argument("box_charsum requires n >= 2");
    if (H < 1)
        throw std::invalid_argument("box_charsum requires H >= 1");
    const long m = p * q;
    const long width = 2 * H - 1;
    long long total;
    if (!pow_within(width, n, budget, total))
        throw budget_error("box_charsum: (2H-1)^n exceeds the budget");
    BoxCharSum out;
    out.sum = 0;
    std::vector<mpz_class> coeffs(n);
    for (long long idx = 0; idx < total; ++idx) {
        long long t = idx;
        for (int j = 0; j < n; ++j) {
            coeffs[j] = static_cast<long>(t % width) - (H - 1);
            t /= width;
        }
        mpz_class d = discriminant(MonicIntPoly(n, coeffs));
        out.sum += jacobi_symbol(d, mpz_class(m));
    }
    const double lm = std::log(static_cast<double>(m));
    out.bound = std::pow(static_cast<double>(H), n - 1) * lm +
                std::pow(static_cast<double>(m), n - 1) * std::pow(lm, n);
    return out;
}

FpPoly fp_transform(const FpPoly& f, long u, long v) {
    const long p = f.p;
    u = norm_mod(u, p);
    v = norm_mod(v, p);
    if (u == 0)
        throw std::invalid_argument("fp_transform requires u != 0 mod p");
    const int n = f.n;
    FpVec src = full_vec(f);
    // result = sum_i c_i u^{n-i} (X + v)^i
    FpVec acc(n + 1, 0);
    FpVec binom{1};
    long ufac = powmod(u, n, p);
    const long uinv = invmod(u, p);
    for (int i = 0; i <= n; ++i) {
        const long scale = mulmod(src[i], ufac, p);
        for (int k = 0; k <= i; ++k)
            acc[k] = static_cast<long>(
                (acc[k] + static_cast<long long>(scale) * binom[k]) % p);
        FpVec next(binom.size() + 1, 0);
        for (std::size_t k = 0; k < binom.size(); ++k) {
            next[k] = static_cast<long>((next[k] +
                                         static_cast<long long>(binom[k]) * v) % p);
            next[k + 1] = (next[k + 1] + binom[k]) % p;
        }
        binom = std::move(next);
        ufac = mulmod(ufac, uinv, p);
    }
    if (acc[n] != 1)
        throw std::logic_error("fp_transform produced a non-monic result");
    acc.pop_back();
    return FpPoly(p, n, std::move(acc));
}

long exceptional_set_count(long p, int n, int slack, long long budget) {
    require_odd_prime(p);
    if (n < 2)
        throw std::invalid_argument("exceptional_set_count requires n >= 2");
    if (p <= n)
        throw std::invalid_argument("exceptional_set_count requires p > n");
    if (slack < 1)
        throw std::invalid_argument("slack must be positive");
    long long cost;
    if (!pow_within(p, n + 2, budget, cost))
        throw budget_error("exceptional_set_count: p^{n+2} exceeds the budget");
    long long total;
    pow_within(p, n, budget, total);
    long count = 0;
    FpVec low(n);
    std::vector<long long> keys;
    keys.reserve(static_cast<std::size_t>(p) * (p - 1));
    for (long long idx = 0; idx < total; ++idx) {
        decode_flat(idx, p, n, low);
        FpPoly f(p, n, low);
        keys.clear();
        for (long u = 1; u < p; ++u)
            for (long v = 0; v < p; ++v) {
                FpPoly t = fp_transform(f, u, v);
                long long key = 0;
                for (int j = n - 1; j >= 0; --j)
                    key = key * p + t.low[j];
                keys.push_back(key);
            }
        std::sort(keys.begin(), keys.end());
        if (std::adjacent_find(keys.begin(), keys.end()) != keys.end())
            ++count;
    }
    long long bound;
    pow_within(p, n / 2 + 1, std::numeric_limits<long long>::max() / (slack + 1),
               bound);
    if (count > slack * bound)
        throw std::logic_error("exceptional set larger than the allowed bound");
    return count;
}

bool ff_transform_disc_check(long p, int n, long long budget) {
    require_odd_prime(p);
    if (n < 2)
        throw std::invalid_argument("ff_transform_disc_check requires n >= 2");
    long long cost;
    if (!pow_within(p, n + 2, budget, cost))
        throw budget_error("ff_transform_disc_check: p^{n+2} exceeds the budget");
    long long total;
    pow_within(p, n, budget, total);
    FpVec low(n);
    for (long long idx = 0; idx < total; ++idx) {
        decode_flat(idx, p, n, low);
        FpPoly f(p, n, low);
        const long base = disc_mod_p(f);
        for (long u = 1; u < p; ++u) {
            const long scale = powmod(u, static_cast<long>(n) * (n - 1), p);
            for (long v = 0; v < p; ++v) {
                FpPoly t = fp_transform(f, u, v);
                if (disc_mod_p(t) != mulmod(scale, base, p))
                    return false;
            }
        }
    }
    return true;
}

} // namespace disccensus
