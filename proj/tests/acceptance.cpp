// Acceptance gate: one pass/fail line per criterion, nonzero exit on failure.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "disccensus/census.hpp"
#include "disccensus/ffpoly.hpp"
#include "disccensus/fielddisc.hpp"
#include "disccensus/int_arith.hpp"
#include "disccensus/irreducible.hpp"
#include "disccensus/poly.hpp"
#include "disccensus/sieve.hpp"
#include "disccensus/verify.hpp"

using namespace disccensus;
using Clock = std::chrono::steady_clock;

namespace {

constexpr int kWorkers = 4;
int failures = 0;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void run_criterion(int id, const std::string& name, double limit_s,
                   const std::function<bool(std::ostringstream&)>& body) {
    std::ostringstream detail;
    bool ok = false;
    const auto t0 = Clock::now();
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail << "exception: " << e.what();
        ok = false;
    }
    const double elapsed = seconds_since(t0);
    std::ostringstream line;
    line << (ok && elapsed <= limit_s ? "[PASS]" : "[FAIL]") << " criterion " << id
         << ": " << name << " -- " << detail.str();
    if (elapsed > limit_s)
        line << " [exceeded time limit]";
    line << " (" << std::fixed << std::setprecision(2) << elapsed << "s / "
         << std::setprecision(0) << limit_s << "s)";
    std::cout << line.str() << "\n" << std::flush;
    if (!(ok && elapsed <= limit_s))
        ++failures;
}

std::string run_cli(const std::string& args, int& exit_code) {
    const std::string cmd = std::string(DISC_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        exit_code = -1;
        return {};
    }
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0)
        out.append(buf, n);
    const int status = pclose(pipe);
    exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return out;
}

} // namespace

int main() {
    std::cout << "disc-census acceptance criteria\n";

    run_criterion(1, "reference discriminant vectors", 60.0, [](std::ostringstream& out) {
        const auto t0 = Clock::now();
        const auto fast = verify_reference_vectors(false);
        const double fast_s = seconds_since(t0);
        if (fast.size() != 6 || fast_s >= 1.0)
            return false;
        for (const auto& v : fast)
            if (!v.pass)
                return false;
        const auto slow = verify_reference_vectors(true);
        if (slow.size() != 6 || slow[4].skipped)
            return false;
        for (const auto& v : slow)
            if (!v.pass)
                return false;
        out << "6 vectors hold; fast set in " << std::fixed << std::setprecision(3)
            << fast_s << "s; degree-24 disc recomputed and matches";
        return true;
    });

    run_criterion(2, "closed forms match the resultant route", 10.0,
                  [](std::ostringstream& out) {
        std::mt19937_64 rng(20260823u);
        auto draw = [&rng](long lo, long hi) {
            return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
        };
        long long checked = 0;
        for (int i = 0; i < 500; ++i) {
            const int n = static_cast<int>(draw(2, 9));
            const mpz_class a(draw(-50, 50)), b(draw(-50, 50));
            std::vector<mpz_class> low(n, mpz_class(0));
            low[0] = b;
            low[1] = a;
            if (trinomial_disc(n, a, b) != discriminant(MonicIntPoly(n, low)))
                return false;
            ++checked;
        }
        const int quad_n[] = {4, 5, 7, 8, 10, 11};
        for (int i = 0; i < 500; ++i) {
            const int n = quad_n[rng() % 6];
            const mpz_class a(draw(-50, 50)), b(draw(-50, 50));
            std::vector<mpz_class> low(n, mpz_class(0));
            low[0] = b;
            low[3] = a;
            if (quadrinomial_disc(n, a, b) != discriminant(MonicIntPoly(n, low)))
                return false;
            ++checked;
        }
        out << checked << " random trinomials and quadrinomials agree";
        return checked == 1000;
    });

    run_criterion(3, "Stickelberger parity on both routes", 30.0,
                  [](std::ostringstream& out) {
        long long checked = 0;
        for (long p : {3L, 5L, 7L, 11L})
            for (int n : {2, 3, 4}) {
                long long total = 1;
                for (int i = 0; i < n; ++i)
                    total *= p;
                for (long long idx = 0; idx < total; ++idx) {
                    std::vector<long> low(n);
                    long long t = idx;
                    for (int i = 0; i < n; ++i) {
                        low[i] = static_cast<long>(t % p);
                        t /= p;
                    }
                    const FpPoly f(p, n, low);
                    const int s = stickelberger_symbol(f); // throws if routes split
                    if (s < -1 || s > 1)
                        return false;
                    if ((s == 0) != (disc_mod_p(f) == 0))
                        return false;
                    ++checked;
                }
            }
        out << checked << " polynomials over F_p, Euler vs factor-parity agree";
        return checked == 19778;
    });

    run_criterion(4, "discriminant character sums vanish", 60.0,
                  [](std::ostringstream& out) {
        int pairs = 0;
        for (long p : {3L, 5L, 7L, 11L, 13L})
            for (int n : {2, 3, 4}) {
                if (charsum_disc_total(p, n, 10'000'000, kWorkers) != 0)
                    return false;
                ++pairs;
            }
        out << pairs << " (p, n) grids sum to exactly zero";
        return pairs == 15;
    });

    run_criterion(5, "mixed character sums stay bounded", 300.0,
                  [](std::ostringstream& out) {
        double max_ratio = 0.0;
        long arg_p = 0;
        for (long p : {5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L}) {
            const SweepResult s = mixed_charsum_sweep(p, 3, 2'000'000'000, kWorkers);
            if (s.max_ratio > 16.0)
                return false;
            if (s.max_ratio > max_ratio) {
                max_ratio = s.max_ratio;
                arg_p = p;
            }
        }
        out << "max |S(lambda)|/p^2 = " << std::setprecision(4) << max_ratio
            << " at p = " << arg_p << " (bound 16)";
        return true;
    });

    run_criterion(6, "transform identities and exceptional sets", 120.0,
                  [](std::ostringstream& out) {
        const struct {
            long p;
            int n;
        } cases[] = {{5, 2}, {5, 3}, {7, 3}};
        for (const auto& c : cases) {
            if (!ff_transform_disc_check(c.p, c.n))
                return false;
            const long exceptional = exceptional_set_count(c.p, c.n, 8);
            long long cap = 8;
            for (int i = 0; i < c.n / 2 + 1; ++i)
                cap *= c.p;
            if (exceptional > cap)
                return false;
            out << "(" << c.p << "," << c.n << "): " << exceptional << " <= " << cap
                << "; ";
        }
        out << "disc identity exhaustive";
        return true;
    });

    run_criterion(7, "square-sieve identity and bound dominance", 120.0,
                  [](std::ostringstream& out) {
        const SieveWindow windows[] = {make_window(10), make_window(20),
                                       make_window(50)};
        long long tested = 0;
        for (long a2 = -10; a2 <= 10; ++a2)
            for (long a1 = -10; a1 <= 10; ++a1)
                for (long a0 = -10; a0 <= 10; ++a0) {
                    const MonicIntPoly f(
                        3, {mpz_class(a0), mpz_class(a1), mpz_class(a2)});
                    if (is_irreducible(f).status != IrredStatus::irreducible)
                        continue;
                    for (const auto& w : windows)
                        if (!sieve_identity_check(f, w).equal)
                            return false;
                    ++tested;
                }
        const struct {
            int n;
            long h;
            long u;
            long z;
        } configs[] = {{3, 6, 1, 200}, {3, 6, -1, 200}, {3, 8, 2, 120}, {4, 4, 1, 60}};
        for (const auto& c : configs) {
            const SieveBound b =
                sieve_upper_bound(c.n, c.h, mpz_class(c.u), c.z, kWorkers);
            if (b.value < static_cast<double>(b.exact_squares))
                return false;
        }
        out << tested << " irreducible cubics x 3 windows equal; bound >= exact on 4 configs";
        return tested >= 5000;
    });

    run_criterion(8, "irreducibility ratio at height 30", 30.0,
                  [](std::ostringstream& out) {
        const IrreducibleCount c = count_irreducible(3, 30, kWorkers);
        out << "#I_3(30)/(8*30^3) = " << std::setprecision(4) << c.ratio_main_term;
        return c.ratio_main_term >= 0.85 && c.ratio_main_term <= 1.0;
    });

    run_criterion(9, "monogenic density at height 20", 120.0,
                  [](std::ostringstream& out) {
        const MonogenicDensity d = monogenic_density(3, 20, kWorkers);
        out << "box density " << std::setprecision(4) << d.density_box
            << " in [0.55, 0.67]; conditioned on irreducibility " << d.density;
        return d.density_box >= 0.55 && d.density_box <= 0.67;
    });

    run_criterion(10, "trinomial square values stay sparse", 30.0,
                  [](std::ostringstream& out) {
        const TrinomialCount c = trinomial_count(5, 50, 50, 1, 1, mpz_class(1));
        out << "per-a max " << c.per_a_max << " <= 4, total " << c.total << " <= 200";
        return c.per_a_max <= 4 && c.total <= 200;
    });

    run_criterion(11, "Eisenstein family has distinct discriminants", 10.0,
                  [](std::ostringstream& out) {
        const HeightBox fam = eisenstein_trinomial_box(5, 120);
        const long long distinct =
            distinct_disc_count(fam, CensusKey::disc_value, kWorkers);
        out << distinct << " distinct discriminants over " << fam.volume()
            << " members";
        return fam.volume() == 62 && distinct == 62;
    });

    run_criterion(12, "class multiplicity growth", 300.0, [](std::ostringstream& out) {
        std::vector<double> xs, ys;
        for (long h : {5L, 10L, 15L, 20L}) {
            const MaxClass m = max_class_multiplicity(3, h, kWorkers);
            if (static_cast<double>(m.count) >
                std::pow(static_cast<double>(h), 2.5))
                return false;
            xs.push_back(std::log(static_cast<double>(h)));
            ys.push_back(std::log(static_cast<double>(m.count)));
        }
        double mx = 0, my = 0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            mx += xs[i];
            my += ys[i];
        }
        mx /= static_cast<double>(xs.size());
        my /= static_cast<double>(ys.size());
        double num = 0, den = 0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            num += (xs[i] - mx) * (ys[i] - my);
            den += (xs[i] - mx) * (xs[i] - mx);
        }
        out << "max class <= H^2.5 at H = 5, 10, 15, 20; fitted log-log slope "
            << std::setprecision(3) << num / den;
        return true;
    });

    run_criterion(13, "census output is worker-count invariant", 60.0,
                  [](std::ostringstream& out) {
        int e1 = 0, e2 = 0, e3 = 0, e4 = 0;
        const std::string csv1 = run_cli("census --n 3 --height 6", e1);
        const std::string csv4 = run_cli("census --n 3 --height 6 --workers 4", e2);
        const std::string js1 = run_cli("census --n 4 --height 4 --format json", e3);
        const std::string js4 =
            run_cli("census --n 4 --height 4 --format json --workers 4", e4);
        if (e1 || e2 || e3 || e4)
            return false;
        if (csv1.empty() || js1.empty())
            return false;
        out << "csv and json bytes identical for workers 1 and 4";
        return csv1 == csv4 && js1 == js4;
    });

    if (failures == 0) {
        std::cout << "RESULT: PASS (13/13 criteria)\n";
        return 0;
    }
    std::cout << "RESULT: FAIL (" << (13 - failures) << "/13 criteria)\n";
    return 1;
}
