#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "disccensus/fielddisc.hpp"
#include "disccensus/irreducible.hpp"

#include <vector>

using namespace disccensus;

namespace {

MonicIntPoly make(int n, std::vector<long> low) {
    std::vector<mpz_class> c(low.begin(), low.end());
    return MonicIntPoly(n, std::move(c));
}

long positive_mod4(const mpz_class& u) {
    return static_cast<long>(mpz_fdiv_ui(u.get_mpz_t(), 4));
}

// Classical rule for quadratics: Z[alpha] with alpha a root of X^2+aX+b is
// maximal iff disc equals the fundamental discriminant u or 4u.
bool quadratic_is_monogenic(const mpz_class& disc) {
    const mpz_class u = squarefree_part(disc).u;
    const mpz_class fundamental = positive_mod4(u) == 1 ? u : 4 * u;
    return disc == fundamental;
}

} // namespace

TEST_CASE("dedekind criterion landmarks") {
    CHECK(dedekind_p_maximal(make(2, {1, 0}), 2) == PMaximality::maximal);
    CHECK(dedekind_p_maximal(make(2, {-5, 0}), 2) == PMaximality::not_maximal);
    CHECK(dedekind_p_maximal(make(4, {-2, 0, 0, 0}), 2) == PMaximality::maximal);
    // Z[zeta_5] is the full ring of integers of Q(zeta_5).
    CHECK(dedekind_p_maximal(make(4, {1, 1, 1, 1}), 5) == PMaximality::maximal);
    // Eisenstein at p forces p-maximality.
    CHECK(dedekind_p_maximal(make(5, {5, 15, 0, 0, 0}), 5) == PMaximality::maximal);
    CHECK(dedekind_p_maximal(make(3, {-2, 4, 0}), 2) == PMaximality::maximal);

    CHECK_THROWS_AS(dedekind_p_maximal(make(2, {-1, 0}), 2),
                    std::invalid_argument);
    CHECK_THROWS_AS(dedekind_p_maximal(make(2, {1, 0}), 4),
                    std::invalid_argument);
}

TEST_CASE("dedekind at 2 for X^2 - d matches the d mod 4 rule") {
    for (long d = -30; d <= 30; ++d) {
        if (d == 0 || d == 1)
            continue;
        if (squarefree_part(mpz_class(d)).v != 1)
            continue;
        auto got = dedekind_p_maximal(make(2, {-d, 0}), 2);
        auto want = positive_mod4(mpz_class(d)) == 1 ? PMaximality::not_maximal
                                                     : PMaximality::maximal;
        CHECK(got == want);
    }
}

TEST_CASE("field_disc landmarks") {
    DedekindReport r = field_disc(make(2, {1, 0}));
    CHECK(r.disc == -4);
    REQUIRE(r.certified_field_disc.has_value());
    CHECK(*r.certified_field_disc == -4);
    REQUIRE(r.tested_primes.size() == 1);
    CHECK(r.tested_primes[0].first == 2);
    CHECK(r.tested_primes[0].second == PMaximality::maximal);
    CHECK(r.sf_part_of_field_disc.u == -1);
    CHECK(r.sf_part_of_field_disc.v == 2);

    r = field_disc(make(2, {-5, 0}));
    CHECK(r.disc == 20);
    CHECK(!r.certified_field_disc.has_value());
    REQUIRE(r.tested_primes.size() == 1);
    CHECK(r.tested_primes[0].second == PMaximality::not_maximal);
    CHECK(r.sf_part_of_field_disc.u == 5);
    CHECK(r.sf_part_of_field_disc.v == 2);

    r = field_disc(make(4, {-1, -1, 0, 0}));
    CHECK(r.disc == -283);
    REQUIRE(r.certified_field_disc.has_value());
    CHECK(*r.certified_field_disc == -283);
    CHECK(r.tested_primes.empty()); // 283 is prime, disc square-free
    CHECK(r.sf_part_of_field_disc.u == -283);
    CHECK(r.sf_part_of_field_disc.v == 1);

    r = field_disc(make(4, {-2, 0, 0, 0}));
    CHECK(r.disc == -2048);
    REQUIRE(r.certified_field_disc.has_value());
    CHECK(*r.certified_field_disc == -2048);

    CHECK_THROWS_AS(field_disc(make(2, {-1, 0})), std::invalid_argument);
}

TEST_CASE("field_disc invariants over a quadratic box") {
    for (long a = -9; a <= 9; ++a)
        for (long b = -9; b <= 9; ++b) {
            MonicIntPoly f = make(2, {b, a});
            if (is_irreducible(f).status != IrredStatus::irreducible)
                continue;
            DedekindReport r = field_disc(f);
            CHECK(r.disc == mpz_class(a) * a - 4 * b);
            // Signed square-free part and the tested-prime set.
            CHECK(r.sf_part_of_field_disc.u * r.sf_part_of_field_disc.v *
                      r.sf_part_of_field_disc.v ==
                  r.disc);
            CHECK((r.sf_part_of_field_disc.u > 0) == (r.disc > 0));
            for (const auto& [p, e] : factorize(r.disc).factors)
                if (e >= 2) {
                    bool found = false;
                    for (const auto& [q, verdict] : r.tested_primes)
                        found = found || q == p;
                    CHECK(found);
                }
            // Square-free shortcut.
            if (r.sf_part_of_field_disc.v == 1)
                CHECK(r.certified_field_disc.has_value());
            if (r.certified_field_disc.has_value())
                CHECK(*r.certified_field_disc == r.disc);
            // Classical quadratic-field oracle.
            CHECK(r.certified_field_disc.has_value() ==
                  quadratic_is_monogenic(r.disc));
        }
}

TEST_CASE("monogenic density against the quadratic oracle") {
    long long certified = 0, irreducible = 0;
    for (long a = -9; a <= 9; ++a)
        for (long b = -9; b <= 9; ++b) {
            MonicIntPoly f = make(2, {b, a});
            if (is_irreducible(f).status != IrredStatus::irreducible)
                continue;
            ++irreducible;
            if (quadratic_is_monogenic(mpz_class(a) * a - 4 * b))
                ++certified;
        }
    MonogenicDensity got = monogenic_density(2, 10);
    CHECK(got.irreducible == irreducible);
    CHECK(got.certified == certified);
}

TEST_CASE("monogenic density bounds and edge cases") {
    CHECK_THROWS_AS(monogenic_density(3, 1), std::invalid_argument);
    MonogenicDensity one = monogenic_density(3, 8, 1);
    MonogenicDensity three = monogenic_density(3, 8, 3);
    CHECK(one.certified == three.certified);
    CHECK(one.irreducible == three.irreducible);
    CHECK(one.density > 0.5);
    CHECK(one.density < 0.9);
    CHECK(one.box_points == 15 * 15 * 15);
    CHECK(one.density_box < one.density);
    CHECK(one.density_box ==
          doctest::Approx(static_cast<double>(one.certified) / 3375.0));
}
