#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "disccensus/int_arith.hpp"

#include <cstdlib>

using namespace disccensus;

TEST_CASE("factorize small composites") {
    Factorization f = factorize(12);
    CHECK(f.sign == 1);
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0].first == 2);
    CHECK(f.factors[0].second == 2);
    CHECK(f.factors[1].first == 3);
    CHECK(f.factors[1].second == 1);
    CHECK(f.omega() == 2);
    CHECK(f.value() == 12);
}

TEST_CASE("factorize negative power of two") {
    Factorization f = factorize(mpz_class(-2048));
    CHECK(f.sign == -1);
    REQUIRE(f.factors.size() == 1);
    CHECK(f.factors[0].first == 2);
    CHECK(f.factors[0].second == 11);
    CHECK(f.value() == -2048);
}

TEST_CASE("factorize prime") {
    Factorization f = factorize(283);
    REQUIRE(f.factors.size() == 1);
    CHECK(f.factors[0].first == 283);
    CHECK(f.factors[0].second == 1);
}

TEST_CASE("factorize rejects zero") {
    CHECK_THROWS_AS(factorize(0), std::invalid_argument);
}

TEST_CASE("factorize round trip over a range") {
    // Spot-check every 997th value to keep the loop fast.
    for (long k = 2; k <= 1000000; k += 997) {
        Factorization f = factorize(mpz_class(k));
        CHECK(f.value() == k);
        for (std::size_t i = 0; i + 1 < f.factors.size(); ++i)
            CHECK(f.factors[i].first < f.factors[i + 1].first);
        for (const auto& [p, e] : f.factors) {
            CHECK(e >= 1);
            CHECK(is_probable_prime(p));
        }
    }
}

TEST_CASE("factorize semiprime beyond trial bound") {
    // 1000003 * 1000033, both prime and above the default trial bound.
    mpz_class n = mpz_class(1000003) * 1000033;
    Factorization f = factorize(n);
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0].first == 1000003);
    CHECK(f.factors[1].first == 1000033);
}

TEST_CASE("factorize honors rho budget") {
    FactorizationLimits tight;
    tight.trial_division_bound = 3;
    tight.rho_iteration_budget = 1;
    // Large semiprime that trial division at 3 cannot touch.
    mpz_class n = mpz_class("1000000007") * mpz_class("1000000009");
    CHECK_THROWS_AS(factorize(n, tight), budget_error);
}

TEST_CASE("is_probable_prime basics") {
    CHECK(is_probable_prime(2));
    CHECK(is_probable_prime(3));
    CHECK(is_probable_prime(283));
    CHECK_FALSE(is_probable_prime(1));
    CHECK_FALSE(is_probable_prime(0));
    CHECK_FALSE(is_probable_prime(-7));
    CHECK_FALSE(is_probable_prime(561));   // Carmichael
    CHECK_FALSE(is_probable_prime(29341)); // Carmichael
    CHECK(is_probable_prime(mpz_class("1000000007")));
    CHECK(is_probable_prime(mpz_class("170141183460469231731687303715884105727"))); // 2^127-1
}

TEST_CASE("squarefree decomposition") {
    SUBCASE("12 = 3 * 2^2") {
        auto d = squarefree_part(12);
        CHECK(d.u == 3);
        CHECK(d.v == 2);
    }
    SUBCASE("-2048 = -2 * 32^2") {
        auto d = squarefree_part(mpz_class(-2048));
        CHECK(d.u == -2);
        CHECK(d.v == 32);
    }
    SUBCASE("283 squarefree") {
        auto d = squarefree_part(283);
        CHECK(d.u == 283);
        CHECK(d.v == 1);
    }
    SUBCASE("perfect square") {
        auto d = squarefree_part(mpz_class(36));
        CHECK(d.u == 1);
        CHECK(d.v == 6);
    }
    SUBCASE("zero rejected") {
        CHECK_THROWS_AS(squarefree_part(0), std::invalid_argument);
    }
    SUBCASE("identity u*v^2 over a range") {
        for (long k = -500; k <= 500; ++k) {
            if (k == 0)
                continue;
            auto d = squarefree_part(mpz_class(k));
            CHECK(d.u * d.v * d.v == k);
            CHECK(d.v > 0);
            // u must be squarefree
            auto du = squarefree_part(d.u);
            CHECK(du.v == 1);
        }
    }
}

TEST_CASE("jacobi symbol") {
    CHECK(jacobi_symbol(1, 1) == 1);
    CHECK(jacobi_symbol(1, 15) == 1);
    CHECK(jacobi_symbol(2, 15) == 1);
    CHECK(jacobi_symbol(3, 15) == 0);
    CHECK(jacobi_symbol(7, 15) == -1);
    CHECK(jacobi_symbol(-1, 3) == -1);
    CHECK(jacobi_symbol(-1, 5) == 1);
    CHECK_THROWS_AS(jacobi_symbol(3, 4), std::invalid_argument);
    CHECK_THROWS_AS(jacobi_symbol(3, -5), std::invalid_argument);

    SUBCASE("matches Euler criterion for odd primes") {
        for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u, 101u, 283u}) {
            for (std::uint32_t a = 1; a < p; ++a) {
                mpz_class e, base = a, mod = p, exp = (p - 1) / 2;
                mpz_powm(e.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(),
                         mod.get_mpz_t());
                int euler = (e == 1) ? 1 : -1;
                CHECK(jacobi_symbol(a, p) == euler);
            }
        }
    }

    SUBCASE("multiplicative in the top argument") {
        const mpz_class m = 225931; // odd composite
        for (long a = 1; a <= 40; ++a)
            for (long b = 1; b <= 40; ++b)
                CHECK(jacobi_symbol(a, m) * jacobi_symbol(b, m) ==
                      jacobi_symbol(mpz_class(a) * b, m));
    }
}

TEST_CASE("perfect square detection") {
    mpz_class root;
    CHECK(is_perfect_square(0));
    CHECK(is_perfect_square(529, root));
    CHECK(root == 23);
    CHECK_FALSE(is_perfect_square(530));
    CHECK_FALSE(is_perfect_square(mpz_class(-4)));
    mpz_class big = mpz_class("123456789123456789");
    CHECK(is_perfect_square(big * big, root));
    CHECK(root == big);
    CHECK_FALSE(is_perfect_square(big * big + 1));
}

TEST_CASE("probabilistic square test") {
    SUBCASE("never rejects an actual square") {
        for (long r = 1; r <= 300; ++r) {
            mpz_class sq = mpz_class(r) * r;
            CHECK(probabilistic_square_test(sq, 8, 12345 + r) ==
                  SquareTest::probably_square);
        }
    }
    SUBCASE("rejects most non-squares") {
        int rejected = 0;
        int tried = 0;
        for (long k = 2; k <= 400; ++k) {
            if (is_perfect_square(mpz_class(k)))
                continue;
            ++tried;
            if (probabilistic_square_test(mpz_class(k), 12, 999) ==
                SquareTest::certainly_not_square)
                ++rejected;
        }
        // With 12 sampled primes the miss rate should be tiny.
        CHECK(rejected >= tried - 2);
    }
    SUBCASE("argument validation") {
        CHECK_THROWS_AS(probabilistic_square_test(0, 4, 1), std::invalid_argument);
        CHECK_THROWS_AS(probabilistic_square_test(5, 0, 1), std::invalid_argument);
    }
}

TEST_CASE("small prime table") {
    const auto& ps = small_primes();
    REQUIRE(ps.size() > 6000);
    CHECK(ps.front() == 2);
    CHECK(ps[24] == 97);
    CHECK(ps.back() == 65521);
}
