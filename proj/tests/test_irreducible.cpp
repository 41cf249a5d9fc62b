#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "disccensus/ffpoly.hpp"
#include "disccensus/irreducible.hpp"

#include <set>
#include <vector>

using namespace disccensus;

namespace {

MonicIntPoly make(int n, std::vector<long> low) {
    std::vector<mpz_class> c(low.begin(), low.end());
    return MonicIntPoly(n, std::move(c));
}

// A reducible verdict must carry a proper monic factor that divides exactly.
void check_sound(const MonicIntPoly& f, const IrreducibilityVerdict& v) {
    if (v.status == IrredStatus::reducible) {
        REQUIRE(v.witness.has_value());
        const IntPoly& g = *v.witness;
        CHECK(g.degree() >= 1);
        CHECK(g.degree() < f.degree());
        CHECK(g.lc() == 1);
        CHECK(divide_monic(f.poly(), g).remainder.is_zero());
    } else {
        CHECK(!v.witness.has_value());
    }
}

} // namespace

TEST_CASE("eisenstein test") {
    CHECK(eisenstein_test(make(4, {-2, 0, 0, 0})) == mpz_class(2));
    CHECK(eisenstein_test(make(3, {-2, 4, 0})) == mpz_class(2));
    CHECK(!eisenstein_test(make(2, {-1, 0})).has_value());
    CHECK(!eisenstein_test(make(2, {4, 4})).has_value()); // p^2 | a_0
    CHECK(!eisenstein_test(make(3, {0, 0, 0})).has_value());
    CHECK(eisenstein_test(make(4, {3, 0, 6, 0})) == mpz_class(3));
    CHECK(eisenstein_test(make(2, {-12, 6})) == mpz_class(3)); // 4 | 12 rules out 2
}

TEST_CASE("landmark verdicts") {
    auto v = is_irreducible(make(3, {-1, -1, 0}));
    CHECK(v.status == IrredStatus::irreducible);
    check_sound(make(3, {-1, -1, 0}), v);

    v = is_irreducible(make(5, {1, 1, 0, 0, 0}));
    CHECK(v.status == IrredStatus::reducible);
    REQUIRE(v.witness.has_value());
    CHECK(*v.witness == IntPoly({1, 1, 1}));
    check_sound(make(5, {1, 1, 0, 0, 0}), v);

    for (int n : {2, 5, 8}) {
        v = is_irreducible(make(n, std::vector<long>(n, 0)));
        CHECK(v.status == IrredStatus::reducible);
        CHECK(*v.witness == IntPoly({0, 1}));
    }

    CHECK(is_irreducible(make(4, {-2, 0, 0, 0})).status == IrredStatus::irreducible);
    CHECK(is_irreducible(make(4, {-1, -1, 0, 0})).status == IrredStatus::irreducible);
    CHECK(is_irreducible(make(4, {3, 0, 6, 0})).status == IrredStatus::irreducible);
    CHECK(is_irreducible(make(1, {7})).status == IrredStatus::irreducible);

    // (X^2+1)(X^2+2) has no rational root and no Eisenstein prime.
    v = is_irreducible(make(4, {2, 0, 3, 0}));
    CHECK(v.status == IrredStatus::reducible);
    check_sound(make(4, {2, 0, 3, 0}), v);

    // (X^2-2)^2: zero discriminant.
    v = is_irreducible(make(4, {4, 0, -4, 0}));
    CHECK(v.status == IrredStatus::reducible);
    REQUIRE(v.witness.has_value());
    CHECK(*v.witness == IntPoly({-2, 0, 1}));
    check_sound(make(4, {4, 0, -4, 0}), v);
}

TEST_CASE("route toggles") {
    IrredOptions bare;
    bare.use_eisenstein = false;
    bare.use_degree_patterns = false;
    bare.use_fallback = false;
    auto v = is_irreducible(make(5, {1, 1, 0, 0, 0}), bare);
    CHECK(v.status == IrredStatus::inconclusive_escalated);
    CHECK(!v.witness.has_value());

    IrredOptions tiny;
    tiny.use_degree_patterns = false;
    tiny.fallback_node_budget = 1;
    CHECK_THROWS_AS(is_irreducible(make(6, {1, 1, 0, 0, 0, 0}), tiny), budget_error);
}

TEST_CASE("degree patterns and fallback agree on all quintics with entries in -2..2") {
    IrredOptions with_patterns;
    IrredOptions fallback_only;
    fallback_only.use_degree_patterns = false;
    std::vector<long> low(5);
    int irreducible_seen = 0;
    for (long long idx = 0; idx < 3125; ++idx) {
        long long rest = idx;
        for (int j = 0; j < 5; ++j) {
            low[j] = rest % 5 - 2;
            rest /= 5;
        }
        MonicIntPoly f = make(5, low);
        auto a = is_irreducible(f, with_patterns);
        auto b = is_irreducible(f, fallback_only);
        CHECK(a.status == b.status);
        check_sound(f, a);
        check_sound(f, b);
        if (a.status == IrredStatus::irreducible)
            ++irreducible_seen;

        // Irreducible mod p away from the discriminant forces irreducible.
        if (a.status != IrredStatus::reducible)
            continue;
        mpz_class disc = discriminant(f);
        if (disc != 0 && mpz_fdiv_ui(disc.get_mpz_t(), 7) != 0)
            CHECK(fp_factor_degrees(FpPoly::from_int_poly(f, 7)) !=
                  std::vector<int>{5});
    }
    // Frozen from the first exhaustive run; the two independent routes agree
    // and every reducible witness re-multiplies above.
    CHECK(irreducible_seen == 1812);
}

TEST_CASE("irreducible mod p implies the verdict") {
    // X^5 - X - 1 is irreducible mod 3 (checked via factor degrees).
    MonicIntPoly f = make(5, {-1, -1, 0, 0, 0});
    CHECK(fp_factor_degrees(FpPoly::from_int_poly(f, 3)) == std::vector<int>{5});
    CHECK(is_irreducible(f).status == IrredStatus::irreducible);
}

TEST_CASE("quadratic count against the square-discriminant rule") {
    // Monic quadratic is reducible over Q iff a1^2 - 4a0 is a perfect square.
    long long expected = 0;
    for (long a1 = -1; a1 <= 1; ++a1)
        for (long a0 = -1; a0 <= 1; ++a0) {
            mpz_class d = mpz_class(a1) * a1 - 4 * a0;
            if (!(d >= 0 && is_perfect_square(d)))
                ++expected;
        }
    CHECK(expected == 5);
    IrreducibleCount got = count_irreducible(2, 2);
    CHECK(got.irreducible == expected);
    CHECK(got.box_points == 9);
}

TEST_CASE("cubic count against the integer-root rule") {
    // Monic cubic is reducible over Q iff it has an integer root; roots are
    // bounded by 1 + max |a_i| (Cauchy).
    long long expected = 0;
    for (long a2 = -2; a2 <= 2; ++a2)
        for (long a1 = -2; a1 <= 2; ++a1)
            for (long a0 = -2; a0 <= 2; ++a0) {
                MonicIntPoly f = make(3, {a0, a1, a2});
                bool has_root = false;
                for (long r = -3; r <= 3 && !has_root; ++r)
                    has_root = f.eval(r) == 0;
                if (!has_root)
                    ++expected;
            }
    IrreducibleCount got = count_irreducible(3, 3);
    CHECK(got.irreducible == expected);
    CHECK(got.box_points == 125);
    CHECK(count_irreducible(3, 1).irreducible == 0);
}

TEST_CASE("quartic count against a product-set oracle") {
    // Reducible quartics in |a_i| < 3 are the ones with an integer root
    // (|root| <= 3 by Cauchy) plus products of two monic quadratics whose
    // roots obey the same bound: |b| <= 6, |c| <= 9.
    std::set<std::vector<long>> reducible;
    for (long a3 = -2; a3 <= 2; ++a3)
        for (long a2 = -2; a2 <= 2; ++a2)
            for (long a1 = -2; a1 <= 2; ++a1)
                for (long a0 = -2; a0 <= 2; ++a0) {
                    MonicIntPoly f = make(4, {a0, a1, a2, a3});
                    for (long r = -3; r <= 3; ++r)
                        if (f.eval(r) == 0) {
                            reducible.insert({a0, a1, a2, a3});
                            break;
                        }
                }
    for (long b = -6; b <= 6; ++b)
        for (long c = -9; c <= 9; ++c)
            for (long e = -6; e <= 6; ++e)
                for (long g = -9; g <= 9; ++g) {
                    const long a3 = b + e, a2 = c + g + b * e;
                    const long a1 = b * g + c * e, a0 = c * g;
                    if (std::abs(a3) < 3 && std::abs(a2) < 3 &&
                        std::abs(a1) < 3 && std::abs(a0) < 3)
                        reducible.insert({a0, a1, a2, a3});
                }
    const long long expected = 625 - static_cast<long long>(reducible.size());
    IrreducibleCount got = count_irreducible(4, 3);
    CHECK(got.irreducible == expected);
}

TEST_CASE("worker partition is exact") {
    IrreducibleCount one = count_irreducible(3, 6, 1);
    IrreducibleCount three = count_irreducible(3, 6, 3);
    CHECK(one.irreducible == three.irreducible);
    CHECK(one.box_points == three.box_points);
}

TEST_CASE("density trend at n = 3") {
    IrreducibleCount got = count_irreducible(3, 12);
    CHECK(got.ratio_main_term > 0.70);
    CHECK(got.ratio_main_term <= 1.0);
    CHECK(got.ratio_strict >= got.ratio_main_term);
}
