#include "disccensus/verify.hpp"

namespace disccensus {

namespace {

const char* const kDeg24Low[] = {
    "1779496656001", "-2155371295770", "2030693398335", "-705674357100",
    "232838692457",  "34467394920",    "-24575577355",  "9907474500",
    "999415025",     "-222888810",     "228621050",     "-62876100",
    "18840027",      "3867780",        "-1544060",      "225900",
    "34895",         "-18690",         "5695",          "0",
    "-70",           "90",             "0",             "0",
};

struct PrimePower {
    const char* prime;
    unsigned long exponent;
};

const PrimePower kDeg24Factors[] = {
    {"2", 144},   {"3", 24},     {"17", 8},      {"37", 4},
    {"73", 2},    {"83", 2},     {"101", 2},     {"181", 2},
    {"227", 2},   {"283", 12},   {"359", 4},     {"8867", 8},
    {"9473", 2},  {"47777", 4},  {"1271971", 2}, {"1660069", 4},
    {"970293859", 2},            {"4552394491", 2},
    {"857054278934851321", 2},   {"1521484680115687561", 2},
};

} // namespace

const MonicIntPoly& splitting_poly_deg24() {
    static const MonicIntPoly f = [] {
        std::vector<mpz_class> low;
        for (const char* c : kDeg24Low)
            low.emplace_back(c);
        return MonicIntPoly(24, std::move(low));
    }();
    return f;
}

const mpz_class& printed_disc_deg24() {
    static const mpz_class value = [] {
        mpz_class product = 1, power;
        for (const PrimePower& pp : kDeg24Factors) {
            mpz_pow_ui(power.get_mpz_t(), mpz_class(pp.prime).get_mpz_t(), pp.exponent);
            product *= power;
        }
        return product;
    }();
    return value;
}

std::vector<VectorResult> verify_reference_vectors(bool slow) {
    std::vector<VectorResult> out;

    const MonicIntPoly quartic(4, {mpz_class(-2), 0, 0, 0});
    const mpz_class disc_quartic = discriminant(quartic);
    out.push_back({"disc(X^4-2)", disc_quartic == -2048, false,
                   "computed " + disc_quartic.get_str() + ", expected -2^11"});

    const MonicIntPoly octic(8, {mpz_class(2500), 0, 0, 0, 28, 0, 0, 0});
    const mpz_class disc_octic = discriminant(octic);
    mpz_class expected_octic = 6561; // 3^8
    expected_octic <<= 62;
    expected_octic *= mpz_class("244140625"); // 5^12
    out.push_back({"disc(X^8+28X^4+2500)", disc_octic == expected_octic, false,
                   "computed " + disc_octic.get_str() + ", expected 2^62*3^8*5^12"});

    const mpq_class ratio(mpz_class(16777216), disc_quartic); // Delta = 2^24
    mpq_class reduced = ratio;
    reduced.canonicalize();
    out.push_back({"splitting-field ratio", reduced == -8192 && reduced < 0, false,
                   "Delta/Disc = " + reduced.get_str() +
                       " = -2^13 < 0: not a rational square"});

    const mpz_class disc_trinom = trinomial_disc(4, -1, -1);
    out.push_back({"disc(X^4-X-1)", disc_trinom == -283 && abs(disc_trinom) == 283,
                   false,
                   "computed " + disc_trinom.get_str() +
                       "; the reference prints the absolute value 283"});

    VectorResult deg24;
    deg24.name = "disc(deg-24 splitting poly)";
    if (slow) {
        const mpz_class computed = discriminant(splitting_poly_deg24());
        deg24.pass = computed == printed_disc_deg24();
        deg24.detail = deg24.pass ? "matches the printed 20-term factorization"
                                  : "computed value differs from the printed factorization";
    } else {
        deg24.pass = true;
        deg24.skipped = true;
        deg24.detail = "skipped; enable with --slow";
    }
    out.push_back(deg24);

    mpz_class cofactor;
    const unsigned long exp283 =
        mpz_remove(cofactor.get_mpz_t(), printed_disc_deg24().get_mpz_t(),
                   mpz_class(283).get_mpz_t());
    out.push_back({"283-exponent parity", exp283 == 12 && exp283 % 2 == 0, false,
                   "exponent of 283 in disc is " + std::to_string(exp283) +
                       " (even), so the field-disc ratio is not a rational square"});

    return out;
}

} // namespace disccensus
