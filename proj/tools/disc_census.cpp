#include "CLI11.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "disccensus/census.hpp"
#include "disccensus/errors.hpp"
#include "disccensus/ffpoly.hpp"
#include "disccensus/fielddisc.hpp"
#include "disccensus/int_arith.hpp"
#include "disccensus/lmfdb.hpp"
#include "disccensus/poly.hpp"
#include "disccensus/report.hpp"
#include "disccensus/sieve.hpp"
#include "disccensus/verify.hpp"

using namespace disccensus;

namespace {

std::string fmt(double v) {
    std::ostringstream out;
    out << std::setprecision(10) << v;
    return out.str();
}

mpz_class parse_big(const std::string& text) {
    try {
        return mpz_class(text);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("not an integer: " + text);
    }
}

MonicIntPoly parse_monic(const std::string& text) {
    const IntPoly p = parse_poly(text);
    if (p.degree() < 1 || p.lc() != 1)
        throw std::invalid_argument("poly: expected a monic polynomial of degree >= 1");
    return MonicIntPoly(p);
}

void emit(Report report, const std::string& format) {
    if (format != "csv" && format != "json")
        throw std::invalid_argument("format must be csv or json");
    std::sort(report.metrics.begin(), report.metrics.end());
    const std::string text = format == "json" ? to_json(report) : to_csv(report);
    if (report.config.output_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(report.config.output_path);
        if (!out)
            throw std::invalid_argument("cannot write " + report.config.output_path);
        out << text;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"disc-census: exact discriminant censuses for monic integer polynomials"};
    app.require_subcommand(1);

    int workers = 1;
    long long budget = 20'000'000;
    std::uint64_t seed = 0;
    std::string out_path, format;
    app.add_option("--workers", workers, "worker threads");
    app.add_option("--budget", budget, "enumeration budget");
    app.add_option("--seed", seed, "recorded run seed");
    app.add_option("--out", out_path, "output path (default stdout)");
    app.add_option("--format", format, "csv or json");

    auto* census_cmd = app.add_subcommand("census", "square-free discriminant census over a height box");
    int census_n = 3;
    long census_height = 5;
    std::string group_by = "squarefree";
    census_cmd->add_option("--n", census_n, "degree");
    census_cmd->add_option("--height", census_height, "strict height bound");
    census_cmd->add_option("--group-by", group_by, "squarefree, squarefree-abs or disc");

    auto* trinom_cmd = app.add_subcommand("trinomial", "square values of Delta_n over a trinomial box");
    int tri_n = 5;
    long tri_a = 50, tri_b = 50, tri_c = 1, tri_d = 1;
    std::string tri_s = "1";
    trinom_cmd->add_option("--n", tri_n, "degree");
    trinom_cmd->add_option("--A", tri_a, "a-extent");
    trinom_cmd->add_option("--B", tri_b, "b-extent");
    trinom_cmd->add_option("--C", tri_c, "a-origin");
    trinom_cmd->add_option("--D", tri_d, "b-origin");
    trinom_cmd->add_option("--s", tri_s, "square-free multiplier");

    auto* charsum_cmd = app.add_subcommand("charsum", "character sums over F_p");
    long cs_p = 5;
    int cs_n = 3;
    std::string cs_mode = "sweep";
    charsum_cmd->add_option("--p", cs_p, "prime modulus");
    charsum_cmd->add_option("--n", cs_n, "degree");
    charsum_cmd->add_option("--mode", cs_mode, "sweep or total");

    auto* sieve_cmd = app.add_subcommand("sieve", "square-sieve bound over a height box");
    int sv_n = 3;
    long sv_height = 6, sv_z = 50;
    std::string sv_u = "1";
    sieve_cmd->add_option("--n", sv_n, "degree");
    sieve_cmd->add_option("--height", sv_height, "strict height bound");
    sieve_cmd->add_option("--u", sv_u, "square-free twist");
    sieve_cmd->add_option("--z", sv_z, "window start");

    auto* fd_cmd = app.add_subcommand("fielddisc", "field discriminant via the Dedekind criterion");
    std::string fd_poly;
    fd_cmd->add_option("--poly", fd_poly, "coefficients, highest degree first")->required();

    auto* pell_cmd = app.add_subcommand("pell", "bounded solutions of s r^2 - M c^2 = rhs");
    std::string pl_s = "1", pl_m = "2", pl_rhs = "1";
    long pl_bound = 1000;
    pell_cmd->add_option("--s", pl_s, "r^2 coefficient");
    pell_cmd->add_option("--M", pl_m, "c^2 coefficient");
    pell_cmd->add_option("--rhs", pl_rhs, "right-hand side");
    pell_cmd->add_option("--bound", pl_bound, "|r|, |c| bound");

    auto* verify_cmd = app.add_subcommand("verify", "check the reference discriminant vectors");
    bool slow = false;
    verify_cmd->add_flag("--slow", slow, "include the degree-24 splitting-field vector");

    auto* lmfdb_cmd = app.add_subcommand("lmfdb", "look up a number-field record");
    std::string label;
    bool offline = false;
    lmfdb_cmd->add_option("--label", label, "LMFDB field label")->required();
    lmfdb_cmd->add_flag("--offline", offline, "read the bundled fixture instead of the network");

    for (CLI::App* sub : {census_cmd, trinom_cmd, charsum_cmd, sieve_cmd, fd_cmd, pell_cmd,
                          verify_cmd, lmfdb_cmd})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e);
        std::cerr << "error:invalid-input:" << e.what() << "\n";
        return 2;
    }

    const auto start = std::chrono::steady_clock::now();
    try {
        Report report;
        report.config.seed = seed;
        report.config.worker_count = workers;
        report.config.output_path = out_path;
        report.config.offline = offline;

        if (*census_cmd) {
            report.config.command = "census";
            report.config.params = {{"group-by", group_by},
                                    {"height", std::to_string(census_height)},
                                    {"n", std::to_string(census_n)}};
            CensusKey key;
            std::string key_column;
            if (group_by == "squarefree") {
                key = CensusKey::squarefree_signed;
                key_column = "u";
            } else if (group_by == "squarefree-abs") {
                key = CensusKey::squarefree_absolute;
                key_column = "u_abs";
            } else if (group_by == "disc") {
                key = CensusKey::disc_value;
                key_column = "disc";
            } else {
                throw std::invalid_argument("group-by must be squarefree, squarefree-abs or disc");
            }
            const CountTable table = count_by_squarefree_class(
                HeightBox::strict(census_n, census_height), key, workers, budget);
            report.columns = {key_column, "count"};
            long long max_count = 0;
            for (const auto& [u, c] : table.counts) {
                report.rows.push_back({u.get_str(), std::to_string(c)});
                max_count = std::max(max_count, c);
            }
            report.metrics = {{"classes", std::to_string(table.counts.size())},
                              {"max_count", std::to_string(max_count)},
                              {"total", std::to_string(table.total)}};
            emit(report, format.empty() ? "csv" : format);
        } else if (*trinom_cmd) {
            report.config.command = "trinomial";
            report.config.params = {{"A", std::to_string(tri_a)},
                                    {"B", std::to_string(tri_b)},
                                    {"C", std::to_string(tri_c)},
                                    {"D", std::to_string(tri_d)},
                                    {"n", std::to_string(tri_n)},
                                    {"s", tri_s}};
            const TrinomialCount counts =
                trinomial_count(tri_n, tri_a, tri_b, tri_c, tri_d, parse_big(tri_s), budget);
            report.columns = {"a", "count"};
            for (const auto& [a, c] : counts.per_a)
                report.rows.push_back({std::to_string(a), std::to_string(c)});
            report.metrics = {{"per_a_max", std::to_string(counts.per_a_max)},
                              {"total", std::to_string(counts.total)}};
            emit(report, format.empty() ? "csv" : format);
        } else if (*charsum_cmd) {
            report.config.command = "charsum";
            report.config.params = {{"mode", cs_mode},
                                    {"n", std::to_string(cs_n)},
                                    {"p", std::to_string(cs_p)}};
            if (cs_mode == "sweep") {
                const SweepResult sweep = mixed_charsum_sweep(cs_p, cs_n, budget, workers);
                std::string argmax;
                for (std::size_t i = 0; i < sweep.argmax.size(); ++i)
                    argmax += (i ? "," : "") + std::to_string(sweep.argmax[i]);
                report.metrics = {{"argmax", argmax},
                                  {"max_abs", fmt(sweep.max_abs)},
                                  {"max_ratio", fmt(sweep.max_ratio)}};
            } else if (cs_mode == "total") {
                const mpz_class total = charsum_disc_total(cs_p, cs_n, budget, workers);
                report.metrics = {{"total", total.get_str()}};
            } else {
                throw std::invalid_argument("mode must be sweep or total");
            }
            emit(report, format.empty() ? "json" : format);
        } else if (*sieve_cmd) {
            report.config.command = "sieve";
            report.config.params = {{"height", std::to_string(sv_height)},
                                    {"n", std::to_string(sv_n)},
                                    {"u", sv_u},
                                    {"z", std::to_string(sv_z)}};
            const SieveBound bound =
                sieve_upper_bound(sv_n, sv_height, parse_big(sv_u), sv_z, workers, budget);
            report.metrics = {{"condition", bound.condition_holds ? "holds" : "estimate"},
                              {"exact_squares", std::to_string(bound.exact_squares)},
                              {"max_omega", std::to_string(bound.max_omega)},
                              {"pi_count", std::to_string(bound.pi_count)},
                              {"value", fmt(bound.value)},
                              {"weight_sum", std::to_string(bound.weight_sum)}};
            if (sv_n >= 3 && sv_height >= 3)
                report.metrics.push_back({"optimal_z", fmt(optimal_z(sv_n, sv_height))});
            emit(report, format.empty() ? "json" : format);
        } else if (*fd_cmd) {
            report.config.command = "fielddisc";
            report.config.params = {{"poly", fd_poly}};
            const MonicIntPoly f = parse_monic(fd_poly);
            const DedekindReport fd = field_disc(f);
            report.columns = {"p", "maximal"};
            for (const auto& [p, verdict] : fd.tested_primes)
                report.rows.push_back(
                    {p.get_str(), verdict == PMaximality::maximal ? "true" : "false"});
            report.metrics = {
                {"certified", fd.certified_field_disc ? "true" : "false"},
                {"disc", fd.disc.get_str()},
                {"field_disc", fd.certified_field_disc ? fd.certified_field_disc->get_str()
                                                       : "uncertified"},
                {"poly", format_poly(f.poly())},
                {"sf_u", fd.sf_part_of_field_disc.u.get_str()},
                {"sf_v", fd.sf_part_of_field_disc.v.get_str()}};
            emit(report, format.empty() ? "json" : format);
        } else if (*pell_cmd) {
            report.config.command = "pell";
            report.config.params = {{"M", pl_m},
                                    {"bound", std::to_string(pl_bound)},
                                    {"rhs", pl_rhs},
                                    {"s", pl_s}};
            const PellCount pc =
                pell_count(parse_big(pl_s), parse_big(pl_m), parse_big(pl_rhs), pl_bound, budget);
            report.metrics = {{"count", std::to_string(pc.count)},
                              {"cross_check", pc.cross_check
                                                  ? std::to_string(*pc.cross_check)
                                                  : "none"}};
            emit(report, format.empty() ? "json" : format);
        } else if (*verify_cmd) {
            bool all_pass = true;
            for (const VectorResult& v : verify_reference_vectors(slow)) {
                const char* tag = v.skipped ? "SKIP" : (v.pass ? "PASS" : "FAIL");
                std::cout << "[" << tag << "] " << v.name << ": " << v.detail << "\n";
                all_pass = all_pass && v.pass;
            }
            if (!all_pass) {
                std::cerr << "error:verify:reference vector mismatch\n";
                return 1;
            }
        } else if (*lmfdb_cmd) {
            report.config.command = "lmfdb";
            report.config.params = {{"label", label}};
            const FieldRecord rec = lmfdb_lookup(label, offline);
            report.metrics = {{"degree", std::to_string(rec.degree)},
                              {"disc_abs", rec.disc_abs.get_str()},
                              {"disc_sign", std::to_string(rec.disc_sign)},
                              {"label", rec.label},
                              {"source", rec.source}};
            if (static_cast<int>(rec.coeffs.size()) == rec.degree + 1 &&
                rec.coeffs.back() == 1 && rec.degree >= 2) {
                std::vector<mpz_class> low(rec.coeffs.begin(), rec.coeffs.end() - 1);
                const mpz_class poly_disc = discriminant(MonicIntPoly(rec.degree, low));
                const mpz_class delta = rec.disc_sign * rec.disc_abs;
                bool square_ratio = false;
                if (delta != 0 && mpz_divisible_p(poly_disc.get_mpz_t(), delta.get_mpz_t())) {
                    const mpz_class ratio = poly_disc / delta;
                    square_ratio = ratio > 0 && is_perfect_square(ratio);
                }
                report.metrics.push_back({"disc_ratio_square", square_ratio ? "true" : "false"});
                report.metrics.push_back({"poly_disc", poly_disc.get_str()});
            }
            emit(report, format.empty() ? "json" : format);
        }

        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
        std::cerr << "# workers=" << workers << " runtime=" << std::fixed
                  << std::setprecision(3) << elapsed.count() << "s\n";
        return 0;
    } catch (const budget_error& e) {
        std::cerr << "error:budget:" << e.what() << "\n";
        return 3;
    } catch (const network_error& e) {
        std::cerr << "error:network:" << e.what() << "\n";
        return 4;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error:invalid-input:" << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error:internal:" << e.what() << "\n";
        return 1;
    }
}
