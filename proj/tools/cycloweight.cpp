// cycloweight -- irreducible cyclic codes over F_q for lengths whose prime
// divisors all divide q-1: factorization of x^n - 1, closed-form weight
// enumerators, brute-force verification, channel error probabilities.
#include <cstdio>
#include <iostream>
#include <numeric>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "cycloweight/catalog.hpp"
#include "cycloweight/errors.hpp"
#include "cycloweight/oracle.hpp"

namespace cw = cycloweight;

namespace {

cw::FieldTower tower_for(std::uint32_t q) {
    auto f = cw::numth::factorize(q);
    if (f.size() != 1) throw cw::InvalidArgumentError("q must be a prime power");
    return cw::FieldTower::build(static_cast<std::uint32_t>(f[0].prime), f[0].exponent);
}

int run_enumerate(std::uint32_t q, std::uint32_t n, const std::string& format,
                  bool expand, const std::string& check_poly) {
    cw::CaseParameters params = cw::case_parameters(n, q);
    cw::FieldTower tower = tower_for(q);
    bool want_filter = !check_poly.empty();
    bool need_expand = expand || (want_filter && format == "csv");
    cw::CatalogDocument doc = cw::build_catalog(tower, params, need_expand);

    if (want_filter) {
        std::string key = cw::render_poly(cw::parse_poly(tower, check_poly));
        cw::CatalogDocument filtered = doc;
        filtered.groups.clear();
        filtered.summary.clear();
        std::optional<cw::CatalogRow> hit;
        for (const auto& g : doc.groups) {
            cw::CatalogGroup fg = g;
            fg.rows.clear();
            for (const auto& row : g.rows)
                if (row.h == key) {
                    fg.rows.push_back(row);
                    hit = row;
                }
            if (!fg.rows.empty()) {
                filtered.summary.emplace_back(fg.header, fg.rows.size());
                filtered.groups.push_back(std::move(fg));
            }
        }
        if (!hit)
            throw cw::InvalidArgumentError(
                "check polynomial is not an irreducible factor of x^n - 1");
        if (format == "csv") {
            // single-code expanded distribution
            std::string out = "weight,count\n";
            for (const auto& [w, c] : *hit->expanded)
                out += std::to_string(w) + "," + c + "\n";
            std::fputs(out.c_str(), stdout);
            return 0;
        }
        doc = std::move(filtered);
    }

    if (format == "text")
        std::fputs(cw::render_text(doc).c_str(), stdout);
    else if (format == "json")
        std::fputs(cw::render_json(doc).c_str(), stdout);
    else if (expand)
        std::fputs(cw::render_csv_expanded(doc).c_str(), stdout);
    else
        std::fputs(cw::render_csv(doc).c_str(), stdout);
    return 0;
}

int run_factor(std::uint32_t q, std::uint32_t n, bool with_oracle) {
    cw::FieldTower tower = tower_for(q);
    if (std::gcd<std::uint64_t>(n, q) != 1)
        throw cw::InvalidLengthError("gcd(n, q) != 1");

    std::vector<cw::Poly> closed;
    bool in_regime = true;
    std::string regime_note;
    try {
        cw::CaseParameters params = cw::case_parameters(n, q);
        for (const auto& f : cw::factor_xn_minus_1(params, tower))
            closed.push_back(cw::factor_poly(tower, f));
    } catch (const cw::OutOfRegimeError& e) {
        if (!with_oracle) throw;
        in_regime = false;
        regime_note = e.what();
    }

    if (!with_oracle) {
        for (const auto& f : closed) std::printf("%s\n", cw::render_poly(f).c_str());
        return 0;
    }

    auto oracle = cw::coset_oracle(n, tower);
    if (!in_regime) {
        std::fprintf(stderr, "note: %s; listing coset-oracle factors only\n",
                     regime_note.c_str());
        for (const auto& f : oracle) std::printf("%s\n", cw::render_poly(f).c_str());
        return 0;
    }
    for (const auto& f : closed) std::printf("%s\n", cw::render_poly(f).c_str());
    bool same = closed == oracle;
    std::printf("oracle agreement: %zu closed-form vs %zu oracle factors: %s\n",
                closed.size(), oracle.size(), same ? "identical" : "DIFFERENT");
    if (!same) {
        for (const auto& f : oracle)
            std::printf("oracle: %s\n", cw::render_poly(f).c_str());
        return 1;
    }
    return 0;
}

int run_verify(std::uint32_t q, std::uint32_t n, std::uint64_t cap,
               const std::string& format) {
    cw::CaseParameters params = cw::case_parameters(n, q);
    cw::FieldTower tower = tower_for(q);
    cw::InstanceReport rep = cw::verify_instance(tower, params, cap);
    if (format == "json")
        std::fputs(cw::render_instance_report_json(rep).c_str(), stdout);
    else
        std::fputs(cw::render_instance_report_text(rep).c_str(), stdout);
    return rep.all_passed() ? 0 : 1;
}

int run_pue(std::uint32_t q, std::uint32_t n, const std::string& check_poly,
            double p, const std::string& channel, std::uint64_t cap) {
    if (channel != "binary" && channel != "qary")
        throw cw::InvalidArgumentError("channel must be binary or qary");
    if (channel == "binary" && q != 2)
        throw cw::InvalidArgumentError("binary channel requires q = 2");
    cw::FieldTower tower = tower_for(q);
    if (std::gcd<std::uint64_t>(n, q) != 1)
        throw cw::InvalidLengthError("gcd(n, q) != 1");
    cw::Poly h = cw::parse_poly(tower, check_poly);

    // Closed form when h is one of the in-regime irreducible factors;
    // otherwise brute force under the cap.
    cw::WeightMap dist;
    bool have = false;
    try {
        cw::CaseParameters params = cw::case_parameters(n, q);
        for (const auto& f : cw::factor_xn_minus_1(params, tower)) {
            if (cw::factor_poly(tower, f) == h) {
                dist = *cw::build_code_record(tower, f, params).enumerator.expanded();
                have = true;
                break;
            }
        }
    } catch (const cw::OutOfRegimeError&) {
    }
    if (!have) {
        cw::CodeRecord rec;
        rec.q = q;
        rec.n = n;
        rec.check_poly = h;
        rec.generator_poly = cw::check_to_generator(tower, n, h);  // validates h
        rec.k = static_cast<std::uint32_t>(h.degree());
        dist = cw::brute_force_distribution(tower, rec, cap);
        dist[0] = cw::BigUInt(1);
    }

    std::fprintf(stderr, "channel: %s\n",
                 channel == "binary" ? "binary symmetric"
                                     : "q-ary symmetric (uniform over wrong symbols)");
    long double prob = cw::undetected_error_probability(dist, q, n, p);
    if (prob == 0.0L)
        std::printf("0.000000000000\n");
    else
        std::printf("%.11Le\n", prob);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"irreducible cyclic codes and their weight enumerators"};
    app.require_subcommand(1);

    std::uint32_t q = 0, n = 0;
    std::string format = "text";
    bool expand = false, with_oracle = false;
    std::uint64_t cap = cw::kDefaultBruteForceCap;
    std::string check_poly;
    double p = 0.0;
    std::string channel = "qary";

    auto* enumerate = app.add_subcommand(
        "enumerate", "catalog of all irreducible cyclic codes for (q, n)");
    enumerate->add_option("--q", q, "field size (prime power)")->required();
    enumerate->add_option("--n", n, "code length")->required();
    enumerate->add_option("--format", format, "text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    enumerate->add_flag("--expand", expand, "include expanded weight distributions");
    enumerate->add_option("--check-poly", check_poly,
                          "restrict to the code with this check polynomial");

    auto* factor = app.add_subcommand("factor", "irreducible factors of x^n - 1");
    factor->add_option("--q", q, "field size (prime power)")->required();
    factor->add_option("--n", n, "code length")->required();
    factor->add_flag("--oracle", with_oracle,
                     "cross-check with the cyclotomic-coset oracle (also lifts "
                     "the closed-form regime restriction)");

    auto* verify = app.add_subcommand(
        "verify", "verify closed forms against brute force for every code");
    verify->add_option("--q", q, "field size (prime power)")->required();
    verify->add_option("--n", n, "code length")->required();
    verify->add_option("--cap", cap, "codeword enumeration cap (default 10^6)");
    verify->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    auto* pue = app.add_subcommand(
        "pue", "undetected-error probability on a symmetric channel");
    pue->add_option("--q", q, "field size (prime power)")->required();
    pue->add_option("--n", n, "code length")->required();
    pue->add_option("--check-poly", check_poly, "check polynomial, e.g. \"x^2+1\"")
        ->required();
    pue->add_option("--p", p, "symbol error probability")->required();
    pue->add_option("--channel", channel, "binary or qary")
        ->check(CLI::IsMember({"binary", "qary"}));
    pue->add_option("--cap", cap, "enumeration cap for non-closed-form codes");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // --help stays 0, bad flags are invalid input
    }

    try {
        if (enumerate->parsed()) return run_enumerate(q, n, format, expand, check_poly);
        if (factor->parsed()) return run_factor(q, n, with_oracle);
        if (verify->parsed()) return run_verify(q, n, cap, format);
        if (pue->parsed()) return run_pue(q, n, check_poly, p, channel, cap);
    } catch (const cw::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 2;
}
