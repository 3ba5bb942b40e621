// Acceptance suite: one checkable criterion per function, each printing a
// single PASS/FAIL line. Run with no arguments for all criteria or with a
// criterion number to run one.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "cycloweight/catalog.hpp"
#include "cycloweight/errors.hpp"
#include "cycloweight/oracle.hpp"
#include "grid.hpp"

using namespace cycloweight;

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
}

FieldTower tower_for(std::uint32_t q) {
    auto f = numth::factorize(q);
    return FieldTower::build(static_cast<std::uint32_t>(f[0].prime), f[0].exponent);
}

struct GroupExpectation {
    const char* header;
    const char* enumerator;
    std::set<std::string> rows;
};

// The q=31, n=288 reference catalog, frozen row for row.
const std::vector<GroupExpectation>& reference_catalog_q31_n288() {
    static const std::vector<GroupExpectation> expected{
        {"[31;288,1,288]",
         "1+30z^288",
         {"x + 1", "x + 5", "x + 6", "x + 25", "x + 26", "x + 30"}},
        {"[31;288,2,144]", "(1+30z^144)^2", {"x^2 + 1", "x^2 + 5", "x^2 + 25"}},
        {"[31;288,3,96]",
         "(1+30z^96)^3",
         {"x^3 + 5", "x^3 + 6", "x^3 + 25", "x^3 + 26"}},
        {"[31;288,6,48]", "(1+30z^48)^6", {"x^6 + 5", "x^6 + 25"}},
        {"[31;288,2,216]",
         "1+120z^216+840z^288",
         {"x^2 + 8x + 1", "x^2 + 9x + 25", "x^2 + 14x + 5", "x^2 + 17x + 5",
          "x^2 + 22x + 25", "x^2 + 23x + 1"}},
        {"[31;288,2,252]",
         "1+240z^252+720z^288",
         {"x^2 + x + 5", "x^2 + 5x + 1", "x^2 + 6x + 25", "x^2 + 8x + 25",
          "x^2 + 9x + 5", "x^2 + 14x + 1", "x^2 + 17x + 1", "x^2 + 22x + 5",
          "x^2 + 23x + 25", "x^2 + 25x + 25", "x^2 + 26x + 1", "x^2 + 30x + 5"}},
        {"[31;288,2,270]",
         "1+480z^270+480z^288",
         {"x^2 + 2x + 5",   "x^2 + 4x + 1",   "x^2 + 4x + 5",  "x^2 + 7x + 5",
          "x^2 + 7x + 25",  "x^2 + 8x + 5",   "x^2 + 9x + 1",  "x^2 + 10x + 1",
          "x^2 + 11x + 1",  "x^2 + 11x + 25", "x^2 + 12x + 25", "x^2 + 14x + 25",
          "x^2 + 17x + 25", "x^2 + 19x + 25", "x^2 + 20x + 1", "x^2 + 20x + 25",
          "x^2 + 21x + 1",  "x^2 + 22x + 1",  "x^2 + 23x + 5", "x^2 + 24x + 5",
          "x^2 + 24x + 25", "x^2 + 27x + 1",  "x^2 + 27x + 5", "x^2 + 29x + 5"}},
        {"[31;288,6,72]",
         "(1+120z^72+840z^96)^3",
         {"x^6 + 9x^3 + 25", "x^6 + 14x^3 + 5", "x^6 + 17x^3 + 5",
          "x^6 + 22x^3 + 25"}},
        {"[31;288,6,84]",
         "(1+240z^84+720z^96)^3",
         {"x^6 + x^3 + 5", "x^6 + 6x^3 + 25", "x^6 + 8x^3 + 25", "x^6 + 9x^3 + 5",
          "x^6 + 22x^3 + 5", "x^6 + 23x^3 + 25", "x^6 + 25x^3 + 25",
          "x^6 + 30x^3 + 5"}},
        {"[31;288,6,90]",
         "(1+480z^90+480z^96)^3",
         {"x^6 + 2x^3 + 5", "x^6 + 4x^3 + 5", "x^6 + 7x^3 + 5", "x^6 + 7x^3 + 25",
          "x^6 + 8x^3 + 5", "x^6 + 11x^3 + 25", "x^6 + 12x^3 + 25",
          "x^6 + 14x^3 + 25", "x^6 + 17x^3 + 25", "x^6 + 19x^3 + 25",
          "x^6 + 20x^3 + 25", "x^6 + 23x^3 + 5", "x^6 + 24x^3 + 5",
          "x^6 + 24x^3 + 25", "x^6 + 27x^3 + 5", "x^6 + 29x^3 + 5"}},
    };
    return expected;
}

bool criterion_1() {
    auto start = std::chrono::steady_clock::now();
    FieldTower tower = tower_for(31);
    CatalogDocument doc = build_catalog(tower, case_parameters(288, 31), false);

    std::size_t codes = 0;
    for (const auto& g : doc.groups) codes += g.rows.size();
    bool ok = codes == 85 && doc.groups.size() == 10;

    const auto& expected = reference_catalog_q31_n288();
    if (doc.groups.size() == expected.size()) {
        for (std::size_t i = 0; i < expected.size(); ++i) {
            const auto& g = doc.groups[i];
            const auto& e = expected[i];
            if (g.header != e.header) {
                std::printf("  group %zu header %s, expected %s\n", i,
                            g.header.c_str(), e.header);
                ok = false;
            }
            std::set<std::string> rows;
            for (const auto& row : g.rows) {
                rows.insert(row.h);
                if (row.enumerator != e.enumerator) {
                    std::printf("  %s: enumerator %s, expected %s\n", g.header.c_str(),
                                row.enumerator.c_str(), e.enumerator);
                    ok = false;
                }
            }
            if (rows != e.rows) {
                std::printf("  %s: row set differs from the reference table\n",
                            g.header.c_str());
                ok = false;
            }
        }
    } else {
        ok = false;
    }
    double elapsed = seconds_since(start);
    if (elapsed >= 5.0) {
        std::printf("  took %.2fs, budget 5s\n", elapsed);
        ok = false;
    }
    return ok;
}

bool criterion_2() {
    auto start = std::chrono::steady_clock::now();
    bool ok = true;
    std::size_t pairs = 0, oracle_checked = 0;
    std::uint32_t cur_q = 0;
    FieldTower tower = tower_for(2);
    for (const auto& gp : testgrid::in_regime_grid()) {
        if (gp.q != cur_q) {
            tower = tower_for(gp.q);
            cur_q = gp.q;
        }
        CaseParameters params = case_parameters(gp.n, gp.q);
        auto factors = factor_xn_minus_1(params, tower);
        Poly prod = poly_one(tower);
        std::vector<Poly> polys;
        polys.reserve(factors.size());
        for (const auto& f : factors) {
            polys.push_back(factor_poly(tower, f));
            prod = poly_mul(tower, prod, polys.back());
        }
        if (!(prod == poly_xn_minus_1(tower, gp.n))) {
            std::printf("  product identity fails at q=%u n=%u\n", gp.q, gp.n);
            ok = false;
        }
        ++pairs;
        try {
            auto oracle = coset_oracle(gp.n, tower);
            std::sort(polys.begin(), polys.end(), [](const Poly& a, const Poly& b) {
                return poly_compare(a, b) < 0;
            });
            if (!(polys == oracle)) {
                std::printf("  oracle disagreement at q=%u n=%u\n", gp.q, gp.n);
                ok = false;
            }
            ++oracle_checked;
        } catch (const OracleOutOfRangeError&) {
            // degree cap; the product identity still covered this pair
        }
    }
    double elapsed = seconds_since(start);
    std::printf("  %zu pairs, %zu oracle-checked, %.1fs\n", pairs, oracle_checked,
                elapsed);
    if (elapsed >= 120.0) ok = false;
    return ok;
}

bool criterion_3() {
    auto start = std::chrono::steady_clock::now();
    bool ok = true;
    std::size_t verified = 0;
    std::uint32_t cur_q = 0;
    FieldTower tower = tower_for(2);
    for (const auto& gp : testgrid::in_regime_grid()) {
        if (gp.n == 1) continue;  // x - 1 is the whole modulus, no proper code
        if (gp.q != cur_q) {
            tower = tower_for(gp.q);
            cur_q = gp.q;
        }
        CaseParameters params = case_parameters(gp.n, gp.q);
        for (const auto& f : factor_xn_minus_1(params, tower)) {
            CodeRecord rec = build_code_record(tower, f, params);
            double logsize = rec.k * std::log2(static_cast<double>(rec.q));
            if (logsize > 20.0) continue;  // fast pre-filter, 2^20 > 10^6 check below
            std::uint64_t size = 1;
            bool over = false;
            for (std::uint32_t i = 0; i < rec.k; ++i) {
                size *= rec.q;
                if (size > 1'000'000) {
                    over = true;
                    break;
                }
            }
            if (over) continue;
            WeightMap brute = brute_force_distribution(tower, rec, 1'000'000);
            if (!(brute == *rec.enumerator.expanded())) {
                std::printf("  distribution mismatch at q=%u n=%u h=%s\n", gp.q, gp.n,
                            render_poly(rec.check_poly).c_str());
                ok = false;
            }
            ++verified;
        }
    }
    double elapsed = seconds_since(start);
    std::printf("  %zu codes brute-force verified, %.1fs\n", verified, elapsed);
    if (elapsed >= 300.0) ok = false;
    return ok;
}

bool criterion_4() {
    bool ok = true;
    std::size_t codes = 0;
    std::uint32_t cur_q = 0;
    FieldTower tower = tower_for(2);
    for (const auto& gp : testgrid::in_regime_grid()) {
        if (gp.n == 1) continue;  // x - 1 is the whole modulus, no proper code
        if (gp.q != cur_q) {
            tower = tower_for(gp.q);
            cur_q = gp.q;
        }
        CaseParameters params = case_parameters(gp.n, gp.q);
        for (const auto& f : factor_xn_minus_1(params, tower)) {
            CodeRecord rec = build_code_record(tower, f, params);
            BigUInt sum;
            for (const auto& [w, c] : *rec.enumerator.expanded()) sum += c;
            if (!(sum == BigUInt::pow(BigUInt(rec.q), rec.k))) {
                std::printf("  mass violation at q=%u n=%u h=%s\n", gp.q, gp.n,
                            render_poly(rec.check_poly).c_str());
                ok = false;
            }
            ++codes;
        }
    }
    std::printf("  %zu codes checked\n", codes);
    return ok;
}

bool criterion_5() {
    bool ok = true;
    std::size_t codes = 0;
    std::uint32_t cur_q = 0;
    FieldTower tower = tower_for(2);
    for (const auto& gp : testgrid::in_regime_grid()) {
        if (gp.n == 1) continue;  // x - 1 is the whole modulus, no proper code
        if (gp.q != cur_q) {
            tower = tower_for(gp.q);
            cur_q = gp.q;
        }
        CaseParameters params = case_parameters(gp.n, gp.q);
        for (const auto& f : factor_xn_minus_1(params, tower)) {
            CodeRecord rec = build_code_record(tower, f, params);
            std::uint32_t modulus =
                f.kind == FactorKind::binomial
                    ? rec.n / f.degree
                    : rec.n / (f.t << (params.r - *f.nu2u));
            for (const auto& [w, c] : *rec.enumerator.expanded())
                if (!c.is_zero() && w % modulus != 0) {
                    std::printf("  divisibility violation at q=%u n=%u h=%s w=%u\n",
                                gp.q, gp.n, render_poly(rec.check_poly).c_str(), w);
                    ok = false;
                }
            ++codes;
        }
    }
    std::printf("  %zu codes checked\n", codes);
    return ok;
}

bool criterion_6() {
    auto start = std::chrono::steady_clock::now();
    bool ok = true;
    std::size_t codes = 0;
    std::uint32_t cur_q = 0;
    FieldTower tower = tower_for(2);
    for (const auto& gp : testgrid::in_regime_grid()) {
        if (gp.q > 9) continue;
        if (gp.q != cur_q) {
            tower = tower_for(gp.q);
            cur_q = gp.q;
        }
        CaseParameters params = case_parameters(gp.n, gp.q);
        if (params.tag != CaseTag::mixed) continue;
        for (const auto& f : factor_xn_minus_1(params, tower)) {
            if (f.kind != FactorKind::trinomial) continue;
            CodeRecord rec = build_code_record(tower, f, params);
            std::uint32_t t = f.t, d = rec.d, full = rec.n / t;
            auto lambda = lambda_set(tower, f.a, params.r, *f.nu2u);
            const Poly& g = rec.generator_poly;
            Poly xtg;
            for (const auto& [deg, c] : g.terms) xtg.terms.emplace(deg + t, c);
            for (std::uint32_t lv = 0; lv < gp.q; ++lv) {
                Fq lam{lv};
                std::uint32_t w = hamming_weight(
                    poly_sub(tower, g, poly_scale(tower, lam, xtg)));
                bool inside = std::binary_search(lambda.begin(), lambda.end(), lam);
                if (w != (inside ? d : full)) {
                    std::printf("  weight case fails at q=%u n=%u h=%s lambda=%u\n",
                                gp.q, gp.n, render_poly(rec.check_poly).c_str(), lv);
                    ok = false;
                }
            }
            std::uint64_t pairs = 0;
            for (std::uint32_t mv = 0; mv < gp.q; ++mv)
                for (std::uint32_t lv = 0; lv < gp.q; ++lv) {
                    Poly combo =
                        poly_add(tower, poly_scale(tower, Fq{mv}, g),
                                 poly_scale(tower, Fq{lv}, xtg));
                    if (hamming_weight(combo) == d) ++pairs;
                }
            if (pairs != pair_weight_count(gp.q, params.r, *f.nu2u)) {
                std::printf("  pair count fails at q=%u n=%u h=%s\n", gp.q, gp.n,
                            render_poly(rec.check_poly).c_str());
                ok = false;
            }
            ++codes;
        }
    }
    double elapsed = seconds_since(start);
    std::printf("  %zu trinomial codes exhaustively checked, %.1fs\n", codes, elapsed);
    if (elapsed >= 30.0) ok = false;
    return ok;
}

bool criterion_7() {
    bool ok = true;
    for (auto [q, n] : {std::pair<std::uint32_t, std::uint32_t>{31, 288}, {3, 8}}) {
        auto qf = numth::factorize(q);
        std::uint32_t p = static_cast<std::uint32_t>(qf[0].prime), e = qf[0].exponent;
        FieldTower tower = FieldTower::build(p, e);
        // next generator above the canonical one
        std::uint64_t alt = 0;
        std::uint64_t group = tower.ext_group_order();
        for (std::uint64_t v = tower.encode2(tower.alpha()) + 1; v <= group; ++v) {
            try {
                if (tower.element_order2(tower.decode2(v)) == group) {
                    alt = v;
                    break;
                }
            } catch (const InvalidArgumentError&) {
            }
        }
        if (alt == 0) {
            std::printf("  no alternative generator found for q=%u\n", q);
            return false;
        }
        FieldTower other = FieldTower::build_with_alpha(p, e, alt);
        CaseParameters params = case_parameters(n, q);

        auto snapshot = [&params](const FieldTower& t) {
            std::vector<std::tuple<std::string, std::uint32_t, std::string>> out;
            for (const auto& f : factor_xn_minus_1(params, t)) {
                CodeRecord rec = build_code_record(t, f, params);
                out.emplace_back(render_poly(rec.check_poly), rec.d,
                                 rec.enumerator.render());
            }
            std::sort(out.begin(), out.end());
            return out;
        };
        if (snapshot(tower) != snapshot(other)) {
            std::printf("  code multiset changed under alpha' for q=%u n=%u\n", q, n);
            ok = false;
        }
    }
    return ok;
}

bool criterion_8() {
    auto start = std::chrono::steady_clock::now();
    FieldTower tower = tower_for(3);
    CaseParameters params = case_parameters(8, 3);
    auto factors = factor_xn_minus_1(params, tower);
    bool ok = factors.size() == 5;

    // expected records: (h, k, d, factored enumerator, distribution)
    using Dist = std::vector<std::pair<std::uint32_t, std::uint64_t>>;
    std::multiset<std::string> expected{
        "x + 1|1|8|1+2z^8",       "x + 2|1|8|1+2z^8",      "x^2 + 1|2|4|(1+2z^4)^2",
        "x^2 + x + 2|2|6|1+8z^6", "x^2 + 2x + 2|2|6|1+8z^6"};
    std::map<std::string, Dist> expected_dist{
        {"x + 1", {{0, 1}, {8, 2}}},
        {"x + 2", {{0, 1}, {8, 2}}},
        {"x^2 + 1", {{0, 1}, {4, 4}, {8, 4}}},
        {"x^2 + x + 2", {{0, 1}, {6, 8}}},
        {"x^2 + 2x + 2", {{0, 1}, {6, 8}}}};

    std::multiset<std::string> got;
    for (const auto& f : factors) {
        CodeRecord rec = build_code_record(tower, f, params);
        std::string h = render_poly(rec.check_poly);
        got.insert(h + "|" + std::to_string(rec.k) + "|" + std::to_string(rec.d) + "|" +
                   rec.enumerator.render());
        WeightMap want;
        for (auto [w, c] : expected_dist.at(h)) want.emplace(w, BigUInt(c));
        if (!(*rec.enumerator.expanded() == want) ||
            !(brute_force_distribution(tower, rec, 1000) == want)) {
            std::printf("  distribution wrong for h=%s\n", h.c_str());
            ok = false;
        }
    }
    if (got != expected) {
        std::printf("  catalog differs from the expected five codes\n");
        ok = false;
    }
    double elapsed = seconds_since(start);
    if (elapsed >= 1.0) {
        std::printf("  took %.2fs, budget 1s\n", elapsed);
        ok = false;
    }
    return ok;
}

bool criterion_9() {
    bool ok = true;
    std::size_t instances = 0, audits = 0, flagged = 0;
    std::uint32_t cur_q = 0;
    FieldTower tower = tower_for(2);
    for (const auto& gp : testgrid::in_regime_grid()) {
        if (gp.q != cur_q) {
            tower = tower_for(gp.q);
            cur_q = gp.q;
        }
        CaseParameters params = case_parameters(gp.n, gp.q);
        auto factors = factor_xn_minus_1(params, tower);

        std::map<std::pair<std::uint32_t, FactorKind>, std::uint64_t> measured;
        std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint64_t> measured_nu2;
        for (const auto& f : factors) {
            ++measured[{f.degree, f.kind}];
            if (f.kind == FactorKind::trinomial) ++measured_nu2[{f.degree, *f.nu2u}];
        }
        std::map<std::pair<std::uint32_t, FactorKind>, std::uint64_t> aggregate;
        for (const auto& pred : predicted_counts(params)) {
            if (pred.nu2u) {
                // refined per-label formula: must be reported with both
                // values; agreement is audited, not required
                auto it = measured_nu2.find({pred.degree, *pred.nu2u});
                std::uint64_t got = it == measured_nu2.end() ? 0 : it->second;
                ++audits;
                if (pred.count != got) ++flagged;
                continue;
            }
            aggregate[{pred.degree, pred.kind}] += pred.count;
        }
        for (const auto& [key, count] : aggregate) {
            auto it = measured.find(key);
            std::uint64_t got = it == measured.end() ? 0 : it->second;
            if (got != count) {
                std::printf("  aggregate count mismatch q=%u n=%u degree=%u: "
                            "predicted %llu measured %llu\n",
                            gp.q, gp.n, key.first,
                            static_cast<unsigned long long>(count),
                            static_cast<unsigned long long>(got));
                ok = false;
            }
        }
        for (const auto& [key, got] : measured)
            if (!aggregate.contains(key)) {
                std::printf("  unpredicted factor class q=%u n=%u degree=%u\n", gp.q,
                            gp.n, key.first);
                ok = false;
            }

        // every refined discrepancy must surface in the verification report
        if (params.tag == CaseTag::mixed && gp.n <= 64 && gp.q <= 9) {
            InstanceReport rep = verify_instance(tower, params, 1);
            for (const auto& a : rep.count_audit)
                if (!a.agrees && a.predicted == a.measured) {
                    std::printf("  audit entry inconsistent at q=%u n=%u\n", gp.q, gp.n);
                    ok = false;
                }
            if (rep.count_audit.empty()) {
                std::printf("  missing audit entries at q=%u n=%u\n", gp.q, gp.n);
                ok = false;
            }
        }
        ++instances;
    }
    std::printf("  %zu instances, %zu refined-formula audits (%zu flagged)\n",
                instances, audits, flagged);
    // the refined formula counts labels, so flags are expected; silent
    // divergence would show as audits == 0 on a grid with mixed instances
    if (audits == 0) ok = false;
    return ok;
}

struct Criterion {
    int number;
    const char* description;
    bool (*run)();
};

const Criterion criteria[] = {
    {1, "q=31 n=288 catalog reproduces the reference tables exactly", criterion_1},
    {2, "factor product identity and coset-oracle agreement on the grid", criterion_2},
    {3, "expanded enumerators equal brute-force distributions (q^k <= 10^6)",
     criterion_3},
    {4, "mass conservation sum A_i = q^k on every grid code", criterion_4},
    {5, "weight divisibility claim on every grid code", criterion_5},
    {6, "exhaustive weight-case and pair-count checks for q <= 9", criterion_6},
    {7, "generator independence of the code multiset", criterion_7},
    {8, "q=3 n=8 catalog: five codes with brute-force-verified distributions",
     criterion_8},
    {9, "count-formula audit: aggregates exact, refined formula flagged",
     criterion_9},
};

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    if (argc > 1) only = std::atoi(argv[1]);
    bool all_ok = true;
    for (const auto& c : criteria) {
        if (only != 0 && c.number != only) continue;
        bool ok = false;
        try {
            ok = c.run();
        } catch (const std::exception& e) {
            std::printf("  exception: %s\n", e.what());
        }
        std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", c.number,
                    c.description);
        all_ok = all_ok && ok;
    }
    return all_ok ? 0 : 1;
}
