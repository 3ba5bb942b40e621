#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "cycloweight/errors.hpp"
#include "cycloweight/oracle.hpp"

using namespace cycloweight;

namespace {

CodeRecord record_for(const FieldTower& t, const CaseParameters& params,
                      const std::string& h) {
    for (const auto& f : factor_xn_minus_1(params, t))
        if (render_poly(factor_poly(t, f)) == h) return build_code_record(t, f, params);
    throw std::runtime_error("factor not found: " + h);
}

}  // namespace

TEST_CASE("brute force distributions") {
    FieldTower t3 = FieldTower::build(3, 1);
    CaseParameters p83 = case_parameters(8, 3);
    CodeRecord c = record_for(t3, p83, "x^2 + 1");
    WeightMap m = brute_force_distribution(t3, c, 1'000'000);
    REQUIRE(m.size() == 3);
    CHECK(m.at(0) == BigUInt(1));
    CHECK(m.at(4) == BigUInt(4));
    CHECK(m.at(8) == BigUInt(4));

    FieldTower t31 = FieldTower::build(31, 1);
    CaseParameters p288 = case_parameters(288, 31);
    CodeRecord lin = record_for(t31, p288, "x + 1");
    WeightMap lm = brute_force_distribution(t31, lin, 1'000'000);
    REQUIRE(lm.size() == 2);
    CHECK(lm.at(0) == BigUInt(1));
    CHECK(lm.at(288) == BigUInt(30));

    CodeRecord big = record_for(t31, p288, "x^6 + 5");
    CHECK_THROWS_AS(brute_force_distribution(t31, big, 1'000'000), CapExceededError);
}

TEST_CASE("chunked enumeration merges to the full distribution") {
    FieldTower t3 = FieldTower::build(3, 1);
    CaseParameters p83 = case_parameters(8, 3);
    FieldTower t5 = FieldTower::build(5, 1);
    CaseParameters p45 = case_parameters(4, 5);

    auto check_chunks = [](const FieldTower& t, const CodeRecord& c,
                           std::uint64_t total, int pieces) {
        WeightMap whole = brute_force_distribution_range(t, c, 0, total);
        for (int w = 1; w <= pieces; ++w) {
            WeightMap merged;
            for (int i = 0; i < w; ++i) {
                std::uint64_t b = total * i / w, e = total * (i + 1) / w;
                for (const auto& [wt, cnt] : brute_force_distribution_range(t, c, b, e))
                    merged[wt] += cnt;
            }
            CHECK(merged == whole);
        }
    };
    check_chunks(t3, record_for(t3, p83, "x^2 + x + 2"), 9, 4);
    check_chunks(t3, record_for(t3, p83, "x^2 + 1"), 9, 3);
    check_chunks(t5, record_for(t5, p45, "x + 2"), 5, 2);

    CodeRecord c = record_for(t3, p83, "x^2 + 1");
    CHECK_THROWS_AS(brute_force_distribution_range(t3, c, 5, 4), InvalidArgumentError);
    CHECK_THROWS_AS(brute_force_distribution_range(t3, c, 0, 10), InvalidArgumentError);
}

TEST_CASE("distribution is invariant under basis reordering") {
    // Enumerate the same code with the basis (x^j g) cyclically rotated and
    // with message digits reversed; the weight map cannot change.
    FieldTower t = FieldTower::build(3, 1);
    CaseParameters params = case_parameters(8, 3);
    for (const auto& f : factor_xn_minus_1(params, t)) {
        CodeRecord rec = build_code_record(t, f, params);
        WeightMap reference = brute_force_distribution(t, rec, 1'000'000);
        std::uint32_t k = rec.k;
        std::uint64_t total = 1;
        for (std::uint32_t i = 0; i < k; ++i) total *= 3;
        for (std::uint32_t rot = 0; rot < k; ++rot) {
            std::map<std::uint32_t, std::uint64_t> counts;
            for (std::uint64_t idx = 0; idx < total; ++idx) {
                std::vector<Fq> msg(k);
                std::uint64_t v = idx;
                for (std::uint32_t j = 0; j < k; ++j) {
                    msg[(j + rot) % k] = Fq{static_cast<std::uint32_t>(v % 3)};
                    v /= 3;
                }
                ++counts[hamming_weight(codeword(t, msg, rec.generator_poly, 8))];
            }
            WeightMap got;
            for (auto [w, c] : counts) got.emplace(w, BigUInt(c));
            CHECK(got == reference);
        }
    }
}

TEST_CASE("message count equals q^k") {
    FieldTower t7 = FieldTower::build(7, 1);
    CaseParameters p = case_parameters(16, 7);
    for (const auto& f : factor_xn_minus_1(p, t7)) {
        CodeRecord rec = build_code_record(t7, f, p);
        WeightMap m = brute_force_distribution(t7, rec, 1'000'000);
        BigUInt total;
        for (const auto& [w, c] : m) total += c;
        CHECK(total == BigUInt::pow(BigUInt(7), rec.k));
    }
}

TEST_CASE("verify_code passes on the n=8, q=3 codes") {
    FieldTower t = FieldTower::build(3, 1);
    CaseParameters params = case_parameters(8, 3);
    for (const auto& f : factor_xn_minus_1(params, t)) {
        CodeRecord rec = build_code_record(t, f, params);
        VerificationReport rep = verify_code(t, params, rec, 1'000'000);
        CHECK(rep.all_passed());
        CHECK(rep.skipped.empty());
        for (const auto& c : rep.checks) CHECK(c.pass == (c.predicted == c.measured));
    }
}

TEST_CASE("over-cap distribution check is skipped with reason cap") {
    FieldTower t = FieldTower::build(31, 1);
    CaseParameters params = case_parameters(288, 31);
    CodeRecord rec = record_for(t, params, "x^6 + 5");
    VerificationReport rep = verify_code(t, params, rec, 1'000'000);
    CHECK(rep.all_passed());  // structural checks still run and pass
    REQUIRE(rep.skipped.size() >= 1);
    bool found = false;
    for (const auto& s : rep.skipped)
        if (s.name == "distribution" && s.reason == "cap") found = true;
    CHECK(found);
    // q = 31 exceeds the exhaustive bound: lambda checks skipped for
    // trinomial codes
    CodeRecord tri = record_for(t, params, "x^2 + 8x + 1");
    VerificationReport trep = verify_code(t, params, tri, 1'000'000);
    int bound_skips = 0;
    for (const auto& s : trep.skipped)
        if (s.reason == "exhaustive bound") ++bound_skips;
    CHECK(bound_skips == 3);
}

TEST_CASE("a corrupted enumerator fails the mass check") {
    FieldTower t = FieldTower::build(3, 1);
    CaseParameters params = case_parameters(8, 3);
    CodeRecord rec = record_for(t, params, "x^2 + 1");
    // perturb one count by 1
    auto terms = rec.enumerator.base_terms();
    terms[1].second += BigUInt(1);
    rec.enumerator = WeightEnumerator(terms, rec.enumerator.outer_exponent());
    VerificationReport rep = verify_code(t, params, rec, 1'000'000);
    CHECK(!rep.all_passed());
    bool mass_failed = false;
    for (const auto& c : rep.checks)
        if (c.name == "mass" && !c.pass) mass_failed = true;
    CHECK(mass_failed);
}

TEST_CASE("verify_instance on n=8, q=3") {
    FieldTower t = FieldTower::build(3, 1);
    CaseParameters params = case_parameters(8, 3);
    InstanceReport rep = verify_instance(t, params, 1'000'000);
    CHECK(rep.all_passed());
    CHECK(rep.codes.size() == 5);
    // the per-nu2(u) label formula counts both members of each conjugate
    // pair, so the audit flags it rather than failing the run
    REQUIRE(!rep.count_audit.empty());
    bool flagged = false;
    for (const auto& a : rep.count_audit)
        if (!a.agrees && a.predicted == 2 * a.measured) flagged = true;
    CHECK(flagged);
}

TEST_CASE("verify_instance on a binomial-only instance") {
    FieldTower t = FieldTower::build(5, 1);
    CaseParameters params = case_parameters(4, 5);
    InstanceReport rep = verify_instance(t, params, 1'000'000);
    CHECK(rep.all_passed());
    CHECK(rep.count_audit.empty());
    CHECK(rep.codes.size() == 4);
}
