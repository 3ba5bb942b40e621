#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <thread>

#include "cycloweight/errors.hpp"
#include "cycloweight/wdist.hpp"
#include "grid.hpp"

using namespace cycloweight;

TEST_CASE("binomial enumerators") {
    WeightEnumerator e1 = enumerator_binomial(31, 288, 1);
    CHECK(e1.render() == "1+30z^288");
    CHECK(e1.min_positive_weight() == 288);

    CHECK(enumerator_binomial(31, 288, 6).render() == "(1+30z^48)^6");
    CHECK(enumerator_binomial(31, 288, 2).render() == "(1+30z^144)^2");
    // s = n gives the weight-1 base term
    CHECK(enumerator_binomial(5, 4, 4).render() == "(1+4z)^4");
    CHECK_THROWS_AS(enumerator_binomial(31, 288, 5), InvalidArgumentError);
}

TEST_CASE("trinomial minimum distance") {
    CHECK(trinomial_min_distance(288, 1, 4, 0) == 270);
    CHECK(trinomial_min_distance(288, 3, 4, 2) == 72);
    CHECK(trinomial_min_distance(8, 1, 2, 0) == 6);
    CHECK_THROWS_AS(trinomial_min_distance(10, 1, 2, 0), InconsistentParametersError);
    CHECK_THROWS_AS(trinomial_min_distance(288, 1, 4, 3), InconsistentParametersError);
}

TEST_CASE("trinomial enumerators") {
    CHECK(enumerator_trinomial(31, 288, 1, 4, 2).render() == "1+120z^216+840z^288");
    CHECK(enumerator_trinomial(31, 288, 1, 4, 1).render() == "1+240z^252+720z^288");
    CHECK(enumerator_trinomial(31, 288, 1, 4, 0).render() == "1+480z^270+480z^288");
    CHECK(enumerator_trinomial(31, 288, 3, 4, 0).render() == "(1+480z^90+480z^96)^3");
    // q = 3: the z^(n/t) count is (q-1)(q+1-4) = 0 and the term is omitted
    CHECK(enumerator_trinomial(3, 8, 1, 2, 0).render() == "1+8z^6");
    // 2^(r-nu2u) beyond q+1 would need a negative count
    CHECK_THROWS_AS(enumerator_trinomial(3, 16, 1, 3, 0), InconsistentParametersError);
}

TEST_CASE("lambda sets for the n=8, q=3 trinomial codes") {
    FieldTower t = FieldTower::build(3, 1);
    CaseParameters params = case_parameters(8, 3);
    auto fs = factor_mixed_case(params, t);
    for (const auto& f : fs) {
        if (f.kind != FactorKind::trinomial) continue;
        auto lambda = lambda_set(t, f.a, params.r, *f.nu2u);
        CHECK(lambda.size() == 3);  // 2^(r-nu2u) - 1 = 3
        CHECK(lambda.front() == Fq{0});
        // omega(g - lambda x g) = 6 exactly for lambda in the set
        Poly g = check_to_generator(t, 8, factor_poly(t, f));
        Poly xg;
        for (const auto& [deg, c] : g.terms) xg.terms.emplace(deg + 1, c);
        for (std::uint32_t lv = 0; lv < 3; ++lv) {
            Poly combo = poly_sub(t, g, poly_scale(t, Fq{lv}, xg));
            bool inside = std::find(lambda.begin(), lambda.end(), Fq{lv}) != lambda.end();
            CHECK(hamming_weight(combo) == (inside ? 6 : 8));
        }
    }
}

TEST_CASE("lambda set size and membership across a sub-grid") {
    for (const auto& gp : testgrid::in_regime_grid(9, 64)) {
        if (gp.n % 8 != 0 || gp.q % 4 != 3) continue;
        FieldTower t = FieldTower::build(gp.p, gp.e);
        CaseParameters params = case_parameters(gp.n, gp.q);
        for (const auto& f : factor_mixed_case(params, t)) {
            if (f.kind != FactorKind::trinomial) continue;
            auto lambda = lambda_set(t, f.a, params.r, *f.nu2u);
            CHECK(lambda.size() == (1ULL << (params.r - *f.nu2u)) - 1);
            CHECK(lambda.front() == Fq{0});
        }
    }
}

TEST_CASE("pair weight counts") {
    CHECK(pair_weight_count(31, 4, 2) == 120);
    CHECK(pair_weight_count(3, 2, 0) == 8);
    for (std::uint32_t q : {3u, 7u, 11u})
        CHECK(pair_weight_count(q, 5, 3) == 4u * (q - 1));  // minimal split 2^2
}

TEST_CASE("expansion") {
    // (1+2z^4)^2 expands to the brute-force distribution of the q=3, n=8
    // code with h = x^2 + 1
    WeightEnumerator e({{0, BigUInt(1)}, {4, BigUInt(2)}}, 2);
    WeightMap m = expand(e);
    REQUIRE(m.size() == 3);
    CHECK(m.at(0) == BigUInt(1));
    CHECK(m.at(4) == BigUInt(4));
    CHECK(m.at(8) == BigUInt(4));

    // total mass of (1+120z^72+840z^96)^3 is 961^3 = 31^6
    WeightEnumerator tri({{0, BigUInt(1)}, {72, BigUInt(120)}, {96, BigUInt(840)}}, 3);
    BigUInt sum;
    for (const auto& [w, c] : expand(tri)) sum += c;
    CHECK(sum == BigUInt::pow(BigUInt(31), 6));

    // outer exponent 1 leaves the base terms untouched
    WeightEnumerator flat({{0, BigUInt(1)}, {6, BigUInt(8)}}, 1);
    WeightMap fm = expand(flat);
    REQUIRE(fm.size() == 2);
    CHECK(fm.at(6) == BigUInt(8));
}

TEST_CASE("expansion cache is shared and thread-safe") {
    WeightEnumerator e({{0, BigUInt(1)}, {48, BigUInt(30)}}, 6);
    std::vector<std::shared_ptr<const WeightMap>> results(8);
    std::vector<std::thread> threads;
    for (int i = 0; i < 8; ++i)
        threads.emplace_back([&, i] { results[i] = e.expanded(); });
    for (auto& th : threads) th.join();
    for (int i = 1; i < 8; ++i) CHECK(*results[i] == *results[0]);
    BigUInt sum;
    for (const auto& [w, c] : *results[0]) sum += c;
    CHECK(sum == BigUInt::pow(BigUInt(31), 6));
}

TEST_CASE("undetected error probability") {
    WeightMap dist{{0, BigUInt(1)}, {4, BigUInt(4)}, {8, BigUInt(4)}};
    CHECK(undetected_error_probability(dist, 3, 8, 0.0) == 0.0L);
    // independent evaluation: 4*(0.3/2)^4*(0.7)^4 + 4*(0.3/2)^8
    //   = 4*(81/160000)*(2401/10000) + 4*6561/25600000000
    //   = 4.862025e-4 + 1.02515625e-6
    long double expect = 4.8722765625e-4L;
    long double got = undetected_error_probability(dist, 3, 8, 0.3);
    CHECK(std::abs(got - expect) <= 1e-15L);
    CHECK_THROWS_AS(undetected_error_probability(dist, 3, 8, 1.5), InputRangeError);
    CHECK_THROWS_AS(undetected_error_probability(dist, 3, 8, -0.1), InputRangeError);
    WeightMap bad{{0, BigUInt(2)}};
    CHECK_THROWS_AS(undetected_error_probability(bad, 3, 8, 0.1), InvalidArgumentError);
}

TEST_CASE("probability is nondecreasing in p up to (q-1)/q") {
    WeightMap dist{{0, BigUInt(1)}, {4, BigUInt(4)}, {8, BigUInt(4)}};
    long double prev = -1.0L;
    for (int i = 0; i <= 100; ++i) {
        double p = (2.0 / 3.0) * i / 100.0;
        long double v = undetected_error_probability(dist, 3, 8, p);
        CHECK(v >= prev);
        prev = v;
    }
    WeightMap d2{{0, BigUInt(1)}, {6, BigUInt(8)}};
    prev = -1.0L;
    for (int i = 0; i <= 100; ++i) {
        double p = (2.0 / 3.0) * i / 100.0;
        long double v = undetected_error_probability(d2, 3, 8, p);
        CHECK(v >= prev);
        prev = v;
    }
}

TEST_CASE("code records") {
    FieldTower t31 = FieldTower::build(31, 1);
    CaseParameters p288 = case_parameters(288, 31);
    auto factors = factor_xn_minus_1(p288, t31);

    for (const auto& f : factors) {
        if (render_poly(factor_poly(t31, f)) != "x + 1") continue;
        CodeRecord rec = build_code_record(t31, f, p288);
        CHECK(rec.k == 1);
        CHECK(rec.d == 288);
        CHECK(rec.enumerator.render() == "1+30z^288");
    }
    for (const auto& f : factors) {
        if (render_poly(factor_poly(t31, f)) != "x^2 + 8x + 1") continue;
        CodeRecord rec = build_code_record(t31, f, p288);
        CHECK(rec.k == 2);
        CHECK(rec.d == 216);
        CHECK(*f.nu2u == 2);
    }

    FieldTower t3 = FieldTower::build(3, 1);
    CaseParameters p83 = case_parameters(8, 3);
    for (const auto& f : factor_xn_minus_1(p83, t3)) {
        if (render_poly(factor_poly(t3, f)) != "x^2 + 1") continue;
        CodeRecord rec = build_code_record(t3, f, p83);
        CHECK(rec.k == 2);
        CHECK(rec.d == 4);
        auto m = *rec.enumerator.expanded();
        CHECK(m.at(0) == BigUInt(1));
        CHECK(m.at(4) == BigUInt(4));
        CHECK(m.at(8) == BigUInt(4));
    }
}

TEST_CASE("mass and divisibility invariants on a sub-grid") {
    for (const auto& gp : testgrid::in_regime_grid(9, 96)) {
        if (gp.n == 1) continue;  // x - 1 is the whole modulus, no proper code
        FieldTower t = FieldTower::build(gp.p, gp.e);
        CaseParameters params = case_parameters(gp.n, gp.q);
        for (const auto& f : factor_xn_minus_1(params, t)) {
            CodeRecord rec = build_code_record(t, f, params);
            auto dist = rec.enumerator.expanded();
            BigUInt sum;
            std::uint32_t modulus =
                f.kind == FactorKind::binomial
                    ? rec.n / f.degree
                    : rec.n / (f.t << (params.r - *f.nu2u));
            CHECK(dist->at(0) == BigUInt(1));
            for (const auto& [w, c] : *dist) {
                sum += c;
                CHECK(w <= rec.n);
                if (!c.is_zero()) CHECK(w % modulus == 0);
            }
            CHECK(sum == BigUInt::pow(BigUInt(rec.q), rec.k));
        }
    }
}

TEST_CASE("enumerator validation") {
    CHECK_THROWS_AS(WeightEnumerator({{0, BigUInt(2)}}, 1), InvalidArgumentError);
    CHECK_THROWS_AS(WeightEnumerator({{1, BigUInt(1)}}, 1), InvalidArgumentError);
    CHECK_THROWS_AS(WeightEnumerator({{0, BigUInt(1)}, {4, BigUInt(0)}}, 1),
                    InvalidArgumentError);
    CHECK_THROWS_AS(WeightEnumerator({{0, BigUInt(1)}, {4, BigUInt(2)}}, 0),
                    InvalidArgumentError);
}

TEST_CASE("distribution csv") {
    WeightMap dist{{0, BigUInt(1)}, {4, BigUInt(4)}, {8, BigUInt(4)}};
    CHECK(render_distribution_csv(dist) == "weight,count\n0,1\n4,4\n8,4\n");
}
