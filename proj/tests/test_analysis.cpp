#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ehrhart/analysis.hpp"
#include "ehrhart/formulas.hpp"

using namespace ehrhart;

namespace {

Polynomial poly(std::vector<Rational> c) { return Polynomial(std::move(c)); }

}  // namespace

TEST_CASE("content normalization and gcd") {
    CHECK(normalize_content(poly({Rational(1, 2), Rational(3, 2)})) == poly({1, 3}));
    CHECK(normalize_content(poly({-4, -6})) == poly({-2, -3}));  // sign preserved

    const Polynomial a = poly({1, 1}) * poly({1, 1});            // (t+1)^2
    const Polynomial b = poly({1, 1}) * poly({2, 1});            // (t+1)(t+2)
    CHECK(poly_gcd(a, b) == poly({1, 1}));
    CHECK(poly_gcd(poly({1, 1}), poly({1, 0, 1})) == poly({1})); // coprime
    CHECK(poly_gcd(a, Polynomial()) == a);
}

TEST_CASE("Sturm root counts") {
    CHECK(sturm_distinct_real_roots(poly({1, 2, 1}), std::nullopt, std::nullopt) == 1);
    CHECK(sturm_distinct_real_roots(poly({1, 5, 5}), std::nullopt, Rational(0)) == 2);
    CHECK(sturm_distinct_real_roots(poly({1, 1, 1}), std::nullopt, std::nullopt) == 0);
    CHECK(sturm_distinct_real_roots(poly({-2, 0, 1}), Rational(0), std::nullopt) == 1);  // sqrt(2)
    CHECK(sturm_distinct_real_roots(poly({-2, 0, 1}), Rational(-2), Rational(2)) == 2);
    CHECK(sturm_distinct_real_roots(poly({5}), std::nullopt, std::nullopt) == 0);
    CHECK_THROWS_AS(sturm_distinct_real_roots(Polynomial(), std::nullopt, std::nullopt),
                    std::invalid_argument);
    CHECK_THROWS_AS(sturm_distinct_real_roots(poly({0, 1}), std::nullopt, Rational(0)),
                    std::domain_error);  // endpoint is a root
    CHECK_THROWS_AS(sturm_distinct_real_roots(poly({1, 1}), Rational(2), Rational(1)),
                    std::invalid_argument);
}

TEST_CASE("real root count with multiplicity") {
    CHECK(real_root_count_with_multiplicity(poly({1, 2, 1})) == 2);        // (1+t)^2
    CHECK(real_root_count_with_multiplicity(poly({1, 3, 3, 1})) == 3);     // (1+t)^3
    CHECK(real_root_count_with_multiplicity(poly({1, 1, 1})) == 0);
    CHECK(real_root_count_with_multiplicity(poly({0, 0, 1})) == 2);        // t^2
    const Polynomial mixed = poly({1, 1}) * poly({1, 1}) * poly({1, 0, 1});
    CHECK(real_root_count_with_multiplicity(mixed) == 2);
}

TEST_CASE("root certificates") {
    const RootCertificate c121 = real_root_certificate(HStarVector({1, 2, 1}, 3));
    CHECK(c121.real_rooted);
    CHECK(c121.distinct_real_roots == 1);
    CHECK(c121.all_roots_negative);
    CHECK(c121.unimodal);
    CHECK(c121.log_concave);

    const RootCertificate c155 = real_root_certificate(HStarVector({1, 5, 5}, 4));
    CHECK(c155.real_rooted);
    CHECK(c155.distinct_real_roots == 2);
    CHECK(c155.all_roots_negative);

    const RootCertificate c111 = real_root_certificate(HStarVector({1, 1, 1}, 4));
    CHECK(!c111.real_rooted);
    CHECK(c111.unimodal);
    CHECK(c111.log_concave);

    const RootCertificate c1 = real_root_certificate(HStarVector({1}, 2));
    CHECK(c1.degree == 0);
    CHECK(c1.real_rooted);
    CHECK(c1.all_roots_negative);

    CHECK_THROWS_AS(real_root_certificate(HStarVector({}, 2)), std::invalid_argument);
}

TEST_CASE("unimodality and log-concavity flags") {
    CHECK(!real_root_certificate(HStarVector({1, 3, 2, 4}, 5)).unimodal);
    CHECK(real_root_certificate(HStarVector({1, 4, 4, 2}, 5)).unimodal);
    // 1, 4, 2, 4 is neither log-concave (2*2 < 4*4) nor unimodal
    const RootCertificate c = real_root_certificate(HStarVector({1, 4, 2, 4}, 5));
    CHECK(!c.log_concave);
    CHECK(!c.unimodal);
}

TEST_CASE("superadditivity_check") {
    CHECK(superadditivity_check(0, 5, 9) == ComparisonResult::Equal);
    CHECK(superadditivity_check(5, 0, 9) == ComparisonResult::Equal);
    CHECK(superadditivity_check(1, 1, 4) == ComparisonResult::LEqStrictPositiveDegree);
    CHECK(p_poly(2, 4) - p_poly(1, 4) * Rational(2) ==
          poly({0, Rational(1, 6), Rational(1, 2), Rational(1, 3)}));
    CHECK(superadditivity_check(2, 3, 8) == ComparisonResult::LEqStrictPositiveDegree);
    CHECK_THROWS_AS(superadditivity_check(5, 5, 9), std::invalid_argument);
    CHECK_THROWS_AS(superadditivity_check(-1, 2, 9), std::invalid_argument);
}

TEST_CASE("superadditivity at a+b = n stays strict despite the degree drop") {
    // the difference loses its top coefficient here, e.g. for (1,3,4) it is
    // (t^2+3t+2)/2; strictness is about the difference's own coefficients
    CHECK(p_poly(4, 4) - p_poly(1, 4) - p_poly(3, 4) ==
          poly({1, Rational(3, 2), Rational(1, 2)}));
    CHECK(superadditivity_check(1, 3, 4) == ComparisonResult::LEqStrictPositiveDegree);
    CHECK(superadditivity_check(2, 2, 4) == ComparisonResult::LEqStrictPositiveDegree);
    for (int n = 2; n <= 12; ++n)
        for (int a = 1; 2 * a <= n; ++a)
            CHECK(superadditivity_check(a, n - a, n) ==
                  ComparisonResult::LEqStrictPositiveDegree);
}

TEST_CASE("stepping inequality") {
    for (int n = 2; n <= 12; ++n)
        for (int a = 1; a <= n; ++a)
            for (int b = a; a + b <= n && b + 1 <= n; ++b)
                CHECK(stepping_check(a, b, n) == ComparisonResult::LEqStrictPositiveDegree);
    CHECK_THROWS_AS(stepping_check(0, 3, 5), std::invalid_argument);
    CHECK_THROWS_AS(stepping_check(3, 2, 9), std::invalid_argument);
}

TEST_CASE("bounds_check") {
    const BoundsReport mid = bounds_check(Rank2Matroid({2, 1, 1, 1}));
    CHECK(mid.lower_ok);
    CHECK(mid.upper_ok);
    CHECK(mid.lower_strict_posdeg);
    CHECK(mid.upper_strict_posdeg);
    CHECK(!mid.witness);

    const BoundsReport uni = bounds_check(Rank2Matroid({1, 1, 1, 1, 1}));
    CHECK(uni.lower_ok);
    CHECK(uni.upper_ok);
    CHECK(uni.lower_strict_posdeg);
    CHECK(!uni.upper_strict_posdeg);  // M is the upper endpoint

    const BoundsReport min = bounds_check(Rank2Matroid({3, 1, 1}));
    CHECK(min.lower_ok);
    CHECK(min.upper_ok);
    CHECK(!min.lower_strict_posdeg);  // M is the lower endpoint
    CHECK(min.upper_strict_posdeg);

    CHECK_THROWS_AS(bounds_check(Rank2Matroid({3, 2})), std::invalid_argument);
}

TEST_CASE("bounds with expected strictness across n <= 10") {
    for (int n = 3; n <= 10; ++n)
        for (const auto& m : enumerate_partitions(n, 3)) {
            const Classification cls = classify(m);
            const BoundsReport r = bounds_check(m);
            CHECK(r.lower_ok);
            CHECK(r.upper_ok);
            CHECK(r.lower_strict_posdeg == !cls.minimal);
            CHECK(r.upper_strict_posdeg == !cls.uniform);
        }
}

TEST_CASE("positivity_check") {
    CHECK(positivity_check(ehr_matroid(Rank2Matroid({2, 2, 1}))).positive);
    const PositivityResult bad = positivity_check(poly({0, -1, 1}));  // t^2 - t
    CHECK(!bad.positive);
    REQUIRE(bad.witness.has_value());
    CHECK(bad.witness->first == 0);  // the constant 0 already fails
    const PositivityResult neg = positivity_check(poly({1, -1, 1}));
    REQUIRE(neg.witness.has_value());
    CHECK(neg.witness->first == 1);
    CHECK(neg.witness->second == Rational(-1));
    CHECK(!positivity_check(Polynomial()).positive);

    for (int n = 2; n <= 12; ++n)
        for (const auto& m : enumerate_partitions(n, 2))
            CHECK(positivity_check(ehr_matroid(m)).positive);
}

TEST_CASE("trig identity spot checks") {
    const double pi = std::acos(-1.0);
    CHECK(trig_identity_residual(4, pi / 6) < 1e-12);
    // both sides equal -8/9 there
    const double x = std::pow(std::tan(pi / 6), 2);
    const double lhs = 1.0 - 6.0 * x + x * x;
    CHECK(lhs == doctest::Approx(-8.0 / 9.0).epsilon(1e-12));
    for (int n = 0; n <= 20; ++n)
        CHECK(trig_identity_residual(n, 0.0) == 0.0);
    CHECK(trig_identity_residual(7, 0.3) < 1e-9);

    for (int n = 0; n <= 20; ++n)
        for (int i = 0; i < 50; ++i)
            CHECK(trig_identity_residual(n, 1.45 * i / 49) < 1e-9);

    CHECK_THROWS_AS(trig_identity_residual(4, 1.55), std::invalid_argument);
    CHECK_THROWS_AS(trig_identity_residual(-1, 0.5), std::invalid_argument);
}

TEST_CASE("bounds lemma spot checks") {
    CHECK(bounds_lemma_value(1, 9, 1.0) == 0.0);
    CHECK(bounds_lemma_value(1, 9, 7.0 / 9.0) == doctest::Approx(-0.0922).epsilon(1e-2));
    const double v = bounds_lemma_value(2, 12, 0.9);
    CHECK(v > -1.0 / 6.0);
    CHECK(v < 1.0 / 6.0);

    for (int a = 1; a <= 2; ++a)
        for (int n = 9; n <= 50; ++n)
            for (int i = 1; i <= 100; ++i) {
                const double val = bounds_lemma_value(a, n, i / 100.0);
                const double bound = static_cast<double>(a) / n;
                CHECK(val < bound - 1e-9);
                CHECK(val > -bound + 1e-9);
            }

    CHECK_THROWS_AS(bounds_lemma_value(3, 12, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(bounds_lemma_value(1, 8, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(bounds_lemma_value(1, 9, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(bounds_lemma_value(1, 9, 1.5), std::invalid_argument);
}

TEST_CASE("sparse paving certificates up to n = 15") {
    for (int n = 4; n <= 15; ++n)
        for (int lambda = 0; 2 * lambda <= n && n - lambda >= 3; ++lambda) {
            std::vector<int> parts(static_cast<size_t>(lambda), 2);
            parts.insert(parts.end(), static_cast<size_t>(n - 2 * lambda), 1);
            const HStarVector h = hstar_matroid(Rank2Matroid(parts));
            if (h.coeffs == std::vector<mpz_class>{1, 1})
                continue;  // the n = 4, lambda = 1 base case
            const RootCertificate c = real_root_certificate(h);
            CHECK(c.real_rooted);
            CHECK(c.all_roots_negative);
            CHECK(c.degree == n / 2);
            // real-rooted with positive coefficients forces the rest
            CHECK(c.log_concave);
            CHECK(c.unimodal);
        }
}
