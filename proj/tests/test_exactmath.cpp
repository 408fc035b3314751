#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ehrhart/binomial.hpp"
#include "ehrhart/polynomial.hpp"
#include "ehrhart/rational.hpp"

using namespace ehrhart;

namespace {

Polynomial poly(std::vector<Rational> c) { return Polynomial(std::move(c)); }

Rational random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-9, 9), den(1, 9);
    return Rational(num(rng), den(rng));
}

Polynomial random_poly(std::mt19937& rng, int max_deg) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::vector<Rational> c;
    const int d = deg(rng);
    for (int i = 0; i <= d; ++i)
        c.push_back(random_rational(rng));
    return Polynomial(std::move(c));
}

}  // namespace

TEST_CASE("Rational canonical form") {
    CHECK(Rational(6, 4) == Rational(3, 2));
    CHECK(Rational(6, 4).numerator() == 3);
    CHECK(Rational(6, 4).denominator() == 2);
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(2, -4).denominator() == 2);  // sign lives in the numerator
    CHECK(Rational(0, 7).denominator() == 1);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("Rational arithmetic is exact") {
    const Rational third(1, 3);
    CHECK(third + third + third == Rational(1));
    CHECK(Rational(1, 6) + Rational(1, 10) == Rational(4, 15));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational(1) / Rational(7) == Rational(1, 7));
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK(Rational(-5, 3) < Rational(-1, 3));
    CHECK(Rational(7, 3).to_string() == "7/3");
    CHECK(Rational(-4, 2).to_string() == "-2");
}

TEST_CASE("zero polynomial has no degree") {
    const Polynomial z;
    CHECK(z.is_zero());
    CHECK(!z.degree().has_value());
    CHECK(z.eval(Rational(5)) == Rational(0));
    CHECK(z.derivative().is_zero());
    CHECK((z + z).is_zero());
    CHECK(poly({1, 2, 0, 0}).degree() == 1);  // trailing zeros trimmed
}

TEST_CASE("binomial_poly examples") {
    CHECK(binomial_poly(0, 0) == poly({1}));
    CHECK(binomial_poly(2, 3) == poly({0, Rational(1, 3), Rational(1, 2), Rational(1, 6)}));
    CHECK(binomial_poly(1, 1) == poly({1, 1}));
}

TEST_CASE("poly_eval examples") {
    CHECK(poly({1, 1}).eval(Rational(3)) == Rational(4));
    CHECK(binomial_poly(3, 3).eval(Rational(1)) == Rational(4));
    const Polynomial hyper24 = poly({1, Rational(7, 3), 2, Rational(2, 3)});
    CHECK(hyper24.eval(Rational(2)) == Rational(19));
}

TEST_CASE("poly_eval of binomial_poly matches integer binomials") {
    for (long c = -4; c <= 4; ++c)
        for (int m = 0; m <= 6; ++m)
            for (long k = std::max(0L, -c); k <= 6; ++k)
                CHECK(binomial_poly(c, m).eval(Rational(k)) == Rational(binomial(k + c, m)));
}

TEST_CASE("Pascal identity on binomial_poly") {
    for (long c = -8; c <= 8; ++c)
        for (int m = 1; m <= 8; ++m)
            CHECK(binomial_poly(c, m) == binomial_poly(c - 1, m) + binomial_poly(c - 1, m - 1));
}

TEST_CASE("coeff_compare examples") {
    const Polynomial p = poly({0, 1, 2, Rational(1, 3)});
    CHECK(coeff_compare(p, p) == ComparisonResult::Equal);

    // 2*binom(t+2,3) vs binom(t+2,3)+binom(t+1,2)(t+1): difference (2t^3+3t^2+t)/6
    const Polynomial two_p14 = binomial_poly(2, 3) * Rational(2);
    const Polynomial p24 = binomial_poly(2, 3) + binomial_poly(1, 2) * binomial_poly(1, 1);
    CHECK(coeff_compare(two_p14, p24) == ComparisonResult::LEqStrictPositiveDegree);
    CHECK(p24 - two_p14 == poly({0, Rational(1, 6), Rational(1, 2), Rational(1, 3)}));

    CHECK(coeff_compare(Polynomial::variable(), poly({1})) == ComparisonResult::Incomparable);
    CHECK(coeff_compare(poly({0, 1}), poly({0, 1, 0, 2})) == ComparisonResult::LEq);
    CHECK(coeff_compare(poly({1}), poly({2})) == ComparisonResult::LEqStrictPositiveDegree);
}

TEST_CASE("coeff_compare is a partial order preserved by nonnegative multiplication") {
    std::mt19937 rng(20240215);
    for (int iter = 0; iter < 300; ++iter) {
        const Polynomial a = random_poly(rng, 4);
        const Polynomial b = random_poly(rng, 4);
        const Polynomial c = random_poly(rng, 4);

        CHECK(coeff_compare(a, a) == ComparisonResult::Equal);

        // antisymmetry
        const bool ab = coeff_compare(a, b) != ComparisonResult::Incomparable;
        const bool ba = coeff_compare(b, a) != ComparisonResult::Incomparable;
        if (ab && ba)
            CHECK(a == b);

        // transitivity
        const bool bc = coeff_compare(b, c) != ComparisonResult::Incomparable;
        if (ab && bc)
            CHECK(coeff_compare(a, c) != ComparisonResult::Incomparable);

        // multiplication by a nonnegative polynomial preserves the order
        if (ab) {
            const Polynomial raw = random_poly(rng, 3);
            std::vector<Rational> nn;
            for (const auto& coef : raw.coefficients())
                nn.push_back(abs(coef));
            const Polynomial r(std::move(nn));
            CHECK(coeff_compare(a * r, b * r) != ComparisonResult::Incomparable);
        }
    }
}

TEST_CASE("ring laws hold exactly") {
    std::mt19937 rng(987654321);
    for (int iter = 0; iter < 200; ++iter) {
        const Polynomial p = random_poly(rng, 5);
        const Polynomial q = random_poly(rng, 5);
        const Polynomial r = random_poly(rng, 5);
        CHECK((p + q) * r == p * r + q * r);
        CHECK(p * q == q * p);
        if (!p.is_zero() && !q.is_zero())
            CHECK(*(p * q).degree() == *p.degree() + *q.degree());
    }
}

TEST_CASE("euclidean division") {
    std::mt19937 rng(55555);
    for (int iter = 0; iter < 200; ++iter) {
        const Polynomial p = random_poly(rng, 6);
        Polynomial d = random_poly(rng, 3);
        if (d.is_zero())
            d = Polynomial::variable();
        const auto [q, r] = p.divmod(d);
        CHECK(q * d + r == p);
        CHECK((r.is_zero() || *r.degree() < *d.degree()));
    }
    CHECK_THROWS_AS(poly({1}).divmod(Polynomial()), std::domain_error);
}

TEST_CASE("scale_argument substitutes c*t") {
    const Polynomial p = poly({3, 1, Rational(1, 2)});
    const Polynomial q = p.scale_argument(Rational(2));
    CHECK(q == poly({3, 2, 2}));
    CHECK(q.eval(Rational(5)) == p.eval(Rational(10)));
}

TEST_CASE("coefficient serialization") {
    const Polynomial hyper24 = poly({1, Rational(7, 3), 2, Rational(2, 3)});
    CHECK(coefficient_strings(hyper24) == std::vector<std::string>{"1", "7/3", "2", "2/3"});
    CHECK(coefficient_strings(Polynomial()).empty());
    CHECK(coefficient_strings(poly({Rational(-1, 2), 0, 1})) ==
          std::vector<std::string>{"-1/2", "0", "1"});
}
