#include "ehrhart/analysis.hpp"

#include <gmpxx.h>

#include <cmath>
#include <stdexcept>

#include "ehrhart/binomial.hpp"

namespace ehrhart {

Polynomial normalize_content(const Polynomial& p) {
    if (p.is_zero())
        return p;
    mpz_class num_gcd = 0, den_lcm = 1;
    for (const auto& c : p.coefficients()) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.numerator().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.denominator().get_mpz_t());
    }
    return p * Rational(den_lcm, num_gcd);  // num_gcd > 0: some coefficient is nonzero
}

Polynomial poly_gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = normalize_content(a.divmod(b).second);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero())
        return a;
    a = normalize_content(a);
    if (a.leading_coefficient().sign() < 0)
        a = -a;
    return a;
}

namespace {

// Sturm chain: p, p', then negated content-normalized Euclidean remainders.
std::vector<Polynomial> sturm_chain(const Polynomial& p) {
    std::vector<Polynomial> chain;
    chain.push_back(normalize_content(p));
    Polynomial d = normalize_content(p.derivative());
    while (!d.is_zero()) {
        chain.push_back(d);
        Polynomial r = chain[chain.size() - 2].divmod(d).second;
        d = normalize_content(-r);
    }
    return chain;
}

int sign_at(const Polynomial& q, const std::optional<Rational>& x, bool minus_infinity) {
    if (q.is_zero())
        return 0;
    if (!x) {
        const int lead = q.leading_coefficient().sign();
        return (minus_infinity && *q.degree() % 2 == 1) ? -lead : lead;
    }
    return q.eval(*x).sign();
}

int sign_variations(const std::vector<Polynomial>& chain,
                    const std::optional<Rational>& x, bool minus_infinity) {
    int variations = 0, prev = 0;
    for (const auto& q : chain) {
        const int s = sign_at(q, x, minus_infinity);
        if (s != 0) {
            if (prev != 0 && s != prev)
                ++variations;
            prev = s;
        }
    }
    return variations;
}

}  // namespace

int sturm_distinct_real_roots(const Polynomial& p,
                              const std::optional<Rational>& lo,
                              const std::optional<Rational>& hi) {
    if (p.is_zero())
        throw std::invalid_argument("sturm_distinct_real_roots: zero polynomial");
    if (lo && hi && !(*lo < *hi))
        throw std::invalid_argument("sturm_distinct_real_roots: empty interval");
    if (*p.degree() == 0)
        return 0;
    if ((lo && p.eval(*lo).is_zero()) || (hi && p.eval(*hi).is_zero()))
        throw std::domain_error("sturm_distinct_real_roots: endpoint is a root");
    const auto chain = sturm_chain(p);
    // Sturm: V(lo) - V(hi) counts distinct roots in (lo, hi]; since p does
    // not vanish at the endpoints this equals the open-interval count.
    return sign_variations(chain, lo, true) - sign_variations(chain, hi, false);
}

int real_root_count_with_multiplicity(const Polynomial& p) {
    if (p.is_zero())
        throw std::invalid_argument("real_root_count_with_multiplicity: zero polynomial");
    if (*p.degree() == 0)
        return 0;
    const int distinct = sturm_distinct_real_roots(p, std::nullopt, std::nullopt);
    const Polynomial g = poly_gcd(p, p.derivative());
    if (g.degree().value_or(0) == 0)
        return distinct;
    return distinct + real_root_count_with_multiplicity(g);
}

namespace {

bool is_unimodal(const std::vector<mpz_class>& h) {
    size_t i = 0;
    while (i + 1 < h.size() && h[i] <= h[i + 1])
        ++i;
    while (i + 1 < h.size() && h[i] >= h[i + 1])
        ++i;
    return i + 1 >= h.size();
}

bool is_log_concave(const std::vector<mpz_class>& h) {
    for (size_t i = 1; i + 1 < h.size(); ++i)
        if (h[i] * h[i] < h[i - 1] * h[i + 1])
            return false;
    return true;
}

}  // namespace

RootCertificate real_root_certificate(const HStarVector& h) {
    if (h.coeffs.empty())
        throw std::invalid_argument("real_root_certificate: zero coefficient list");
    std::vector<Rational> c;
    c.reserve(h.coeffs.size());
    for (const auto& a : h.coeffs)
        c.emplace_back(a);
    const Polynomial p(std::move(c));

    RootCertificate cert;
    cert.degree = h.degree();
    cert.distinct_real_roots =
        cert.degree == 0 ? 0 : sturm_distinct_real_roots(p, std::nullopt, std::nullopt);
    cert.real_rooted = real_root_count_with_multiplicity(p) == cert.degree;
    const int negative =
        cert.degree == 0 ? 0 : sturm_distinct_real_roots(p, std::nullopt, Rational(0));
    cert.all_roots_negative = !p.eval(Rational(0)).is_zero() && negative == cert.distinct_real_roots;
    cert.unimodal = is_unimodal(h.coeffs);
    cert.log_concave = is_log_concave(h.coeffs);
    return cert;
}

ComparisonResult superadditivity_check(int a, int b, int n) {
    if (a < 0 || b < 0)
        throw std::invalid_argument("superadditivity_check: a, b must be >= 0");
    if (a + b > n)
        throw std::invalid_argument("superadditivity_check: a + b must be <= n");
    return coeff_compare(p_poly(a, n) + p_poly(b, n), p_poly(a + b, n));
}

ComparisonResult stepping_check(int a, int b, int n) {
    if (a < 1 || b < a || b + 1 > n || a + b > n)
        throw std::invalid_argument("stepping_check: need 1 <= a <= b, b+1 <= n, a+b <= n");
    return coeff_compare(p_poly(a, n) + p_poly(b, n), p_poly(a - 1, n) + p_poly(b + 1, n));
}

namespace {

std::optional<std::pair<int, Rational>> first_negative(const Polynomial& d) {
    const auto& c = d.coefficients();
    for (size_t i = 0; i < c.size(); ++i)
        if (c[i].sign() < 0)
            return std::make_pair(static_cast<int>(i), c[i]);
    return std::nullopt;
}

}  // namespace

BoundsReport bounds_check(const Rank2Matroid& m) {
    if (!m.connected())
        throw std::invalid_argument("bounds_check: matroid must be connected (s >= 3)");
    const int n = m.ground_set_size();
    const Polynomial ehr = ehr_matroid(m);
    const Polynomial lower = ehr_minimal(n);
    const Polynomial upper = ehr_hypersimplex(n);

    BoundsReport report;
    report.partition = m.parts();
    const ComparisonResult lo = coeff_compare(lower, ehr);
    const ComparisonResult hi = coeff_compare(ehr, upper);
    report.lower_ok = lo != ComparisonResult::Incomparable;
    report.upper_ok = hi != ComparisonResult::Incomparable;
    report.lower_strict_posdeg = lo == ComparisonResult::LEqStrictPositiveDegree;
    report.upper_strict_posdeg = hi == ComparisonResult::LEqStrictPositiveDegree;
    if (!report.lower_ok)
        report.witness = first_negative(ehr - lower);
    else if (!report.upper_ok)
        report.witness = first_negative(upper - ehr);
    return report;
}

PositivityResult positivity_check(const Polynomial& p) {
    if (p.is_zero())
        return {false, std::make_pair(0, Rational(0))};
    const auto& c = p.coefficients();
    for (size_t i = 0; i < c.size(); ++i)
        if (c[i].sign() <= 0)
            return {false, std::make_pair(static_cast<int>(i), c[i])};
    return {true, std::nullopt};
}

double trig_identity_residual(int n, double theta) {
    if (n < 0)
        throw std::invalid_argument("trig_identity_residual: n must be >= 0");
    if (!(theta >= 0.0 && theta <= 1.45))
        throw std::invalid_argument("trig_identity_residual: theta outside guarded range [0, 1.45]");
    const double x = std::tan(theta) * std::tan(theta);
    double lhs = 0.0, pow = 1.0;
    for (int j = 0; j <= n / 2; ++j) {
        lhs += binomial(n, 2 * j).get_d() * pow;
        pow *= -x;
    }
    const double rhs = std::cos(n * theta) / std::pow(std::cos(theta), n);
    return std::abs(lhs - rhs) / std::max({1.0, std::abs(lhs), std::abs(rhs)});
}

double bounds_lemma_value(int a, int n, double y) {
    if (a != 1 && a != 2)
        throw std::invalid_argument("bounds_lemma_value: a must be 1 or 2");
    if (n < 9)
        throw std::invalid_argument("bounds_lemma_value: n must be >= 9");
    if (!(y > 0.0 && y <= 1.0))
        throw std::invalid_argument("bounds_lemma_value: y must be in (0, 1]");
    const double w = (y - 1.0) / y;
    const auto ps = p_star(a, n);
    double value = 0.0, pow = 1.0;
    for (const auto& c : ps) {
        value += c.get_d() * pow;
        pow *= w;
    }
    return std::pow(y, n / 2.0) * value;
}

}  // namespace ehrhart
