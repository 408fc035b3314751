#include "ehrhart/formulas.hpp"

#include <algorithm>
#include <stdexcept>

#include "ehrhart/binomial.hpp"

namespace ehrhart {

Polynomial p_poly(int a, int n) {
    if (n < 1)
        throw std::invalid_argument("p_poly: n must be >= 1");
    if (a < 0 || a > n)
        throw std::invalid_argument("p_poly: a out of range [0, n]");
    Polynomial res;
    for (int k = 1; k <= a; ++k)
        res += binomial_poly(n - k - 1, n - k) * binomial_poly(k - 1, k - 1);
    return res;
}

Polynomial ehr_q(int k, int n, bool half_open) {
    if (k < 1 || k > n - 1)
        throw std::invalid_argument("ehr_q: k out of range [1, n-1]");
    const Polynomial prefix = binomial_poly(k - 1, k - 1);
    const Polynomial suffix =
        half_open ? binomial_poly(n - k - 1, n - k) : binomial_poly(n - k, n - k);
    return prefix * suffix - binomial_poly(n - 2, n - 1);
}

Polynomial ehr_r_halfopen(int l, int n) {
    if (l < 1 || l > n - 1)
        throw std::invalid_argument("ehr_r_halfopen: l out of range [1, n-1]");
    return p_poly(l, n) - binomial_poly(n - 2, n - 1) * Rational(l);
}

Polynomial ehr_hypersimplex(int n) {
    if (n < 2)
        throw std::invalid_argument("ehr_hypersimplex: n must be >= 2");
    return binomial_poly(n - 1, n - 1).scale_argument(Rational(2)) -
           binomial_poly(n - 2, n - 1) * Rational(n);
}

Polynomial ehr_minimal(int n) {
    if (n < 3)
        throw std::invalid_argument("ehr_minimal: n must be >= 3");
    return binomial_poly(n - 1, n - 1) + binomial_poly(n - 2, n - 1) * Rational(n - 3);
}

Polynomial ehr_matroid(const Rank2Matroid& m) {
    const int n = m.ground_set_size();
    if (m.connected()) {
        Polynomial res = binomial_poly(n - 1, n - 1).scale_argument(Rational(2));
        for (int a : m.parts())
            res -= p_poly(a, n);
        return res;
    }
    const int first = m.parts()[0];
    return binomial_poly(first - 1, first - 1) * binomial_poly(n - first - 1, n - first - 1);
}

int polytope_dim(const Rank2Matroid& m) {
    return m.ground_set_size() - (m.connected() ? 1 : 2);
}

std::vector<mpz_class> p_star(int a, int n) {
    if (a < 0 || a > n)
        throw std::invalid_argument("p_star: a out of range [0, n]");
    std::vector<mpz_class> c(static_cast<size_t>(a) + 1, 0);
    for (int k = 1; k <= a; ++k)
        for (int j = 1; j <= k; ++j)
            c[static_cast<size_t>(j)] += binomial(k, j) * binomial(n - k - 1, j - 1);
    return c;
}

HStarVector hstar_matroid(const Rank2Matroid& m) {
    const int n = m.ground_set_size();
    if (m.connected()) {
        std::vector<mpz_class> h(static_cast<size_t>(n / 2) + 1);
        for (int j = 0; j <= n / 2; ++j)
            h[static_cast<size_t>(j)] = binomial(n, 2 * j);
        for (int a : m.parts()) {
            const auto ps = p_star(a, n);
            for (size_t j = 0; j < ps.size() && j < h.size(); ++j)
                h[j] -= ps[j];
        }
        return HStarVector(std::move(h), n - 1);
    }
    const int first = m.parts()[0];
    const int other = n - first;
    std::vector<mpz_class> h;
    for (int j = 0; j < std::min(first, other); ++j)
        h.push_back(binomial(first - 1, j) * binomial(other - 1, j));
    return HStarVector(std::move(h), n - 2);
}

HStarVector hstar_sparse_paving(int n, int lambda) {
    if (n < 3)
        throw std::invalid_argument("hstar_sparse_paving: n must be >= 3");
    if (lambda < 0 || 2 * lambda > n)
        throw std::invalid_argument("hstar_sparse_paving: lambda out of range [0, n/2]");
    if (n - lambda < 3)
        throw std::invalid_argument("hstar_sparse_paving: fewer than 3 hyperplanes (disconnected)");
    std::vector<mpz_class> h(static_cast<size_t>(n / 2) + 1);
    for (int j = 0; j <= n / 2; ++j)
        h[static_cast<size_t>(j)] = binomial(n, 2 * j);
    h[1] -= n + lambda;
    if (h.size() > 2)
        h[2] -= mpz_class(lambda) * (n - 3);
    return HStarVector(std::move(h), n - 1);
}

HStarVector ehr_to_hstar(const Polynomial& p, int d) {
    if (d < 0)
        throw std::invalid_argument("ehr_to_hstar: negative dimension");
    if (p.degree().value_or(-1) > d)
        throw std::invalid_argument("ehr_to_hstar: deg p exceeds d");
    // basis_j(t) = binom(t+d-j, d) vanishes at t = 0..j-1 and is 1 at t = j,
    // so the system against values at t = 0..d is unitriangular.
    std::vector<mpz_class> h;
    for (int i = 0; i <= d; ++i) {
        Rational v = p.eval(Rational(i));
        for (int j = 0; j < i; ++j)
            v -= Rational(h[static_cast<size_t>(j)]) * Rational(binomial(i + d - j, d));
        if (!v.is_integer())
            throw std::domain_error(
                "ehr_to_hstar: non-integral coefficient; input is not an Ehrhart polynomial "
                "of a lattice polytope of dimension " + std::to_string(d));
        h.push_back(v.numerator());
    }
    return HStarVector(std::move(h), d);
}

Polynomial hstar_to_ehr(const HStarVector& h) {
    Polynomial res;
    for (size_t j = 0; j < h.coeffs.size(); ++j)
        res += binomial_poly(h.ambient_dim - static_cast<long>(j), h.ambient_dim) *
               Rational(h.coeffs[j]);
    return res;
}

std::pair<Polynomial, Polynomial> suranyi_sides(int r, int s) {
    if (r < 0 || s < 0)
        throw std::invalid_argument("suranyi_sides: r, s must be >= 0");
    const Polynomial lhs = binomial_poly(r, r) * binomial_poly(s, s);
    Polynomial rhs;
    for (int j = 0; j <= std::min(r, s); ++j)
        rhs += binomial_poly(r + s - j, r + s) * Rational(mpz_class(binomial(r, j) * binomial(s, j)));
    return {lhs, rhs};
}

}  // namespace ehrhart
