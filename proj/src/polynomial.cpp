#include "ehrhart/polynomial.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <stdexcept>

namespace ehrhart {

std::string to_string(ComparisonResult r) {
    switch (r) {
        case ComparisonResult::Equal: return "Equal";
        case ComparisonResult::LEq: return "LEq";
        case ComparisonResult::LEqStrictPositiveDegree: return "LEq-strict-positive-degree";
        case ComparisonResult::Incomparable: return "Incomparable";
    }
    return "?";
}

Rational Polynomial::leading_coefficient() const {
    if (coeffs_.empty())
        throw std::domain_error("leading_coefficient of zero polynomial");
    return coeffs_.back();
}

Polynomial Polynomial::operator-() const {
    std::vector<Rational> c;
    c.reserve(coeffs_.size());
    for (const auto& a : coeffs_)
        c.push_back(-a);
    return Polynomial(std::move(c));
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    std::vector<Rational> c(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        c[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i)
        c[i] += o.coeffs_[i];
    return Polynomial(std::move(c));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    return *this + (-o);
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (is_zero() || o.is_zero())
        return Polynomial();
    std::vector<Rational> c(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j)
            c[i + j] += coeffs_[i] * o.coeffs_[j];
    return Polynomial(std::move(c));
}

Polynomial Polynomial::operator*(const Rational& s) const {
    std::vector<Rational> c;
    c.reserve(coeffs_.size());
    for (const auto& a : coeffs_)
        c.push_back(a * s);
    return Polynomial(std::move(c));
}

Polynomial Polynomial::operator/(const Rational& s) const {
    if (s.is_zero())
        throw std::domain_error("Polynomial: division by zero scalar");
    std::vector<Rational> c;
    c.reserve(coeffs_.size());
    for (const auto& a : coeffs_)
        c.push_back(a / s);
    return Polynomial(std::move(c));
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1)
        return Polynomial();
    std::vector<Rational> c;
    c.reserve(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i)
        c.push_back(coeffs_[i] * Rational(static_cast<long>(i)));
    return Polynomial(std::move(c));
}

Rational Polynomial::eval(const Rational& x) const {
    Rational r(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        r = r * x + *it;
    return r;
}

Polynomial Polynomial::scale_argument(const Rational& s) const {
    std::vector<Rational> c;
    c.reserve(coeffs_.size());
    Rational pow(1);
    for (const auto& a : coeffs_) {
        c.push_back(a * pow);
        pow *= s;
    }
    return Polynomial(std::move(c));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
    if (divisor.is_zero())
        throw std::domain_error("Polynomial: division by zero polynomial");
    const int dd = *divisor.degree();
    const Rational lead = divisor.leading_coefficient();
    std::vector<Rational> rem = coeffs_;
    std::vector<Rational> quo;
    if (static_cast<int>(rem.size()) - 1 >= dd)
        quo.assign(rem.size() - static_cast<size_t>(dd), Rational(0));
    int dr = static_cast<int>(rem.size()) - 1;
    while (dr >= dd) {
        if (!rem[static_cast<size_t>(dr)].is_zero()) {
            Rational f = rem[static_cast<size_t>(dr)] / lead;
            quo[static_cast<size_t>(dr - dd)] = f;
            for (int i = 0; i <= dd; ++i)
                rem[static_cast<size_t>(dr - dd + i)] -= f * divisor.coeffs_[static_cast<size_t>(i)];
        }
        --dr;
    }
    return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

std::string Polynomial::to_string(const std::string& var) const {
    if (is_zero())
        return "0";
    std::string s;
    for (int i = *degree(); i >= 0; --i) {
        const Rational& c = coeffs_[static_cast<size_t>(i)];
        if (c.is_zero())
            continue;
        if (!s.empty())
            s += c.sign() > 0 ? " + " : " - ";
        else if (c.sign() < 0)
            s += "-";
        const Rational a = abs(c);
        const bool show_coeff = i == 0 || a != Rational(1);
        if (show_coeff)
            s += a.to_string();
        if (i > 0) {
            if (show_coeff)
                s += "*";
            s += var;
            if (i > 1)
                s += "^" + std::to_string(i);
        }
    }
    return s;
}

Polynomial binomial_poly(long shift, int m) {
    if (m < 0)
        throw std::invalid_argument("binomial_poly: negative m");
    // expand the falling product (t+shift)(t+shift-1)...(t+shift-m+1)
    std::vector<Rational> c{Rational(1)};
    for (int i = 0; i < m; ++i) {
        const Rational a(shift - i);
        std::vector<Rational> next(c.size() + 1, Rational(0));
        for (size_t d = 0; d < c.size(); ++d) {
            next[d + 1] += c[d];
            next[d] += c[d] * a;
        }
        c = std::move(next);
    }
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(m));
    return Polynomial(std::move(c)) / Rational(fact);
}

ComparisonResult coeff_compare(const Polynomial& p, const Polynomial& q) {
    const Polynomial d = q - p;
    if (d.is_zero())
        return ComparisonResult::Equal;
    bool strict = true;
    const auto& c = d.coefficients();
    for (size_t i = 0; i < c.size(); ++i) {
        const int s = c[i].sign();
        if (s < 0)
            return ComparisonResult::Incomparable;
        if (s == 0 && i >= 1)
            strict = false;
    }
    return strict ? ComparisonResult::LEqStrictPositiveDegree : ComparisonResult::LEq;
}

std::vector<std::string> coefficient_strings(const Polynomial& p) {
    std::vector<std::string> out;
    out.reserve(p.coefficients().size());
    for (const auto& c : p.coefficients())
        out.push_back(c.to_string());
    return out;
}

}  // namespace ehrhart
