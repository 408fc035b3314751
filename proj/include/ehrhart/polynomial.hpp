#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ehrhart/rational.hpp"

namespace ehrhart {

// Outcome of the coefficientwise comparison p ?= q (see coeff_compare).
enum class ComparisonResult {
    Equal,                     // q - p == 0
    LEq,                       // q - p has only nonnegative coefficients
    LEqStrictPositiveDegree,   // additionally all positive-degree coefficients
                               // of q - p are strictly positive
    Incomparable,              // q - p has a negative coefficient
};

std::string to_string(ComparisonResult r);

// Dense univariate polynomial with exact rational coefficients, ascending
// degree, trailing zeros trimmed. The zero polynomial has an empty
// coefficient list and no degree (degree() is disengaged rather than -1, so
// it cannot leak into index arithmetic).
//
// Values are immutable after construction; every operation returns a new
// polynomial.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Polynomial constant(const Rational& c) { return Polynomial({c}); }
    static Polynomial variable() { return Polynomial({Rational(0), Rational(1)}); }

    bool is_zero() const { return coeffs_.empty(); }
    std::optional<int> degree() const {
        if (coeffs_.empty())
            return std::nullopt;
        return static_cast<int>(coeffs_.size()) - 1;
    }
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    Rational coefficient(int k) const {
        if (k < 0 || k >= static_cast<int>(coeffs_.size()))
            return Rational(0);
        return coeffs_[static_cast<size_t>(k)];
    }
    Rational leading_coefficient() const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rational& c) const;
    Polynomial operator/(const Rational& c) const;
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    bool operator==(const Polynomial& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const Polynomial& o) const { return coeffs_ != o.coeffs_; }

    Polynomial derivative() const;

    // Exact Horner evaluation.
    Rational eval(const Rational& x) const;

    // p(c*t): coefficient of degree i scaled by c^i.
    Polynomial scale_argument(const Rational& c) const;

    // Euclidean division: returns (quotient, remainder) with
    // *this == quotient * divisor + remainder and deg r < deg divisor.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;

    std::string to_string(const std::string& var = "t") const;

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero())
            coeffs_.pop_back();
    }
    std::vector<Rational> coeffs_;
};

// binom(t+shift, m) = (t+shift)(t+shift-1)...(t+shift-m+1)/m!, expanded into
// monomial coefficients; the degree-m basis element of Ehrhart bases. m = 0
// yields the constant 1.
Polynomial binomial_poly(long shift, int m);

// Decides whether p <= q in the coefficientwise partial order. The strict
// variant means q - p is nonzero, has only nonnegative coefficients, and all
// its coefficients of positive degree (up to the degree of q - p itself) are
// strictly positive; the constant coefficient may be zero. Incomparable means
// only that p <= q fails.
ComparisonResult coeff_compare(const Polynomial& p, const Polynomial& q);

// Serialization used by the CLI: ascending-degree list of "num/den" strings
// in lowest terms, "/den" omitted when the denominator is 1.
std::vector<std::string> coefficient_strings(const Polynomial& p);

}  // namespace ehrhart
