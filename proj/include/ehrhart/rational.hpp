#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>

namespace ehrhart {

// Exact arbitrary-precision rational, always in lowest terms with positive
// denominator. All arithmetic is exact; there is no rounding anywhere.
//
// This is a thin layer over GMP's mpq_class whose only job is to guarantee
// the canonical-form invariant on every construction path (a raw
// mpq_class(n, d) is not canonicalized by GMP).
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}                         // NOLINT: implicit by design
    Rational(const mpz_class& n) : v_(n) {}             // NOLINT
    Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}
    Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
        if (den == 0)
            throw std::domain_error("Rational: zero denominator");
        v_.canonicalize();
    }

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(-v_); }
    Rational operator+(const Rational& o) const { return Rational(v_ + o.v_); }
    Rational operator-(const Rational& o) const { return Rational(v_ - o.v_); }
    Rational operator*(const Rational& o) const { return Rational(v_ * o.v_); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero())
            throw std::domain_error("Rational: division by zero");
        return Rational(v_ / o.v_);
    }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }
    bool operator<(const Rational& o) const { return v_ < o.v_; }
    bool operator<=(const Rational& o) const { return v_ <= o.v_; }
    bool operator>(const Rational& o) const { return v_ > o.v_; }
    bool operator>=(const Rational& o) const { return v_ >= o.v_; }

    double to_double() const { return v_.get_d(); }

    // "num/den" in lowest terms, "/den" omitted when den == 1.
    std::string to_string() const {
        std::string s = v_.get_num().get_str();
        if (v_.get_den() != 1)
            s += "/" + v_.get_den().get_str();
        return s;
    }

private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}
    mpq_class v_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

}  // namespace ehrhart
