#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ehrhart/formulas.hpp"
#include "ehrhart/matroid.hpp"
#include "ehrhart/polynomial.hpp"

namespace ehrhart {

// Root-location and coefficient-shape facts about an h*-vector. For
// positive-coefficient polynomials, real_rooted implies log_concave implies
// unimodal; sweeps assert that chain on every certificate they produce.
struct RootCertificate {
    int degree = 0;
    int distinct_real_roots = 0;
    bool real_rooted = false;        // root count with multiplicity == degree
    bool all_roots_negative = false;
    bool unimodal = false;
    bool log_concave = false;        // h_i^2 >= h_{i-1} h_{i+1}
};

struct BoundsReport {
    std::vector<int> partition;
    bool lower_ok = false;            // ehr(minimal) <= ehr(M) coefficientwise
    bool upper_ok = false;            // ehr(M) <= ehr(uniform)
    bool lower_strict_posdeg = false;
    bool upper_strict_posdeg = false;
    std::optional<std::pair<int, Rational>> witness;  // (degree, coefficient) on failure
};

struct PositivityResult {
    bool positive = false;
    std::optional<std::pair<int, Rational>> witness;  // first coefficient <= 0
};

// Scales a nonzero polynomial by a positive rational so its coefficients
// become coprime integers; signs are preserved. Zero stays zero.
Polynomial normalize_content(const Polynomial& p);

// Polynomial gcd via the Euclidean remainder sequence, content-normalized
// with a positive leading coefficient (1 for coprime inputs).
Polynomial poly_gcd(Polynomial a, Polynomial b);

// Number of distinct real roots of p in the open interval (lo, hi), where a
// disengaged endpoint means -infinity / +infinity. Exact Sturm chains over
// rationals with content normalization. p must be nonzero and must not
// vanish at a finite endpoint.
int sturm_distinct_real_roots(const Polynomial& p,
                              const std::optional<Rational>& lo,
                              const std::optional<Rational>& hi);

// Total number of real roots counted with multiplicity, via the square-free
// recursion count(p) = distinct(p) + count(gcd(p, p')).
int real_root_count_with_multiplicity(const Polynomial& p);

// Certificate for the polynomial with coefficients h_0..h_deg.
RootCertificate real_root_certificate(const HStarVector& h);

// Classifies p_poly(a,n) + p_poly(b,n) against p_poly(a+b,n):
// Equal when a = 0 or b = 0, strict on positive-degree coefficients when
// a, b > 0. Requires a, b >= 0 and a + b <= n.
ComparisonResult superadditivity_check(int a, int b, int n);

// The stepping inequality behind superadditivity:
// p_poly(a,n) + p_poly(b,n) vs p_poly(a-1,n) + p_poly(b+1,n).
// Requires 1 <= a, b+1 <= n, a + b <= n.
ComparisonResult stepping_check(int a, int b, int n);

// Coefficientwise comparison of ehr(M) against the minimal matroid below and
// the uniform matroid above; strict on positive-degree coefficients exactly
// when M is neither minimal nor uniform. M must be connected.
BoundsReport bounds_check(const Rank2Matroid& m);

// True iff every coefficient of p up to its degree is strictly positive.
// (For Ehrhart polynomials of nonempty polytopes the constant term is 1;
// callers check that separately.)
PositivityResult positivity_check(const Polynomial& p);

// Relative residual between sum_j binom(n,2j) (-tan^2 theta)^j and
// cos(n theta)/cos^n(theta), evaluated in double precision:
// |lhs - rhs| / max(1, |lhs|, |rhs|). Requires 0 <= theta <= 1.45 (the guard
// keeps cos^n theta away from its pole at pi/2).
double trig_identity_residual(int n, double theta);

// y^{n/2} * p_star(a,n)((y-1)/y) in double precision; the quantity bounded
// strictly between -a/n and a/n. Requires a in {1,2}, n >= 9, 0 < y <= 1.
double bounds_lemma_value(int a, int n, double y);

}  // namespace ehrhart
