#pragma once

#include <gmpxx.h>

#include <utility>
#include <vector>

#include "ehrhart/matroid.hpp"
#include "ehrhart/polynomial.hpp"

namespace ehrhart {

// h*-vector of a lattice polytope: the Ehrhart polynomial written in the
// basis binom(t+d-j, d), j = 0..d, where d is the ambient dimension of the
// polytope (so the Ehrhart series has denominator (1-x)^{d+1}). Trailing
// zero coefficients are trimmed but the ambient dimension is kept, since
// degree claims are about the trimmed length.
struct HStarVector {
    std::vector<mpz_class> coeffs;
    int ambient_dim = 0;

    HStarVector() = default;
    HStarVector(std::vector<mpz_class> c, int dim) : coeffs(std::move(c)), ambient_dim(dim) {
        while (!coeffs.empty() && coeffs.back() == 0)
            coeffs.pop_back();
    }
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    bool operator==(const HStarVector& o) const {
        return coeffs == o.coeffs && ambient_dim == o.ambient_dim;
    }
};

// Sum over k = 1..a of binom(t+n-k-1, n-k) * binom(t+k-1, k-1): the lattice
// point count of the union of the first a half-open slabs of the second
// hypersimplex; the per-hyperplane correction term of the rank-2 Ehrhart
// formula. Degree n-1 for a >= 1; the zero polynomial for a = 0.
Polynomial p_poly(int a, int n);

// Ehrhart polynomial of the slab
//   { x in Delta_{2,n} : x_1+...+x_{k-1} <= 1, x_{k+1}+...+x_n <= 1 }
// (closed), or with the second inequality strict (half_open). 1 <= k <= n-1.
Polynomial ehr_q(int k, int n, bool half_open);

// Ehrhart polynomial of { x in Delta_{2,n} : x_1+...+x_l > 1 }:
// p_poly(l, n) - l * binom(t+n-2, n-1). 1 <= l <= n-1.
Polynomial ehr_r_halfopen(int l, int n);

// Ehrhart polynomial of the second hypersimplex Delta_{2,n}:
// binom(2t+n-1, n-1) - n * binom(t+n-2, n-1). n >= 2.
Polynomial ehr_hypersimplex(int n);

// Ehrhart polynomial of the minimal connected rank-2 matroid on n elements
// (hyperplane sizes n-2, 1, 1): binom(t+n-1, n-1) + (n-3) binom(t+n-2, n-1).
// n >= 3.
Polynomial ehr_minimal(int n);

// Ehrhart polynomial of the matroid base polytope. Connected (s >= 3):
// binom(2t+n-1, n-1) - sum_i p_poly(a_i, n), degree n-1. Disconnected
// (s = 2, parts m and n-m): the product of two simplices,
// binom(t+m-1, m-1) * binom(t+n-m-1, n-m-1), degree n-2.
Polynomial ehr_matroid(const Rank2Matroid& m);

// Dimension of the base polytope: n-1 iff connected, n-2 otherwise.
int polytope_dim(const Rank2Matroid& m);

// Coefficient list (index j = 0..a, entry 0 at j = 0) of
//   sum_{k=1..a} sum_{j>=1} binom(k, j) binom(n-k-1, j-1) x^j,
// the per-hyperplane correction term of the rank-2 h* formula. Not an
// h*-vector of any polytope; entries can be negative for a > n-2 (where the
// generalized binomial convention binom(-1, m) = (-1)^m applies).
std::vector<mpz_class> p_star(int a, int n);

// h*-vector of the matroid base polytope. Connected:
//   h_j = binom(n, 2j) - sum_i p_star(a_i, n)[j],  j = 0..floor(n/2),
// ambient dimension n-1. Disconnected (parts m, n-m):
//   h_j = binom(m-1, j) binom(n-m-1, j), ambient dimension n-2.
HStarVector hstar_matroid(const Rank2Matroid& m);

// Closed form for connected sparse paving matroids (lambda hyperplanes of
// size 2, n - 2*lambda of size 1):
//   h_j = binom(n, 2j) - (n+lambda)[j=1] - lambda(n-3)[j=2].
// Requires n >= 3, 0 <= lambda <= floor(n/2), and n - lambda >= 3 parts.
HStarVector hstar_sparse_paving(int n, int lambda);

// Basis changes between the monomial basis and {binom(t+d-j, d)}_{j=0..d}.
// ehr_to_hstar solves the triangular system against values at t = 0..d and
// fails (std::domain_error) if any resulting coefficient is non-integral,
// which signals that p is not the Ehrhart polynomial of a d-dimensional
// lattice polytope. Requires deg p <= d.
HStarVector ehr_to_hstar(const Polynomial& p, int d);
Polynomial hstar_to_ehr(const HStarVector& h);

// Both sides of the identity
//   binom(t+r, r) binom(t+s, s) = sum_j binom(r,j) binom(s,j) binom(t+r+s-j, r+s)
// expanded as exact polynomials; the caller asserts equality. r, s >= 0.
std::pair<Polynomial, Polynomial> suranyi_sides(int r, int s);

}  // namespace ehrhart
