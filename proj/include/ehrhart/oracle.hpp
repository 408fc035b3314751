#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ehrhart/matroid.hpp"
#include "ehrhart/polynomial.hpp"

namespace ehrhart {

// Slab regions of the second hypersimplex and their relatives, enumerable by
// brute force. Half-open facets are enumerated directly with strict integer
// inequalities (block sum <= t-1 for "< t"), never by inclusion-exclusion.
struct Region {
    enum class Kind { Q, QHalfOpen, RHalfOpen, Hypersimplex, Simplex, SimplexProduct };

    Kind kind;
    int n = 0;  // ambient coordinates
    int k = 0;  // slab index k, prefix length l, or first-factor size m

    // { x in Delta_{2,n} : x_1+..+x_{k-1} <= 1, x_{k+1}+..+x_n <= 1 },
    // suffix strict if half_open. 1 <= k <= n-1.
    static Region q(int k, int n, bool half_open);
    // { x in Delta_{2,n} : x_1+..+x_l > 1 }. 1 <= l <= n-1.
    static Region r_halfopen(int l, int n);
    // Delta_{2,n} = { x in [0,1]^n : sum = 2 }. n >= 2.
    static Region hypersimplex(int n);
    // Delta_{1,n} = { x in [0,1]^n : sum = 1 }. n >= 1.
    static Region simplex(int n);
    // Delta_{1,m} x Delta_{1,n-m}, the base polytope of the disconnected
    // rank-2 matroid with parts m, n-m. 1 <= m <= n-1.
    static Region simplex_product(int m, int n);

    HRepresentation h_rep(long t) const;
    std::string to_string() const;
};

// Exact number of integer points satisfying an HRepresentation; enumerated
// lexicographically with per-prefix feasibility pruning. No guard: callers
// below enforce the desk-scale guard.
std::int64_t count_lattice_points(const HRepresentation& h);

// Lattice points of the t-th dilate of the matroid base polytope. Guard:
// n <= 10 and t <= 8 unless unsafe_no_guard (cost grows like (t+1)^n).
std::int64_t count_lattice_points(const Rank2Matroid& m, long t, bool unsafe_no_guard = false);

// As above for a region's t-th dilate.
std::int64_t count_region(const Region& r, long t, bool unsafe_no_guard = false);

// Exact Lagrange interpolation through (t, count) pairs, using the first
// degree_bound+1 points; any extra points are checked for consistency and a
// mismatch raises (signals a non-polynomial count or a bug). All t values
// must be distinct.
Polynomial interpolate_ehrhart(const std::vector<std::pair<long, std::int64_t>>& values,
                               int degree_bound);

struct SeparationAudit {
    std::int64_t hypersimplex_points = 0;  // lattice points of t*Delta_{2,n}
    std::int64_t outside_points = 0;       // of those, points outside t*P(M)
    std::int64_t bad_points = 0;           // outside points violating != 1 block inequality
    bool pass = false;                     // every outside point violates exactly one
    std::optional<std::vector<int>> witness;  // a bad point, if any
};

// Checks that every lattice point of t*Delta_{2,n} outside t*P(M) violates
// exactly one hyperplane inequality. Same guard as count_lattice_points.
SeparationAudit separation_audit(const Rank2Matroid& m, long t, bool unsafe_no_guard = false);

}  // namespace ehrhart
