#include "ehrhart/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace ehrhart {

Region Region::q(int k, int n, bool half_open) {
    if (k < 1 || k > n - 1)
        throw std::invalid_argument("Region::q: k out of range [1, n-1]");
    return {half_open ? Kind::QHalfOpen : Kind::Q, n, k};
}

Region Region::r_halfopen(int l, int n) {
    if (l < 1 || l > n - 1)
        throw std::invalid_argument("Region::r_halfopen: l out of range [1, n-1]");
    return {Kind::RHalfOpen, n, l};
}

Region Region::hypersimplex(int n) {
    if (n < 2)
        throw std::invalid_argument("Region::hypersimplex: n must be >= 2");
    return {Kind::Hypersimplex, n, 0};
}

Region Region::simplex(int n) {
    if (n < 1)
        throw std::invalid_argument("Region::simplex: n must be >= 1");
    return {Kind::Simplex, n, 0};
}

Region Region::simplex_product(int m, int n) {
    if (m < 1 || m > n - 1)
        throw std::invalid_argument("Region::simplex_product: m out of range [1, n-1]");
    return {Kind::SimplexProduct, n, m};
}

HRepresentation Region::h_rep(long t) const {
    if (t < 0)
        throw std::invalid_argument("Region::h_rep: t must be >= 0");
    HRepresentation h;
    h.ambient_dim = n;
    h.var_upper = t;
    h.coord_sum = 2 * t;
    switch (kind) {
        case Kind::Q:
        case Kind::QHalfOpen:
            if (k > 1)
                h.blocks.push_back({0, k - 1, Relation::LessEq, t});
            h.blocks.push_back({k, n, kind == Kind::QHalfOpen ? Relation::Less : Relation::LessEq, t});
            break;
        case Kind::RHalfOpen:
            h.blocks.push_back({0, k, Relation::Greater, t});
            break;
        case Kind::Hypersimplex:
            break;
        case Kind::Simplex:
            h.coord_sum = t;
            break;
        case Kind::SimplexProduct:
            h.blocks.push_back({0, k, Relation::LessEq, t});
            h.blocks.push_back({k, n, Relation::LessEq, t});
            break;
    }
    return h;
}

std::string Region::to_string() const {
    switch (kind) {
        case Kind::Q: return "Q(" + std::to_string(k) + "," + std::to_string(n) + ")";
        case Kind::QHalfOpen: return "Q~(" + std::to_string(k) + "," + std::to_string(n) + ")";
        case Kind::RHalfOpen: return "R~(" + std::to_string(k) + "," + std::to_string(n) + ")";
        case Kind::Hypersimplex: return "Delta(2," + std::to_string(n) + ")";
        case Kind::Simplex: return "Delta(1," + std::to_string(n) + ")";
        case Kind::SimplexProduct:
            return "Delta(1," + std::to_string(k) + ")xDelta(1," + std::to_string(n - k) + ")";
    }
    return "?";
}

namespace {

// Per-coordinate view of the block constraints; blocks are consecutive and
// non-overlapping by construction.
struct BlockBounds {
    long upper;   // block sum <= upper (coord_sum+1 if unconstrained)
    long lower;   // block sum >= lower (0 if unconstrained)
    int end;      // one past the block's last coordinate
};

void enumerate(const HRepresentation& h,
               const std::function<void(const std::vector<int>&)>* visitor,
               std::int64_t& count) {
    const int n = h.ambient_dim;
    if (h.coord_sum < 0)
        return;

    std::vector<BlockBounds> per_coord(static_cast<size_t>(n),
                                       {h.coord_sum + 1, 0, 0});
    for (const auto& b : h.blocks) {
        if (b.begin < 0 || b.end > n || b.begin >= b.end)
            throw std::invalid_argument("count_lattice_points: malformed block");
        BlockBounds bb{h.coord_sum + 1, 0, b.end};
        switch (b.rel) {
            case Relation::LessEq: bb.upper = b.rhs; break;
            case Relation::Less: bb.upper = b.rhs - 1; break;
            case Relation::Greater: bb.lower = b.rhs + 1; break;
        }
        for (int i = b.begin; i < b.end; ++i) {
            if (per_coord[static_cast<size_t>(i)].end != 0)
                throw std::invalid_argument("count_lattice_points: overlapping blocks");
            per_coord[static_cast<size_t>(i)] = bb;
        }
    }
    for (int i = 0; i < n; ++i)
        if (per_coord[static_cast<size_t>(i)].end == 0)
            per_coord[static_cast<size_t>(i)].end = i + 1;  // trivial one-off block

    std::vector<int> x(static_cast<size_t>(n), 0);
    // depth-first over coordinates with prefix pruning: the running sum may
    // not exceed coord_sum and the remaining coordinates must be able to
    // reach it; block sums are capped as we go and lower bounds checked at
    // each block's last coordinate.
    auto rec = [&](auto&& self, int i, long remaining, long block_sum) -> void {
        if (i == n) {
            if (remaining == 0) {
                ++count;
                if (visitor)
                    (*visitor)(x);
            }
            return;
        }
        if (remaining > static_cast<long>(n - i) * h.var_upper)
            return;
        const BlockBounds& bb = per_coord[static_cast<size_t>(i)];
        const bool last_of_block = i + 1 == bb.end;
        long hi = std::min(h.var_upper, std::min(remaining, bb.upper - block_sum));
        long lo = 0;
        if (bb.lower > 0) {
            // the rest of the block must still be able to reach the lower bound
            const long rest = static_cast<long>(bb.end - i - 1) * h.var_upper;
            lo = std::max(lo, bb.lower - block_sum - rest);
        }
        for (long v = lo; v <= hi; ++v) {
            x[static_cast<size_t>(i)] = static_cast<int>(v);
            self(self, i + 1, remaining - v, last_of_block ? 0 : block_sum + v);
        }
        x[static_cast<size_t>(i)] = 0;
    };
    rec(rec, 0, h.coord_sum, 0);
}

void check_guard(int n, long t, bool unsafe_no_guard, const char* what) {
    if (unsafe_no_guard)
        return;
    if (n > 10 || t > 8)
        throw std::domain_error(std::string(what) +
                                ": guard exceeded (n <= 10, t <= 8); pass unsafe_no_guard to override");
}

}  // namespace

std::int64_t count_lattice_points(const HRepresentation& h) {
    std::int64_t count = 0;
    enumerate(h, nullptr, count);
    return count;
}

std::int64_t count_lattice_points(const Rank2Matroid& m, long t, bool unsafe_no_guard) {
    if (t < 0)
        throw std::invalid_argument("count_lattice_points: t must be >= 0");
    check_guard(m.ground_set_size(), t, unsafe_no_guard, "count_lattice_points");
    if (t == 0)
        return 1;  // only the origin
    return count_lattice_points(h_representation(m, t));
}

std::int64_t count_region(const Region& r, long t, bool unsafe_no_guard) {
    if (t < 0)
        throw std::invalid_argument("count_region: t must be >= 0");
    check_guard(r.n, t, unsafe_no_guard, "count_region");
    return count_lattice_points(r.h_rep(t));
}

Polynomial interpolate_ehrhart(const std::vector<std::pair<long, std::int64_t>>& values,
                               int degree_bound) {
    if (degree_bound < 0)
        throw std::invalid_argument("interpolate_ehrhart: negative degree bound");
    const size_t need = static_cast<size_t>(degree_bound) + 1;
    if (values.size() < need)
        throw std::invalid_argument("interpolate_ehrhart: need degree_bound+1 points");
    for (size_t i = 0; i < values.size(); ++i)
        for (size_t j = i + 1; j < values.size(); ++j)
            if (values[i].first == values[j].first)
                throw std::invalid_argument("interpolate_ehrhart: duplicate t values");

    Polynomial p;
    for (size_t i = 0; i < need; ++i) {
        // Lagrange basis polynomial through node i, scaled by the value there
        Polynomial basis = Polynomial::constant(Rational(values[i].second));
        for (size_t j = 0; j < need; ++j) {
            if (j == i)
                continue;
            const Rational xi(values[i].first), xj(values[j].first);
            basis *= Polynomial({-xj, Rational(1)});
            basis = basis / (xi - xj);
        }
        p += basis;
    }
    for (size_t i = need; i < values.size(); ++i) {
        if (p.eval(Rational(values[i].first)) != Rational(values[i].second))
            throw std::runtime_error(
                "interpolate_ehrhart: extra evaluation point inconsistent with interpolant at t = " +
                std::to_string(values[i].first));
    }
    return p;
}

SeparationAudit separation_audit(const Rank2Matroid& m, long t, bool unsafe_no_guard) {
    if (t < 1)
        throw std::invalid_argument("separation_audit: t must be >= 1");
    check_guard(m.ground_set_size(), t, unsafe_no_guard, "separation_audit");

    const HRepresentation matroid_rep = h_representation(m, t);
    HRepresentation simplex_rep = matroid_rep;
    simplex_rep.blocks.clear();  // ambient t*Delta_{2,n}

    SeparationAudit audit;
    const std::function<void(const std::vector<int>&)> visit = [&](const std::vector<int>& x) {
        int violated = 0;
        for (const auto& b : matroid_rep.blocks) {
            long sum = 0;
            for (int i = b.begin; i < b.end; ++i)
                sum += x[static_cast<size_t>(i)];
            if (sum > b.rhs)
                ++violated;
        }
        if (violated == 0)
            return;
        ++audit.outside_points;
        if (violated != 1) {
            ++audit.bad_points;
            if (!audit.witness)
                audit.witness = x;
        }
    };
    enumerate(simplex_rep, &visit, audit.hypersimplex_points);
    audit.pass = audit.bad_points == 0;
    return audit;
}

}  // namespace ehrhart
